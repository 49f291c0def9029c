#pragma once

// Independent oracle for attached primes of squarefree monomial quotients:
// reduced simplicial homology of links over Q. The prime (x_j : j not in F)
// is attached to H^i_m(S/I) exactly when the link of the face F carries
// reduced homology in degree i - |F| - 1.

#include "oracle.hpp"
#include "seqcm/monomial_tools.hpp"

namespace seqcm::oracle {

struct Complex {
  int n = 0;
  std::vector<VarMask> faces;  // all faces incl. the empty face, when nonvoid

  bool has_face(VarMask f) const {
    return std::find(faces.begin(), faces.end(), f) != faces.end();
  }
};

inline Complex stanley_reisner_complex(const MonomialIdeal& I) {
  Complex c;
  c.n = I.ring()->nvars();
  for (VarMask f = 0; f < (VarMask(1) << c.n); ++f) {
    Monomial m(c.n);
    for (int i = 0; i < c.n; ++i)
      if (f & (VarMask(1) << i)) m.e[i] = 1;
    if (!I.contains(m)) c.faces.push_back(f);
  }
  return c;
}

inline Complex link(const Complex& c, VarMask f) {
  Complex l;
  l.n = c.n;
  for (VarMask g : c.faces)
    if ((g & f) == 0 && c.has_face(g | f)) l.faces.push_back(g);
  return l;
}

// dim_Q of reduced homology in degree k (k = -1 handles the empty complex).
inline long long reduced_homology_rank(const Complex& c, int k) {
  auto faces_of_card = [&](int card) {
    std::vector<VarMask> out;
    for (VarMask f : c.faces)
      if (mask_size(f) == card) out.push_back(f);
    std::sort(out.begin(), out.end());
    return out;
  };
  // boundary matrix C_k -> C_{k-1} over faces of cardinality k+1 and k
  auto boundary_rank = [&](int deg) -> int {
    auto rows = faces_of_card(deg);       // target: cardinality deg = (deg-1)+1
    auto cols = faces_of_card(deg + 1);   // source
    if (rows.empty() || cols.empty()) return 0;
    std::vector<Row> m(cols.size(), Row(rows.size(), Rational(0)));
    for (size_t j = 0; j < cols.size(); ++j) {
      int sign = 1;
      VarMask f = cols[j];
      for (int v = 0; v < c.n; ++v) {
        if (!(f & (VarMask(1) << v))) continue;
        VarMask sub = f & ~(VarMask(1) << v);
        auto it = std::lower_bound(rows.begin(), rows.end(), sub);
        m[j][it - rows.begin()] = Rational(sign);
        sign = -sign;
      }
    }
    return gauss_rank(m);
  };
  long long ck = static_cast<long long>(faces_of_card(k + 1).size());
  if (ck == 0) return 0;
  return ck - boundary_rank(k + 1) - boundary_rank(k);
}

// The oracle: attached primes of H^i_m(S/I) for squarefree I.
inline PrimeSet hochster_attached(const MonomialIdeal& I, int i) {
  Complex delta = stanley_reisner_complex(I);
  VarMask all = (VarMask(1) << delta.n) - 1;
  PrimeSet out;
  for (VarMask f : delta.faces) {
    int k = i - mask_size(f) - 1;
    if (k < -1) continue;
    if (reduced_homology_rank(link(delta, f), k) > 0)
      out.push_back(MonomialPrime{static_cast<VarMask>(all & ~f)});
  }
  sort_unique(out);
  return out;
}

}  // namespace seqcm::oracle
