#pragma once

// Test-only oracles that avoid the Groebner path entirely: dense exact linear
// algebra over Q on graded pieces, used to cross-check normal forms, Hilbert
// functions and membership.

#include <map>

#include "seqcm/presented_module.hpp"

namespace seqcm::oracle {

using Row = std::vector<Rational>;

// Row-reduces in place, returns the rank.
inline int gauss_rank(std::vector<Row>& rows) {
  if (rows.empty()) return 0;
  size_t cols = rows[0].size();
  int rank = 0;
  for (size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (size_t r = rank; r < rows.size(); ++r)
      if (sgn(rows[r][c]) != 0) {
        piv = static_cast<int>(r);
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    Rational inv = 1 / rows[rank][c];
    for (size_t j = c; j < cols; ++j) rows[rank][j] *= inv;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) == rank || sgn(rows[r][c]) == 0) continue;
      Rational f = rows[r][c];
      for (size_t j = c; j < cols; ++j) rows[r][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

// Basis of the monomial terms of degree k in F0 (component, monomial).
struct GradeBasis {
  std::vector<std::pair<int, Monomial>> elems;
  std::map<std::pair<int, std::vector<int>>, int> index;

  GradeBasis(const FreeModule& F0, int k) {
    for (int i = 0; i < F0.rank(); ++i) {
      int d = k - F0.twists[i];
      enumerate_monomials(F0.ring->nvars(), d, [&](const Monomial& m) {
        index[{i, m.e}] = static_cast<int>(elems.size());
        elems.push_back({i, m});
      });
    }
  }

  Row row_of(const FreeElement& v) const {
    Row r(elems.size(), Rational(0));
    for (int i = 0; i < v.mod.rank(); ++i)
      for (const auto& t : v.coords[i].terms()) {
        auto it = index.find({i, t.mono.e});
        if (it == index.end()) throw std::logic_error("oracle: term outside graded piece");
        r[it->second] = t.coeff;
      }
    return r;
  }
};

// All products m * g of the generators landing in degree k.
inline std::vector<Row> degree_piece_rows(const FreeModule& F0,
                                          const std::vector<FreeElement>& gens, int k,
                                          const GradeBasis& basis) {
  std::vector<Row> rows;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    int d = k - g.degree();
    if (d < 0) continue;
    enumerate_monomials(F0.ring->nvars(), d, [&](const Monomial& m) {
      FreeElement mg = g;
      for (auto& c : mg.coords) c = c.times_monomial(m, Rational(1));
      rows.push_back(basis.row_of(mg));
    });
  }
  return rows;
}

inline int degree_piece_rank(const FreeModule& F0, const std::vector<FreeElement>& gens, int k) {
  GradeBasis basis(F0, k);
  auto rows = degree_piece_rows(F0, gens, k, basis);
  return gauss_rank(rows);
}

// v in the submodule spanned by homogeneous generators? Checked per graded
// piece, so inhomogeneous v is fine.
inline bool member(const FreeModule& F0, const std::vector<FreeElement>& gens,
                   const FreeElement& v) {
  if (v.is_zero()) return true;
  std::map<int, FreeElement> parts;
  for (int i = 0; i < v.mod.rank(); ++i)
    for (const auto& t : v.coords[i].terms()) {
      int deg = t.mono.degree() + v.mod.twists[i];
      auto it = parts.find(deg);
      if (it == parts.end()) it = parts.emplace(deg, FreeElement::zero(F0)).first;
      it->second.coords[i] =
          it->second.coords[i] + Polynomial::monomial(F0.ring, t.mono, t.coeff);
    }
  for (const auto& [k, part] : parts) {
    GradeBasis basis(F0, k);
    auto rows = degree_piece_rows(F0, gens, k, basis);
    int rank = gauss_rank(rows);
    rows.push_back(basis.row_of(part));
    if (gauss_rank(rows) != rank) return false;
  }
  return true;
}

// dim_Q of the degree-k piece of F0 / span(gens).
inline long long hilbert_value(const FreeModule& F0, const std::vector<FreeElement>& gens,
                               int k) {
  GradeBasis basis(F0, k);
  auto rows = degree_piece_rows(F0, gens, k, basis);
  return static_cast<long long>(basis.elems.size()) - gauss_rank(rows);
}

}  // namespace seqcm::oracle
