#include "seqcm/homology.hpp"

#include <stdexcept>

namespace seqcm {

GradedMatrix GradedMatrix::from_columns(const FreeModule& target,
                                        const std::vector<FreeElement>& columns) {
  GradedMatrix m;
  m.ring = target.ring;
  m.row_twists = target.twists;
  for (const auto& c : columns) m.col_twists.push_back(c.degree());
  m.a.assign(m.rows(), std::vector<Polynomial>(m.cols(), Polynomial::zero(m.ring)));
  for (int c = 0; c < m.cols(); ++c)
    for (int r = 0; r < m.rows(); ++r) m.a[r][c] = columns[c].coords[r];
  return m;
}

std::vector<FreeElement> GradedMatrix::to_columns() const {
  FreeModule tgt = target();
  std::vector<FreeElement> cols;
  for (int c = 0; c < this->cols(); ++c) {
    std::vector<Polynomial> coords;
    for (int r = 0; r < rows(); ++r) coords.push_back(a[r][c]);
    cols.push_back(FreeElement(tgt, std::move(coords)));
  }
  return cols;
}

GradedMatrix GradedMatrix::transpose() const {
  GradedMatrix t;
  t.ring = ring;
  for (int tw : col_twists) t.row_twists.push_back(-tw);
  for (int tw : row_twists) t.col_twists.push_back(-tw);
  t.a.assign(t.rows(), std::vector<Polynomial>(t.cols(), Polynomial::zero(ring)));
  for (int r = 0; r < rows(); ++r)
    for (int c = 0; c < cols(); ++c) t.a[c][r] = a[r][c];
  return t;
}

GradedMatrix multiply(const GradedMatrix& f, const GradedMatrix& g) {
  if (f.cols() != g.rows()) throw std::invalid_argument("matrix product shape mismatch");
  GradedMatrix m;
  m.ring = f.ring;
  m.row_twists = f.row_twists;
  m.col_twists = g.col_twists;
  m.a.assign(m.rows(), std::vector<Polynomial>(m.cols(), Polynomial::zero(m.ring)));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      for (int k = 0; k < f.cols(); ++k) m.a[r][c] = m.a[r][c] + f.a[r][k] * g.a[k][c];
  return m;
}

bool is_zero_matrix(const GradedMatrix& m) {
  for (const auto& row : m.a)
    for (const auto& p : row)
      if (!p.is_zero()) return false;
  return true;
}

namespace {

// Interreduce a set that is already a Groebner basis for ord.
std::vector<VecPoly> interreduce(std::vector<VecPoly> g, const ModuleOrder& ord) {
  auto reduce_all = [&](VecPoly f, const std::vector<VecPoly>& basis) {
    std::vector<VTerm> out;
    while (!f.is_zero()) {
      bool hit = false;
      for (const auto& b : basis) {
        if (b.is_zero()) continue;
        const VTerm& bl = b.lead();
        const VTerm& lt = f.lead();
        if (bl.comp != lt.comp || !divides(bl.mono, lt.mono)) continue;
        f = axpy(f, lt.coeff / bl.coeff, quotient(lt.mono, bl.mono), b, ord);
        hit = true;
        break;
      }
      if (!hit) {
        out.push_back(f.terms.front());
        f.terms.erase(f.terms.begin());
      }
    }
    VecPoly r;
    r.terms = std::move(out);
    return r;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t k = 0; k < g.size(); ++k) {
      VecPoly self = std::move(g[k]);
      g[k] = VecPoly{};
      size_t nt = self.terms.size();
      auto first = self.is_zero() ? VTerm{-1, Monomial(), Rational(0)} : self.terms.front();
      VecPoly r = reduce_all(std::move(self), g);
      if (!r.is_zero() && !is_one(r.lead().coeff)) {
        Rational inv = 1 / r.lead().coeff;
        for (auto& t : r.terms) t.coeff *= inv;
      }
      if (r.terms.size() != nt ||
          (!r.is_zero() && (r.lead().comp != first.comp || !(r.lead().mono == first.mono))))
        changed = true;
      g[k] = std::move(r);
    }
    g.erase(std::remove_if(g.begin(), g.end(), [](const VecPoly& v) { return v.is_zero(); }),
            g.end());
  }
  return g;
}

// Sort basis elements by lead component, then lex-descending lead monomial;
// this ordering makes each Schreyer level drop the earliest variable still
// present, so the tower stops within nvars + 2 levels.
void sort_for_tower(std::vector<VecPoly>& g) {
  std::sort(g.begin(), g.end(), [](const VecPoly& a, const VecPoly& b) {
    if (a.lead().comp != b.lead().comp) return a.lead().comp < b.lead().comp;
    return cmp_mono(a.lead().mono, b.lead().mono, BaseOrder::Lex) > 0;
  });
}

}  // namespace

FreeResolution free_resolution(const PresentedModule& M, bool minimal) {
  FreeResolution res;
  res.f0 = M.f0();
  if (M.relations().empty()) {
    res.minimal = true;
    return res;
  }
  const int n = M.ring()->nvars();

  ModuleOrder ord = ModuleOrder::top();
  FreeModule ambient = M.f0();
  GroebnerBasis gb = groebner(Submodule{ambient, M.relations()}, ord);

  int level = 0;
  while (!gb.elems.empty()) {
    if (++level > n + 3) throw std::logic_error("free_resolution: tower failed to terminate");
    sort_for_tower(gb.elems);
    std::vector<FreeElement> cols;
    for (const auto& e : gb.elems) cols.push_back(to_free_element(ambient, e));
    res.mats.push_back(GradedMatrix::from_columns(ambient, cols));

    SyzygyModule syz = syzygies_of_basis(gb);
    gb.ambient = syz.ambient;
    gb.order = syz.schreyer_order;
    gb.elems = interreduce(std::move(syz.gens), syz.schreyer_order);
    gb.reduced = true;
    ambient = syz.ambient;
  }

  if (minimal) {
    // Pivot away unit entries; each pivot splits off a trivial S -> S summand.
    bool found = true;
    while (found) {
      found = false;
      for (size_t k = 0; k < res.mats.size() && !found; ++k) {
        GradedMatrix& phi = res.mats[k];
        for (int r = 0; r < phi.rows() && !found; ++r) {
          for (int c = 0; c < phi.cols() && !found; ++c) {
            const Polynomial& e = phi.a[r][c];
            if (e.is_zero() || e.degree() != 0) continue;
            found = true;
            Rational u = e.leading_term().coeff;
            // column ops on phi, mirrored as row ops on mats[k+1]
            for (int j = 0; j < phi.cols(); ++j) {
              if (j == c || phi.a[r][j].is_zero()) continue;
              Polynomial lam = phi.a[r][j].scaled(1 / u);
              for (int i = 0; i < phi.rows(); ++i)
                phi.a[i][j] = phi.a[i][j] - lam * phi.a[i][c];
              if (k + 1 < res.mats.size()) {
                GradedMatrix& nxt = res.mats[k + 1];
                for (int cc = 0; cc < nxt.cols(); ++cc)
                  nxt.a[c][cc] = nxt.a[c][cc] + lam * nxt.a[j][cc];
              }
            }
            // row ops on phi, mirrored as column ops on mats[k-1]
            for (int i = 0; i < phi.rows(); ++i) {
              if (i == r || phi.a[i][c].is_zero()) continue;
              Polynomial mu = phi.a[i][c].scaled(1 / u);
              for (int j = 0; j < phi.cols(); ++j)
                phi.a[i][j] = phi.a[i][j] - mu * phi.a[r][j];
              if (k > 0) {
                GradedMatrix& prv = res.mats[k - 1];
                for (int rr = 0; rr < prv.rows(); ++rr)
                  prv.a[rr][r] = prv.a[rr][r] + mu * prv.a[rr][i];
              }
            }
            // complexes force the crossing row/column to vanish now
            if (k + 1 < res.mats.size()) {
              for (int cc = 0; cc < res.mats[k + 1].cols(); ++cc)
                if (!res.mats[k + 1].a[c][cc].is_zero())
                  throw std::logic_error("minimalization: nonzero crossing row");
            }
            if (k > 0) {
              for (int rr = 0; rr < res.mats[k - 1].rows(); ++rr)
                if (!res.mats[k - 1].a[rr][r].is_zero())
                  throw std::logic_error("minimalization: nonzero crossing column");
            }
            // delete row r and column c of phi, row c of mats[k+1], column r
            // of mats[k-1]
            auto drop_row = [](GradedMatrix& m, int row) {
              m.a.erase(m.a.begin() + row);
              m.row_twists.erase(m.row_twists.begin() + row);
            };
            auto drop_col = [](GradedMatrix& m, int col) {
              for (auto& rr : m.a) rr.erase(rr.begin() + col);
              m.col_twists.erase(m.col_twists.begin() + col);
            };
            if (k + 1 < res.mats.size()) drop_row(res.mats[k + 1], c);
            if (k > 0) drop_col(res.mats[k - 1], r);
            drop_row(phi, r);
            drop_col(phi, c);
          }
        }
      }
    }
    res.f0 = res.mats[0].target();
    while (!res.mats.empty() && res.mats.back().cols() == 0) res.mats.pop_back();
    res.minimal = true;
  }
  return res;
}

PresentedModule minimize_presentation(const PresentedModule& M) {
  if (M.relations().empty() || M.f0().rank() == 0) return M;
  GradedMatrix phi = GradedMatrix::from_columns(M.f0(), M.relations());
  bool found = true;
  while (found) {
    found = false;
    for (int row = 0; row < phi.rows() && !found; ++row) {
      for (int col = 0; col < phi.cols() && !found; ++col) {
        const Polynomial& e = phi.a[row][col];
        if (e.is_zero() || e.degree() != 0) continue;
        found = true;
        Rational u = e.leading_term().coeff;
        for (int j = 0; j < phi.cols(); ++j) {
          if (j == col || phi.a[row][j].is_zero()) continue;
          Polynomial lam = phi.a[row][j].scaled(1 / u);
          for (int i = 0; i < phi.rows(); ++i)
            phi.a[i][j] = phi.a[i][j] - lam * phi.a[i][col];
        }
        for (int i = 0; i < phi.rows(); ++i) {
          if (i == row || phi.a[i][col].is_zero()) continue;
          Polynomial mu = phi.a[i][col].scaled(1 / u);
          for (int j = 0; j < phi.cols(); ++j)
            phi.a[i][j] = phi.a[i][j] - mu * phi.a[row][j];
        }
        phi.a.erase(phi.a.begin() + row);
        phi.row_twists.erase(phi.row_twists.begin() + row);
        for (auto& rr : phi.a) rr.erase(rr.begin() + col);
        phi.col_twists.erase(phi.col_twists.begin() + col);
      }
    }
  }
  FreeModule f0 = phi.target();
  std::vector<FreeElement> rels;
  for (auto& c : phi.to_columns())
    if (!c.is_zero()) rels.push_back(std::move(c));
  rels = minimal_generators(f0, std::move(rels));
  return PresentedModule(f0, std::move(rels));
}

int DeficiencyBattery::depth() const {
  for (int i = 0; i <= d; ++i)
    if (nonzero[i]) return i;
  return INT_MAX;
}

DeficiencyBattery ext_battery(const PresentedModule& M) {
  if (M.is_zero()) throw std::invalid_argument("ext_battery: zero module");
  const int n = M.ring()->nvars();
  const int d = module_dimension(M);

  FreeResolution res = free_resolution(M, true);
  const int L = res.length();

  // duals: psi_k = transpose(phi_k) : F_{k-1}^* -> F_k^*
  std::vector<GradedMatrix> psi;
  for (const auto& m : res.mats) psi.push_back(m.transpose());

  DeficiencyBattery B;
  B.n = n;
  B.d = d;
  B.K.assign(d + 1, PresentedModule::zero_module(M.ring()));
  B.nonzero.assign(d + 1, 0);
  B.dims.assign(d + 1, -1);

  for (int i = 0; i <= d; ++i) {
    int j = n - i;
    if (j > L || j < 0) continue;  // Ext^j = 0 beyond the resolution
    FreeModule Fj_dual(M.ring(), [&] {
      std::vector<int> tw;
      for (int t : res.module_at(j).twists) tw.push_back(-t);
      return tw;
    }());
    // kernel of psi_{j+1}
    std::vector<FreeElement> ker_gens;
    if (j == L) {
      for (int b = 0; b < Fj_dual.rank(); ++b) ker_gens.push_back(FreeElement::basis(Fj_dual, b));
    } else {
      const GradedMatrix& next = psi[j];  // psi_{j+1} : F_j^* -> F_{j+1}^*
      Submodule ker = kernel_of_map(next.target(), next.to_columns(), next.col_twists);
      // kernel_of_map takes columns as elements of the TARGET: psi_{j+1}
      // columns live in F_{j+1}^*; its source twists are F_j^*'s.
      ker_gens = ker.gens;
    }
    std::vector<FreeElement> im_gens;
    if (j >= 1) im_gens = psi[j - 1].to_columns();
    PresentedModule ext = subquotient(Fj_dual, ker_gens, im_gens);
    ext = minimize_presentation(ext);
    if (ext.is_zero()) continue;
    B.K[i] = ext;
    B.nonzero[i] = 1;
    B.dims[i] = module_dimension(ext);
  }

  // sanity: K^d != 0 and depth matches the resolution length
  if (!B.nonzero[d]) throw std::logic_error("ext_battery: top deficiency module vanished");
  if (B.depth() != n - L) throw std::logic_error("ext_battery: depth mismatch");
  return B;
}

std::pair<int, int> hom_dim_depth(const PresentedModule& M) {
  DeficiencyBattery B = ext_battery(M);
  return {B.d, B.depth()};
}

bool is_cohen_macaulay(const DeficiencyBattery& B) {
  int cnt = 0;
  for (int i = 0; i <= B.d; ++i) cnt += B.nonzero[i] ? 1 : 0;
  return cnt == 1;
}

bool is_cohen_macaulay(const PresentedModule& M) {
  if (M.is_zero()) return true;
  return is_cohen_macaulay(ext_battery(M));
}

bool is_generalized_cm(const DeficiencyBattery& B) {
  for (int i = 0; i < B.d; ++i)
    if (B.nonzero[i] && B.dims[i] > 0) return false;
  return true;
}

bool is_generalized_cm(const PresentedModule& M) {
  if (M.is_zero()) return true;
  return is_generalized_cm(ext_battery(M));
}

}  // namespace seqcm
