#include "seqcm/groebner.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <queue>
#include <set>

namespace seqcm {

VecPoly to_vecpoly(const FreeElement& e, const ModuleOrder& ord) {
  std::vector<VTerm> terms;
  for (int i = 0; i < e.mod.rank(); ++i)
    for (const auto& t : e.coords[i].terms()) terms.push_back(VTerm{i, t.mono, t.coeff});
  return normalize_vecpoly(std::move(terms), ord);
}

FreeElement to_free_element(const FreeModule& mod, const VecPoly& v) {
  std::vector<std::vector<Term>> per(mod.rank());
  for (const auto& t : v.terms) per[t.comp].push_back(Term{t.mono, t.coeff});
  std::vector<Polynomial> coords;
  coords.reserve(mod.rank());
  for (auto& ts : per) coords.push_back(Polynomial(mod.ring, std::move(ts)));
  return FreeElement(mod, std::move(coords));
}

VecPoly normalize_vecpoly(std::vector<VTerm> terms, const ModuleOrder& ord) {
  std::sort(terms.begin(), terms.end(), [&](const VTerm& a, const VTerm& b) {
    return ord.cmp(a.comp, a.mono, b.comp, b.mono) > 0;
  });
  VecPoly out;
  for (auto& t : terms) {
    if (!out.terms.empty() && out.terms.back().comp == t.comp &&
        out.terms.back().mono == t.mono)
      out.terms.back().coeff += t.coeff;
    else
      out.terms.push_back(std::move(t));
  }
  out.terms.erase(std::remove_if(out.terms.begin(), out.terms.end(),
                                 [](const VTerm& t) { return is_zero(t.coeff); }),
                  out.terms.end());
  return out;
}

VecPoly axpy(const VecPoly& f, const Rational& c, const Monomial& m, const VecPoly& g,
             const ModuleOrder& ord) {
  VecPoly out;
  out.terms.reserve(f.terms.size() + g.terms.size());
  size_t i = 0, j = 0;
  while (i < f.terms.size() && j < g.terms.size()) {
    Monomial gm = g.terms[j].mono * m;
    int cv = ord.cmp(f.terms[i].comp, f.terms[i].mono, g.terms[j].comp, gm);
    if (cv > 0) {
      out.terms.push_back(f.terms[i++]);
    } else if (cv < 0) {
      Rational coeff = -c * g.terms[j].coeff;
      out.terms.push_back(VTerm{g.terms[j].comp, std::move(gm), std::move(coeff)});
      ++j;
    } else {
      Rational coeff = f.terms[i].coeff - c * g.terms[j].coeff;
      if (!is_zero(coeff)) out.terms.push_back(VTerm{f.terms[i].comp, f.terms[i].mono, std::move(coeff)});
      ++i, ++j;
    }
  }
  for (; i < f.terms.size(); ++i) out.terms.push_back(f.terms[i]);
  for (; j < g.terms.size(); ++j) {
    Rational coeff = -c * g.terms[j].coeff;
    out.terms.push_back(VTerm{g.terms[j].comp, g.terms[j].mono * m, std::move(coeff)});
  }
  return out;
}

static bool same_terms(const VecPoly& a, const VecPoly& b) {
  if (a.terms.size() != b.terms.size()) return false;
  for (size_t i = 0; i < a.terms.size(); ++i)
    if (a.terms[i].comp != b.terms[i].comp || a.terms[i].mono != b.terms[i].mono ||
        a.terms[i].coeff != b.terms[i].coeff)
      return false;
  return true;
}

static void make_monic(VecPoly& f) {
  if (f.is_zero() || is_one(f.lead().coeff)) return;
  Rational inv = 1 / f.lead().coeff;
  for (auto& t : f.terms) t.coeff *= inv;
}

// Full division: reduce every term of f by the basis leads.
static VecPoly reduce_full(VecPoly f, const std::vector<VecPoly>& basis, const ModuleOrder& ord,
                           std::vector<std::tuple<int, Monomial, Rational>>* quotients) {
  std::vector<VTerm> out;
  while (!f.is_zero()) {
    const VTerm& lt = f.lead();
    bool hit = false;
    for (size_t k = 0; k < basis.size(); ++k) {
      if (basis[k].is_zero()) continue;
      const VTerm& gl = basis[k].lead();
      if (gl.comp != lt.comp || !divides(gl.mono, lt.mono)) continue;
      Monomial q = quotient(lt.mono, gl.mono);
      Rational c = lt.coeff / gl.coeff;
      if (quotients) quotients->push_back({static_cast<int>(k), q, c});
      f = axpy(f, c, q, basis[k], ord);
      hit = true;
      break;
    }
    if (!hit) {
      out.push_back(f.terms.front());
      f.terms.erase(f.terms.begin());
    }
  }
  VecPoly r;
  r.terms = std::move(out);  // popped in strictly descending order
  return r;
}

namespace {

struct Pair {
  int i, j;          // indices into G, i < j, same lead component
  Monomial lcm_mono;
  int degree;        // deg(lcm) + twist of the lead component
};

struct PairCmp {
  bool operator()(const Pair& a, const Pair& b) const { return a.degree > b.degree; }
};

class Engine {
 public:
  Engine(const FreeModule& amb, const ModuleOrder& ord) : amb_(amb), ord_(ord) {}

  void add_generators(const std::vector<VecPoly>& gens) {
    std::vector<VecPoly> sorted = gens;
    std::stable_sort(sorted.begin(), sorted.end(), [&](const VecPoly& a, const VecPoly& b) {
      return a.degree(amb_.twists) < b.degree(amb_.twists);
    });
    for (auto& g : sorted) {
      if (g.is_zero()) continue;
      VecPoly h = g;
      make_monic(h);
      add_element(std::move(h));
    }
  }

  void run() {
    while (!pairs_.empty()) {
      Pair p = pairs_.top();
      pairs_.pop();
      const VecPoly& gi = G_[p.i];
      const VecPoly& gj = G_[p.j];
      Monomial mi = quotient(p.lcm_mono, gi.lead().mono);
      Monomial mj = quotient(p.lcm_mono, gj.lead().mono);
      // monic generators: S = mi*gi - mj*gj
      VecPoly s = axpy(shift(gi, mi), Rational(1), mj, gj, ord_);
      VecPoly r = reduce_full(std::move(s), G_, ord_, nullptr);
      if (!r.is_zero()) {
        make_monic(r);
        add_element(std::move(r));
      }
    }
  }

  std::vector<VecPoly> interreduced() {
    std::vector<VecPoly> g = G_;
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t k = 0; k < g.size(); ++k) {
        VecPoly self = std::move(g[k]);
        g[k] = VecPoly{};  // mask out
        VecPoly before = self;
        VecPoly r = reduce_full(std::move(self), g, ord_, nullptr);
        make_monic(r);
        if (!same_terms(r, before)) changed = true;
        g[k] = std::move(r);
      }
      g.erase(std::remove_if(g.begin(), g.end(), [](const VecPoly& v) { return v.is_zero(); }),
              g.end());
    }
    std::sort(g.begin(), g.end(), [&](const VecPoly& a, const VecPoly& b) {
      return ord_.cmp(a.lead().comp, a.lead().mono, b.lead().comp, b.lead().mono) > 0;
    });
    return g;
  }

  const std::vector<VecPoly>& basis() const { return G_; }

 private:
  VecPoly shift(const VecPoly& g, const Monomial& m) const {
    VecPoly out = g;
    for (auto& t : out.terms) t.mono = t.mono * m;
    return out;
  }

  void add_element(VecPoly h) {
    int t = static_cast<int>(G_.size());
    G_.push_back(std::move(h));
    const VTerm& lt = G_[t].lead();

    // Gebauer-Moller update. Candidate pairs with the new element, grouped
    // by lcm; groups whose lcm is a proper multiple of another group's lcm
    // are dropped, then one representative per group survives. The product
    // criterion applies to rank-one ambients only.
    struct Cand {
      int i;
      Monomial l;
      bool coprime;
    };
    std::vector<Cand> cands;
    for (int i = 0; i < t; ++i) {
      if (G_[i].is_zero()) continue;
      const VTerm& li = G_[i].lead();
      if (li.comp != lt.comp) continue;
      Monomial l = lcm(li.mono, lt.mono);
      cands.push_back(Cand{i, std::move(l), coprime(li.mono, lt.mono)});
    }
    std::vector<char> keep(cands.size(), 1);
    for (size_t a = 0; a < cands.size(); ++a) {
      if (!keep[a]) continue;
      for (size_t b = 0; b < cands.size(); ++b) {
        if (a == b || !keep[a]) continue;
        if (cands[b].l != cands[a].l && keep[b] && divides(cands[b].l, cands[a].l))
          keep[a] = 0;
      }
    }
    // One representative per surviving lcm value, preferring a coprime pair
    // (which the product criterion then discards outright).
    std::map<std::vector<int>, int> by_lcm;
    for (size_t a = 0; a < cands.size(); ++a) {
      if (!keep[a]) continue;
      auto [it, fresh] = by_lcm.try_emplace(cands[a].l.e, static_cast<int>(a));
      if (!fresh && cands[a].coprime) it->second = static_cast<int>(a);
    }
    bool rank_one = amb_.rank() == 1;
    for (const auto& [_, idx] : by_lcm) {
      const Cand& c = cands[idx];
      if (rank_one && c.coprime) continue;
      pairs_.push(Pair{c.i, t, c.l, c.l.degree() + amb_.twists[lt.comp]});
    }

    // Prune old pairs strictly covered by the new lead (chain criterion).
    std::priority_queue<Pair, std::vector<Pair>, PairCmp> kept;
    auto rest = std::move(pairs_);
    pairs_ = {};
    while (!rest.empty()) {
      Pair p = rest.top();
      rest.pop();
      const VTerm& li = G_[p.i].lead();
      const VTerm& lj = G_[p.j].lead();
      bool drop = lt.comp == li.comp && divides(lt.mono, p.lcm_mono) &&
                  lcm(li.mono, lt.mono) != p.lcm_mono && lcm(lj.mono, lt.mono) != p.lcm_mono;
      if (!drop) kept.push(std::move(p));
    }
    pairs_ = std::move(kept);
  }

  FreeModule amb_;
  ModuleOrder ord_;
  std::vector<VecPoly> G_;
  std::priority_queue<Pair, std::vector<Pair>, PairCmp> pairs_;
};

}  // namespace

GroebnerBasis buchberger(const FreeModule& ambient, const std::vector<VecPoly>& gens,
                         const ModuleOrder& ord, bool reduce) {
  Engine eng(ambient, ord);
  eng.add_generators(gens);
  eng.run();
  GroebnerBasis gb;
  gb.ambient = ambient;
  gb.order = ord;
  gb.elems = reduce ? eng.interreduced() : eng.basis();
  gb.reduced = reduce;
  return gb;
}

GroebnerBasis buchberger(const FreeModule& ambient, const std::vector<FreeElement>& gens,
                         const ModuleOrder& ord, bool reduce) {
  std::vector<VecPoly> vs;
  vs.reserve(gens.size());
  for (const auto& g : gens) vs.push_back(to_vecpoly(g, ord));
  return buchberger(ambient, vs, ord, reduce);
}

VecPoly normal_form(VecPoly f, const GroebnerBasis& gb,
                    std::vector<std::tuple<int, Monomial, Rational>>* quotients) {
  return reduce_full(std::move(f), gb.elems, gb.order, quotients);
}

FreeElement normal_form(const FreeElement& f, const GroebnerBasis& gb) {
  if (!(f.mod == gb.ambient)) throw std::invalid_argument("normal_form: ambient mismatch");
  VecPoly v = to_vecpoly(f, gb.order);
  return to_free_element(gb.ambient, normal_form(std::move(v), gb));
}

bool contains(const GroebnerBasis& gb, const FreeElement& f) {
  VecPoly v = to_vecpoly(f, gb.order);
  return normal_form(std::move(v), gb).is_zero();
}

SyzygyModule syzygies_of_basis(const GroebnerBasis& gb) {
  const int t = static_cast<int>(gb.elems.size());
  auto data = std::make_shared<SchreyerData>();
  data->parent = gb.order;
  std::vector<int> syz_twists;
  for (const auto& g : gb.elems) {
    data->leads.push_back({g.lead().comp, g.lead().mono});
    syz_twists.push_back(g.degree(gb.ambient.twists));
  }
  SyzygyModule out;
  out.ambient = FreeModule(gb.ambient.ring, syz_twists);
  out.schreyer_order = ModuleOrder::schreyer(data);

  for (int i = 0; i < t; ++i) {
    for (int j = i + 1; j < t; ++j) {
      const VTerm& li = gb.elems[i].lead();
      const VTerm& lj = gb.elems[j].lead();
      if (li.comp != lj.comp) continue;
      Monomial l = lcm(li.mono, lj.mono);
      Monomial mi = quotient(l, li.mono);
      Monomial mj = quotient(l, lj.mono);
      VecPoly s;
      for (const auto& tt : gb.elems[i].terms) s.terms.push_back(VTerm{tt.comp, tt.mono * mi, tt.coeff});
      s = axpy(s, Rational(1), mj, gb.elems[j], gb.order);
      std::vector<std::tuple<int, Monomial, Rational>> qs;
      VecPoly r = normal_form(std::move(s), gb, &qs);
      if (!r.is_zero())
        throw std::logic_error("syzygies_of_basis: input is not a Groebner basis");
      std::vector<VTerm> sig;
      sig.push_back(VTerm{i, mi, Rational(1)});
      sig.push_back(VTerm{j, mj, Rational(-1)});
      for (auto& [k, m, c] : qs) sig.push_back(VTerm{k, m, -c});
      out.gens.push_back(normalize_vecpoly(std::move(sig), out.schreyer_order));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

GroebnerBasis groebner(const Submodule& sub, const ModuleOrder& ord) {
  return buchberger(sub.ambient, sub.gens, ord, true);
}

bool is_zero_submodule(const Submodule& sub) {
  for (const auto& g : sub.gens)
    if (!g.is_zero()) return false;
  return true;
}

bool submodule_contains(const GroebnerBasis& gb_of_N, const FreeElement& f) {
  return contains(gb_of_N, f);
}

bool submodule_leq(const Submodule& a, const GroebnerBasis& gb_of_b) {
  for (const auto& g : a.gens)
    if (!contains(gb_of_b, g)) return false;
  return true;
}

bool submodule_equal(const Submodule& a, const Submodule& b) {
  GroebnerBasis ga = groebner(a), gb = groebner(b);
  return submodule_leq(a, gb) && submodule_leq(b, ga);
}

namespace {

// Shared elimination setup: Groebner basis of { columns[j] + e_j } in
// G + F with the G block dominant.
struct Elimination {
  FreeModule big;
  int split;
  GroebnerBasis gb;
};

Elimination eliminate(const FreeModule& target, const std::vector<FreeElement>& columns,
                      const std::vector<int>& source_twists) {
  if (columns.size() != source_twists.size())
    throw std::invalid_argument("kernel_of_map: twist count mismatch");
  std::vector<int> twists = target.twists;
  twists.insert(twists.end(), source_twists.begin(), source_twists.end());
  FreeModule big(target.ring, twists);
  int split = target.rank();
  ModuleOrder ord = ModuleOrder::block(split);

  std::vector<VecPoly> gens;
  for (size_t j = 0; j < columns.size(); ++j) {
    std::vector<VTerm> terms;
    for (int i = 0; i < target.rank(); ++i)
      for (const auto& t : columns[j].coords[i].terms())
        terms.push_back(VTerm{i, t.mono, t.coeff});
    terms.push_back(VTerm{split + static_cast<int>(j),
                          Monomial::one(target.ring->nvars()), Rational(1)});
    gens.push_back(normalize_vecpoly(std::move(terms), ord));
  }
  return Elimination{big, split, buchberger(big, gens, ord, true)};
}

}  // namespace

Submodule kernel_of_map(const FreeModule& target, const std::vector<FreeElement>& columns,
                        const std::vector<int>& source_twists) {
  Elimination el = eliminate(target, columns, source_twists);
  FreeModule source(target.ring, source_twists);
  Submodule ker = Submodule::zero(source);
  for (const auto& g : el.gb.elems) {
    if (g.lead().comp < el.split) continue;  // has a target-block term
    std::vector<VTerm> shifted;
    for (const auto& t : g.terms) shifted.push_back(VTerm{t.comp - el.split, t.mono, t.coeff});
    VecPoly v;
    v.terms = std::move(shifted);
    ker.gens.push_back(to_free_element(source, v));
  }
  return ker;
}

std::optional<std::vector<Polynomial>> lift_through(const FreeModule& target,
                                                    const std::vector<FreeElement>& columns,
                                                    const std::vector<int>& source_twists,
                                                    const FreeElement& v) {
  Elimination el = eliminate(target, columns, source_twists);
  std::vector<VTerm> terms;
  for (int i = 0; i < target.rank(); ++i)
    for (const auto& t : v.coords[i].terms()) terms.push_back(VTerm{i, t.mono, t.coeff});
  VecPoly w = normalize_vecpoly(std::move(terms), el.gb.order);
  VecPoly r = normal_form(std::move(w), el.gb);
  for (const auto& t : r.terms)
    if (t.comp < el.split) return std::nullopt;
  std::vector<Polynomial> q(columns.size(), Polynomial::zero(target.ring));
  for (const auto& t : r.terms) {
    int j = t.comp - el.split;
    q[j] = q[j] + Polynomial::monomial(target.ring, t.mono, -t.coeff);
  }
  return q;
}

Submodule colon(const Submodule& N, const Polynomial& f) {
  return colon(N, std::vector<Polynomial>{f});
}

// Kernel of F0 -> (F0/N)^k, v -> (g_l * v)_l.
Submodule colon(const Submodule& N, const std::vector<Polynomial>& ideal_gens_in) {
  const FreeModule& F0 = N.ambient;
  const int r0 = F0.rank();
  std::vector<Polynomial> ideal_gens;
  for (const auto& g : ideal_gens_in)
    if (!g.is_zero()) ideal_gens.push_back(g);
  const int k = static_cast<int>(ideal_gens.size());
  if (k == 0) throw std::invalid_argument("colon by the zero ideal");
  for (const auto& g : ideal_gens)
    if (!g.is_homogeneous()) throw std::invalid_argument("colon: inhomogeneous multiplier");

  // Target blocks carry twist shifts so every column is homogeneous.
  std::vector<int> big_twists;
  for (int l = 0; l < k; ++l)
    for (int i = 0; i < r0; ++i) big_twists.push_back(F0.twists[i] - ideal_gens[l].degree());
  FreeModule big(F0.ring, big_twists);

  std::vector<FreeElement> cols;
  std::vector<int> src_twists;
  for (int i = 0; i < r0; ++i) {
    FreeElement col = FreeElement::zero(big);
    for (int l = 0; l < k; ++l) col.coords[l * r0 + i] = ideal_gens[l];
    cols.push_back(std::move(col));
    src_twists.push_back(F0.twists[i]);
  }
  for (int l = 0; l < k; ++l) {
    for (const auto& n : N.gens) {
      FreeElement col = FreeElement::zero(big);
      for (int i = 0; i < r0; ++i) col.coords[l * r0 + i] = n.coords[i];
      src_twists.push_back(n.degree() - ideal_gens[l].degree());
      cols.push_back(std::move(col));
    }
  }
  Submodule ker = kernel_of_map(big, cols, src_twists);
  // Keep the F0 coordinates.
  Submodule out = Submodule::zero(F0);
  for (const auto& g : ker.gens) {
    std::vector<Polynomial> coords(g.coords.begin(), g.coords.begin() + r0);
    FreeElement e(F0, std::move(coords));
    if (!e.is_zero()) out.gens.push_back(std::move(e));
  }
  out.gens = minimal_generators(F0, std::move(out.gens));
  return out;
}

Submodule saturation(const Submodule& N, const Polynomial& f) {
  Submodule cur = N;
  GroebnerBasis gb = groebner(cur);
  while (true) {
    Submodule next = colon(cur, f);
    if (submodule_leq(next, gb)) return cur;
    cur = std::move(next);
    gb = groebner(cur);
  }
}

Submodule intersect(const Submodule& A, const Submodule& B) {
  const FreeModule& F0 = A.ambient;
  std::vector<FreeElement> cols = A.gens;
  cols.insert(cols.end(), B.gens.begin(), B.gens.end());
  std::vector<int> src_twists;
  for (const auto& g : cols) src_twists.push_back(g.degree());
  Submodule ker = kernel_of_map(F0, cols, src_twists);
  Submodule out = Submodule::zero(F0);
  for (const auto& s : ker.gens) {
    // A * (first block of the syzygy) lands in A and in B.
    FreeElement v = FreeElement::zero(F0);
    for (size_t j = 0; j < A.gens.size(); ++j)
      if (!s.coords[j].is_zero()) v = v + scale(A.gens[j], s.coords[j]);
    if (!v.is_zero()) out.gens.push_back(std::move(v));
  }
  out.gens = minimal_generators(F0, std::move(out.gens));
  return out;
}

std::vector<FreeElement> minimal_generators(const FreeModule& ambient,
                                            std::vector<FreeElement> gens) {
  gens.erase(std::remove_if(gens.begin(), gens.end(),
                            [](const FreeElement& g) { return g.is_zero(); }),
             gens.end());
  // canonical scaling: monic leading coefficient under TOP-grevlex
  ModuleOrder top = ModuleOrder::top();
  for (auto& g : gens) {
    VecPoly v = to_vecpoly(g, top);
    if (v.is_zero() || is_one(v.lead().coeff)) continue;
    Rational inv = 1 / v.lead().coeff;
    for (auto& c : g.coords) c = c.scaled(inv);
  }
  std::stable_sort(gens.begin(), gens.end(), [](const FreeElement& a, const FreeElement& b) {
    return a.degree() < b.degree();
  });
  std::vector<FreeElement> kept;
  for (const auto& g : gens) {
    if (kept.empty()) {
      kept.push_back(g);
      continue;
    }
    GroebnerBasis gb = buchberger(ambient, kept, ModuleOrder::top(), false);
    if (!contains(gb, g)) kept.push_back(g);
  }
  return kept;
}

}  // namespace seqcm
