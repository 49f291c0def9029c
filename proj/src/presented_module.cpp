#include "seqcm/presented_module.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace seqcm {

PresentedModule::PresentedModule(FreeModule f0, std::vector<FreeElement> relations)
    : f0_(std::move(f0)), rels_(std::move(relations)) {
  for (const auto& r : rels_) {
    if (!(r.mod == f0_)) throw std::invalid_argument("relation outside the ambient module");
    if (!r.is_homogeneous()) throw std::invalid_argument("inhomogeneous relation");
  }
  rels_.erase(std::remove_if(rels_.begin(), rels_.end(),
                             [](const FreeElement& r) { return r.is_zero(); }),
              rels_.end());
}

PresentedModule PresentedModule::quotient_ring(const RingPtr& ring,
                                               std::vector<Polynomial> ideal_gens) {
  FreeModule f0 = FreeModule::rank_one(ring);
  std::vector<FreeElement> rels;
  for (auto& g : ideal_gens)
    if (!g.is_zero()) rels.push_back(FreeElement::single(f0, 0, std::move(g)));
  return PresentedModule(f0, std::move(rels));
}

PresentedModule PresentedModule::free_module(const FreeModule& f0) {
  return PresentedModule(f0, {});
}

PresentedModule PresentedModule::zero_module(const RingPtr& ring) {
  return PresentedModule(FreeModule(ring, {}), {});
}

const GroebnerBasis& PresentedModule::relations_gb() const {
  std::call_once(gb_cache_->flag, [&] { gb_cache_->gb = groebner(Submodule{f0_, rels_}); });
  return *gb_cache_->gb;
}

bool PresentedModule::is_zero() const {
  if (f0_.rank() == 0) return true;
  const GroebnerBasis& gb = relations_gb();
  for (int i = 0; i < f0_.rank(); ++i)
    if (!contains(gb, FreeElement::basis(f0_, i))) return false;
  return true;
}

PresentedModule PresentedModule::quotient_by(const Polynomial& f) const {
  return quotient_by(std::vector<Polynomial>{f});
}

PresentedModule PresentedModule::quotient_by(const std::vector<Polynomial>& fs) const {
  std::vector<FreeElement> rels = rels_;
  for (const auto& f : fs) {
    if (f.is_zero()) continue;
    for (int i = 0; i < f0_.rank(); ++i) rels.push_back(FreeElement::single(f0_, i, f));
  }
  return PresentedModule(f0_, std::move(rels));
}

PresentedModule PresentedModule::annihilator_submodule(const Polynomial& f) const {
  return annihilator_submodule(std::vector<Polynomial>{f});
}

PresentedModule PresentedModule::annihilator_submodule(
    const std::vector<Polynomial>& ideal_gens) const {
  if (f0_.rank() == 0) return *this;
  bool all_zero = std::all_of(ideal_gens.begin(), ideal_gens.end(),
                              [](const Polynomial& g) { return g.is_zero(); });
  if (ideal_gens.empty() || all_zero) return *this;  // (0 : (0)) = M
  Submodule c = colon(Submodule{f0_, rels_}, ideal_gens);
  return subquotient(f0_, c.gens, rels_);
}

std::vector<Polynomial> PresentedModule::annihilator_ideal() const {
  const RingPtr& R = ring();
  if (f0_.rank() == 0)
    return {Polynomial::constant(R, Rational(1))};  // Ann(0) = S
  FreeModule s1 = FreeModule::rank_one(R);
  std::optional<Submodule> acc;
  for (int i = 0; i < f0_.rank(); ++i) {
    // { f : f e_i in rels }: kernel of S -> F0/rels, 1 -> e_i.
    std::vector<FreeElement> cols;
    std::vector<int> tw;
    cols.push_back(FreeElement::basis(f0_, i));
    tw.push_back(f0_.twists[i]);
    for (const auto& r : rels_) {
      cols.push_back(r);
      tw.push_back(r.degree());
    }
    Submodule ker = kernel_of_map(f0_, cols, tw);
    Submodule ideal_i = Submodule::zero(s1);
    for (const auto& g : ker.gens)
      if (!g.coords[0].is_zero())
        ideal_i.gens.push_back(FreeElement::single(s1, 0, g.coords[0]));
    ideal_i.gens = minimal_generators(s1, std::move(ideal_i.gens));
    if (!acc)
      acc = std::move(ideal_i);
    else
      acc = intersect(*acc, ideal_i);
  }
  std::vector<Polynomial> out;
  for (const auto& g : acc->gens) out.push_back(g.coords[0]);
  return out;
}

PresentedModule PresentedModule::direct_sum(const PresentedModule& other) const {
  std::vector<int> tw = f0_.twists;
  tw.insert(tw.end(), other.f0_.twists.begin(), other.f0_.twists.end());
  FreeModule f0(ring(), tw);
  std::vector<FreeElement> rels;
  for (const auto& r : rels_) {
    FreeElement e = FreeElement::zero(f0);
    for (int i = 0; i < f0_.rank(); ++i) e.coords[i] = r.coords[i];
    rels.push_back(std::move(e));
  }
  int off = f0_.rank();
  for (const auto& r : other.rels_) {
    FreeElement e = FreeElement::zero(f0);
    for (int i = 0; i < other.f0_.rank(); ++i) e.coords[off + i] = r.coords[i];
    rels.push_back(std::move(e));
  }
  return PresentedModule(f0, std::move(rels));
}

PresentedModule subquotient(const FreeModule& ambient, const std::vector<FreeElement>& sub_gens,
                            const std::vector<FreeElement>& rel_gens) {
  std::vector<FreeElement> gens = sub_gens;
  gens.erase(std::remove_if(gens.begin(), gens.end(),
                            [](const FreeElement& g) { return g.is_zero(); }),
             gens.end());
  const int m = static_cast<int>(gens.size());
  if (m == 0) return PresentedModule::zero_module(ambient.ring);

  std::vector<FreeElement> cols = gens;
  cols.insert(cols.end(), rel_gens.begin(), rel_gens.end());
  std::vector<int> tw;
  for (const auto& c : cols) tw.push_back(c.degree());
  Submodule syz = kernel_of_map(ambient, cols, tw);

  std::vector<int> f0_tw(tw.begin(), tw.begin() + m);
  FreeModule f0(ambient.ring, f0_tw);
  std::vector<FreeElement> rels;
  for (const auto& s : syz.gens) {
    std::vector<Polynomial> coords(s.coords.begin(), s.coords.begin() + m);
    FreeElement e(f0, std::move(coords));
    if (!e.is_zero()) rels.push_back(std::move(e));
  }
  rels = minimal_generators(f0, std::move(rels));
  return PresentedModule(f0, std::move(rels));
}

// ---------------------------------------------------------------------------

bool HilbertNumerator::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](long long c) { return c == 0; });
}

int HilbertNumerator::vanishing_order_at_one() const {
  if (is_zero()) throw std::logic_error("vanishing order of the zero numerator");
  HilbertNumerator cur = *this;
  int v = 0;
  while (true) {
    long long sum = 0;
    for (long long c : cur.coeffs) sum += c;
    if (sum != 0) return v;
    cur = cur.divide_by_one_minus_t(1);
    ++v;
  }
}

HilbertNumerator HilbertNumerator::divide_by_one_minus_t(int k) const {
  HilbertNumerator cur = *this;
  for (int round = 0; round < k; ++round) {
    const std::vector<long long>& c = cur.coeffs;
    if (c.empty()) continue;
    long long rem = 0;
    for (long long cc : c) rem += cc;
    if (rem != 0) throw std::logic_error("Hilbert numerator not divisible by (1-t)");
    // (1-t) q = c  =>  q_i = c_0 + ... + c_i, top coefficient drops off.
    std::vector<long long> q(c.size() - 1, 0);
    long long acc = 0;
    for (size_t i = 0; i + 1 < c.size(); ++i) {
      acc += c[i];
      q[i] = acc;
    }
    cur.coeffs = std::move(q);
  }
  return cur;
}

long long HilbertNumerator::value_at_one() const {
  long long s = 0;
  for (long long c : coeffs) s += c;
  return s;
}

static HilbertNumerator hn_mul_power(HilbertNumerator h, long long k) {
  h.offset += k;
  return h;
}

static HilbertNumerator hn_add(const HilbertNumerator& a, const HilbertNumerator& b) {
  long long off = std::min(a.offset, b.offset);
  size_t len = std::max(a.offset - off + a.coeffs.size(), b.offset - off + b.coeffs.size());
  HilbertNumerator r;
  r.offset = off;
  r.coeffs.assign(len, 0);
  for (size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[a.offset - off + i] += a.coeffs[i];
  for (size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[b.offset - off + i] += b.coeffs[i];
  return r;
}

// Recursive pivot computation: for a variable x appearing in a mixed
// generator, HS(S/L) = t * HS(S/(L:x)) ... more precisely
//   N(L) = t^deg(p) N(L:p) + N(L+(p)) with pivot p = x.
static HilbertNumerator hn_of(std::vector<Monomial> gens, int nvars) {
  // minimalize
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> min;
  for (const auto& g : gens) {
    bool red = false;
    for (const auto& h : min)
      if (divides(h, g)) {
        red = true;
        break;
      }
    if (!red) min.push_back(g);
  }
  gens = std::move(min);

  for (const auto& g : gens)
    if (g.is_one()) return HilbertNumerator{0, {0}};  // unit ideal

  // pairwise coprime => product formula
  bool pairwise = true;
  for (size_t i = 0; i < gens.size() && pairwise; ++i)
    for (size_t j = i + 1; j < gens.size() && pairwise; ++j)
      if (!coprime(gens[i], gens[j])) pairwise = false;
  if (pairwise) {
    HilbertNumerator r{0, {1}};
    for (const auto& g : gens) {
      // r *= (1 - t^deg g)
      HilbertNumerator shifted = hn_mul_power(r, g.degree());
      for (auto& c : shifted.coeffs) c = -c;
      r = hn_add(r, shifted);
    }
    return r;
  }

  // pivot: most frequent variable among non-pure-power generators
  std::vector<int> freq(nvars, 0);
  for (const auto& g : gens)
    if (mask_size(g.support()) >= 2)
      for (int i = 0; i < nvars; ++i)
        if (g.e[i] > 0) ++freq[i];
  int x = static_cast<int>(std::max_element(freq.begin(), freq.end()) - freq.begin());

  std::vector<Monomial> colon_gens;
  for (auto g : gens) {
    if (g.e[x] > 0) g.e[x] -= 1;
    colon_gens.push_back(std::move(g));
  }
  std::vector<Monomial> plus_gens = gens;
  plus_gens.push_back(Monomial::var(nvars, x));

  HilbertNumerator a = hn_mul_power(hn_of(std::move(colon_gens), nvars), 1);
  HilbertNumerator b = hn_of(std::move(plus_gens), nvars);
  return hn_add(a, b);
}

HilbertNumerator hilbert_numerator(const std::vector<Monomial>& gens, int nvars) {
  return hn_of(gens, nvars);
}

std::vector<std::vector<Monomial>> lead_module(const PresentedModule& M) {
  std::vector<std::vector<Monomial>> leads(M.f0().rank());
  for (const auto& g : M.relations_gb().elems)
    leads[g.lead().comp].push_back(g.lead().mono);
  return leads;
}

int dim_monomial_quotient(const std::vector<Monomial>& gens, int nvars) {
  for (const auto& g : gens)
    if (g.is_one()) return -1;
  int best = -1;
  VarMask all = (VarMask(1) << nvars) - 1;
  for (VarMask A = 0; A <= all; ++A) {
    bool independent = true;
    for (const auto& g : gens)
      if ((g.support() & ~A) == 0) {
        independent = false;
        break;
      }
    if (independent) best = std::max(best, mask_size(A));
  }
  return best;
}

static HilbertNumerator module_numerator(const PresentedModule& M) {
  auto leads = lead_module(M);
  const int n = M.ring()->nvars();
  HilbertNumerator total{0, {}};
  for (int i = 0; i < M.f0().rank(); ++i) {
    HilbertNumerator hi = hilbert_numerator(leads[i], n);
    total = hn_add(total, hn_mul_power(hi, M.f0().twists[i]));
  }
  return total;
}

int module_dimension(const PresentedModule& M) {
  if (M.f0().rank() == 0) return -1;
  auto leads = lead_module(M);
  const int n = M.ring()->nvars();
  int comb = -1;
  for (int i = 0; i < M.f0().rank(); ++i)
    comb = std::max(comb, dim_monomial_quotient(leads[i], n));
  if (comb == -1) return -1;  // zero module

  HilbertNumerator hn = module_numerator(M);
  int hilb = hn.is_zero() ? -1 : n - hn.vanishing_order_at_one();
  if (hilb != comb)
    throw std::logic_error("module_dimension: Hilbert and combinatorial routes disagree");
  return comb;
}

std::optional<long long> module_length(const PresentedModule& M) {
  if (M.f0().rank() == 0) return 0;
  int d = module_dimension(M);
  if (d > 0) return std::nullopt;
  if (d < 0) return 0;
  HilbertNumerator hn = module_numerator(M);
  const int n = M.ring()->nvars();
  return hn.divide_by_one_minus_t(n).value_at_one();
}

void enumerate_monomials(int nvars, int degree, const std::function<void(const Monomial&)>& fn) {
  Monomial m(nvars);
  std::function<void(int, int)> rec = [&](int var, int rem) {
    if (var == nvars - 1) {
      m.e[var] = rem;
      fn(m);
      m.e[var] = 0;
      return;
    }
    for (int k = 0; k <= rem; ++k) {
      m.e[var] = k;
      rec(var + 1, rem - k);
    }
    m.e[var] = 0;
  };
  if (degree < 0) return;
  rec(0, degree);
}

long long count_standard_monomials(const std::vector<Monomial>& gens, int nvars, int degree) {
  long long count = 0;
  enumerate_monomials(nvars, degree, [&](const Monomial& m) {
    for (const auto& g : gens)
      if (divides(g, m)) return;
    ++count;
  });
  return count;
}

long long hilbert_function(const PresentedModule& M, int k) {
  auto leads = lead_module(M);
  const int n = M.ring()->nvars();
  long long total = 0;
  for (int i = 0; i < M.f0().rank(); ++i)
    total += count_standard_monomials(leads[i], n, k - M.f0().twists[i]);
  return total;
}

}  // namespace seqcm
