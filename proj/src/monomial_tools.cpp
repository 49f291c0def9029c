#include "seqcm/monomial_tools.hpp"

#include <map>
#include <sstream>

namespace seqcm {

bool MonomialPrime::operator<(const MonomialPrime& o) const {
  // variable-subset lexicographic: compare sorted index lists
  VarMask a = vars, b = o.vars;
  while (a != 0 && b != 0) {
    int ia = __builtin_ctz(a), ib = __builtin_ctz(b);
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

bool MonomialPrime::contains(const Polynomial& f) const {
  for (const auto& t : f.terms())
    if (!contains_monomial(t.mono)) return false;
  return true;
}

std::string MonomialPrime::to_string(const Ring& ring) const {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (int i = 0; i < ring.nvars(); ++i) {
    if (!(vars & (VarMask(1) << i))) continue;
    if (!first) os << ",";
    os << ring.vars[i];
    first = false;
  }
  os << ")";
  return os.str();
}

void sort_unique(PrimeSet& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

static std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool red = false;
    for (const auto& h : out)
      if (divides(h, g)) {
        red = true;
        break;
      }
    if (!red) out.push_back(g);
  }
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return cmp_grevlex(a, b) > 0; });
  return out;
}

MonomialIdeal::MonomialIdeal(RingPtr ring, std::vector<Monomial> gens)
    : ring_(std::move(ring)), gens_(minimalize(std::move(gens))) {}

MonomialIdeal MonomialIdeal::unit(const RingPtr& ring) {
  return MonomialIdeal(ring, {Monomial::one(ring->nvars())});
}

MonomialIdeal MonomialIdeal::zero(const RingPtr& ring) { return MonomialIdeal(ring, {}); }

MonomialIdeal MonomialIdeal::of_prime(const RingPtr& ring, const MonomialPrime& p) {
  std::vector<Monomial> gens;
  for (int i = 0; i < ring->nvars(); ++i)
    if (p.vars & (VarMask(1) << i)) gens.push_back(Monomial::var(ring->nvars(), i));
  return MonomialIdeal(ring, std::move(gens));
}

bool MonomialIdeal::contains(const Monomial& m) const {
  for (const auto& g : gens_)
    if (divides(g, m)) return true;
  return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  for (const auto& g : other.gens_)
    if (!contains(g)) return false;
  return true;
}

bool MonomialIdeal::operator==(const MonomialIdeal& o) const { return gens_ == o.gens_; }

MonomialIdeal MonomialIdeal::plus(const Monomial& m) const {
  auto gens = gens_;
  gens.push_back(m);
  return MonomialIdeal(ring_, std::move(gens));
}

MonomialIdeal MonomialIdeal::intersect(const MonomialIdeal& o) const {
  // pairwise lcm construction
  std::vector<Monomial> gens;
  for (const auto& a : gens_)
    for (const auto& b : o.gens_) gens.push_back(lcm(a, b));
  return MonomialIdeal(ring_, std::move(gens));
}

MonomialIdeal MonomialIdeal::radical() const {
  std::vector<Monomial> gens;
  for (const auto& g : gens_) gens.push_back(seqcm::radical(g));
  return MonomialIdeal(ring_, std::move(gens));
}

int MonomialIdeal::quotient_dimension() const {
  return dim_monomial_quotient(gens_, ring_->nvars());
}

std::vector<Polynomial> MonomialIdeal::to_polynomials() const {
  std::vector<Polynomial> out;
  for (const auto& g : gens_) out.push_back(Polynomial::monomial(ring_, g));
  return out;
}

PresentedModule MonomialIdeal::quotient_module() const {
  return PresentedModule::quotient_ring(ring_, to_polynomials());
}

MonomialIdeal intersect_all(const std::vector<MonomialIdeal>& ideals) {
  if (ideals.empty()) throw std::invalid_argument("intersect_all: empty list");
  MonomialIdeal acc = ideals[0];
  for (size_t i = 1; i < ideals.size(); ++i) acc = acc.intersect(ideals[i]);
  return acc;
}

// --------------------------------------------------------------------------
// Primary decomposition by recursive splitting: a generator u*v with coprime
// nontrivial parts splits I = (I + (u)) cap (I + (v)); once every generator
// is a pure variable power the ideal is primary with prime = its support.

static void decompose_rec(const MonomialIdeal& I, std::vector<MonomialIdeal>& out) {
  for (const auto& g : I.gens()) {
    if (mask_size(g.support()) < 2) continue;
    // split off the first variable's power
    int v = __builtin_ctz(g.support());
    Monomial u = Monomial::var(I.ring()->nvars(), v, g.e[v]);
    Monomial rest = quotient(g, u);
    decompose_rec(I.plus(u), out);
    decompose_rec(I.plus(rest), out);
    return;
  }
  out.push_back(I);
}

std::vector<PrimaryComponent> primary_decomposition(const MonomialIdeal& I) {
  if (I.is_unit()) throw std::invalid_argument("primary_decomposition: unit ideal");
  if (I.is_zero_ideal())  // (0) is primary to the zero prime
    return {PrimaryComponent{I, MonomialPrime{0}}};
  std::vector<MonomialIdeal> raw;
  decompose_rec(I, raw);

  // group by radical prime, intersect within a group
  std::map<VarMask, MonomialIdeal> by_prime;
  for (const auto& q : raw) {
    VarMask p = 0;
    for (const auto& g : q.gens()) p |= g.support();
    auto it = by_prime.find(p);
    if (it == by_prime.end())
      by_prime.emplace(p, q);
    else
      it->second = it->second.intersect(q);
  }
  std::vector<PrimaryComponent> comps;
  for (auto& [mask, q] : by_prime) comps.push_back(PrimaryComponent{q, MonomialPrime{mask}});

  // drop redundant components until irredundant
  bool dropped = true;
  while (dropped && comps.size() > 1) {
    dropped = false;
    for (size_t i = 0; i < comps.size(); ++i) {
      std::vector<MonomialIdeal> rest;
      for (size_t j = 0; j < comps.size(); ++j)
        if (j != i) rest.push_back(comps[j].component);
      if (comps[i].component.contains(intersect_all(rest))) {
        comps.erase(comps.begin() + i);
        dropped = true;
        break;
      }
    }
  }
  std::sort(comps.begin(), comps.end(),
            [](const PrimaryComponent& a, const PrimaryComponent& b) { return a.prime < b.prime; });
  return comps;
}

PrimeSet associated_primes(const MonomialIdeal& I) {
  PrimeSet out;
  for (const auto& c : primary_decomposition(I)) out.push_back(c.prime);
  sort_unique(out);
  return out;
}

PrimeSet minimal_primes(const MonomialIdeal& I) {
  PrimeSet ass = associated_primes(I);
  PrimeSet out;
  for (const auto& p : ass) {
    bool minimal = true;
    for (const auto& q : ass)
      if (!(q == p) && (q.vars & ~p.vars) == 0) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(p);
  }
  sort_unique(out);
  return out;
}

// --------------------------------------------------------------------------

PrimeSet ass_multigraded(const PresentedModule& N) {
  const RingPtr& R = N.ring();
  const int n = R->nvars();
  for (const auto& rel : N.relations())
    for (const auto& c : rel.coords)
      if (!c.is_term())
        throw std::invalid_argument("ass_multigraded: presentation is not multigraded");

  PrimeSet out;
  if (N.f0().rank() == 0) return out;
  Submodule rels{N.f0(), N.relations()};

  for (VarMask mask = 0; mask < (VarMask(1) << n); ++mask) {
    // C = (rels : p) in F0, the elements killed by p modulo rels
    Submodule C = Submodule::zero(N.f0());
    if (mask == 0) {
      for (int i = 0; i < N.f0().rank(); ++i) C.gens.push_back(FreeElement::basis(N.f0(), i));
    } else {
      std::vector<Polynomial> pgens;
      for (int i = 0; i < n; ++i)
        if (mask & (VarMask(1) << i)) pgens.push_back(Polynomial::variable(R, i));
      C = colon(rels, pgens);
    }
    // localize away from p: saturate rels by the product of the complement
    Monomial u(n);
    for (int i = 0; i < n; ++i)
      if (!(mask & (VarMask(1) << i))) u.e[i] = 1;
    Submodule sat = u.is_one() ? rels : saturation(rels, Polynomial::monomial(R, u));
    GroebnerBasis satgb = groebner(sat);
    bool member = false;
    for (const auto& c : C.gens)
      if (!contains(satgb, c)) {
        member = true;
        break;
      }
    if (member) out.push_back(MonomialPrime{mask});
  }
  sort_unique(out);
  return out;
}

PrimeSet attached_primes(const DeficiencyBattery& battery, int i) {
  if (i < 0 || i > battery.d) throw std::invalid_argument("attached_primes: index out of range");
  if (!battery.nonzero[i]) return {};
  return ass_multigraded(battery.K[i]);
}

std::vector<PrimeSet> attached_primes_all(const MonomialIdeal& I) {
  DeficiencyBattery B = ext_battery(I.quotient_module());
  std::vector<PrimeSet> out;
  for (int i = 0; i <= B.d; ++i) out.push_back(attached_primes(B, i));
  return out;
}

// --------------------------------------------------------------------------

MonomialIdeal largest_small_submodule_ideal(const MonomialIdeal& I, int e) {
  std::vector<MonomialIdeal> big;
  for (const auto& c : primary_decomposition(I)) {
    int dim = I.ring()->nvars() - c.prime.height();
    if (dim > e) big.push_back(c.component);
  }
  if (big.empty()) return MonomialIdeal::unit(I.ring());
  return intersect_all(big);
}

DimensionFiltration dimension_filtration(const MonomialIdeal& I) {
  DimensionFiltration F;
  F.I = I;
  auto comps = primary_decomposition(I);
  std::vector<int> dims;
  for (const auto& c : comps) dims.push_back(I.ring()->nvars() - c.prime.height());
  std::sort(dims.begin(), dims.end(), std::greater<int>());
  dims.erase(std::unique(dims.begin(), dims.end()), dims.end());

  F.chain.push_back(MonomialIdeal::unit(I.ring()));  // D_0 = M
  F.dims.push_back(dims[0]);
  for (size_t k = 1; k < dims.size(); ++k) {
    F.chain.push_back(largest_small_submodule_ideal(I, dims[k]));
    F.dims.push_back(dims[k]);
  }
  if (dims.back() > 0) {
    // H^0 = 0 terminates the filtration as the zero submodule D_t = I/I
    F.chain.push_back(I);
    F.dims.push_back(-1);
  }

  // Internal consistency: the Ass identities of the filtration layers against
  // an independent brute-force computation.
  const int n = I.ring()->nvars();
  PrimeSet ass = associated_primes(I);
  for (int i = 1; i <= F.steps(); ++i) {
    PrimeSet expect_sub, expect_quot, expect_layer;
    for (const auto& p : ass) {
      int dimp = n - p.height();
      if (dimp <= F.dims[i]) expect_sub.push_back(p);
      if (dimp > F.dims[i]) expect_quot.push_back(p);
      if (dimp == F.dims[i - 1]) expect_layer.push_back(p);
    }
    PresentedModule Di = ideal_quotient_module(F.chain[i], I);
    if (!Di.is_zero() && ass_multigraded(Di) != expect_sub)
      throw std::logic_error("dimension_filtration: Ass(D_i) identity failed");
    if (Di.is_zero() && !expect_sub.empty())
      throw std::logic_error("dimension_filtration: D_i vanished unexpectedly");
    if (ass_multigraded(F.chain[i].quotient_module()) != expect_quot)
      throw std::logic_error("dimension_filtration: Ass(M/D_i) identity failed");
    if (ass_multigraded(F.quotient(i)) != expect_layer)
      throw std::logic_error("dimension_filtration: Ass(D_{i-1}/D_i) identity failed");
  }
  return F;
}

PresentedModule ideal_quotient_module(const MonomialIdeal& J, const MonomialIdeal& I) {
  FreeModule s1 = FreeModule::rank_one(J.ring());
  std::vector<FreeElement> sub, rel;
  for (const auto& g : J.to_polynomials()) sub.push_back(FreeElement::single(s1, 0, g));
  for (const auto& g : I.to_polynomials()) rel.push_back(FreeElement::single(s1, 0, g));
  return subquotient(s1, sub, rel);
}

PresentedModule DimensionFiltration::quotient(int i) const {
  if (i < 1 || i > steps()) throw std::invalid_argument("filtration quotient index");
  return ideal_quotient_module(chain[i - 1], chain[i]);
}

}  // namespace seqcm
