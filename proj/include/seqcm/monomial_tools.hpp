#pragma once

#include "homology.hpp"

namespace seqcm {

// Prime generated by a subset of the variables; the empty subset is the zero
// ideal. dim(S/p) = n - |vars|.
struct MonomialPrime {
  VarMask vars = 0;

  bool operator==(const MonomialPrime& o) const { return vars == o.vars; }
  bool operator<(const MonomialPrime& o) const;  // canonical report order

  int height() const { return mask_size(vars); }
  bool contains_monomial(const Monomial& m) const { return (m.support() & vars) != 0; }
  // A linear/arbitrary homogeneous f lies in p iff every monomial does, i.e.
  // each term has a variable of p.
  bool contains(const Polynomial& f) const;
  std::string to_string(const Ring& ring) const;
};

using PrimeSet = std::vector<MonomialPrime>;  // kept sorted, unique

void sort_unique(PrimeSet& s);

// Monomial ideal with its minimal (antichain) generating set.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  MonomialIdeal(RingPtr ring, std::vector<Monomial> gens);

  static MonomialIdeal unit(const RingPtr& ring);
  static MonomialIdeal zero(const RingPtr& ring);
  static MonomialIdeal of_prime(const RingPtr& ring, const MonomialPrime& p);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
  bool is_zero_ideal() const { return gens_.empty(); }

  bool contains(const Monomial& m) const;
  bool contains(const MonomialIdeal& other) const;  // other subset of this
  bool operator==(const MonomialIdeal& o) const;

  MonomialIdeal plus(const Monomial& m) const;
  MonomialIdeal intersect(const MonomialIdeal& o) const;
  MonomialIdeal radical() const;
  int quotient_dimension() const;  // dim S/I

  std::vector<Polynomial> to_polynomials() const;
  PresentedModule quotient_module() const;  // S/I

 private:
  RingPtr ring_;
  std::vector<Monomial> gens_;
};

MonomialIdeal intersect_all(const std::vector<MonomialIdeal>& ideals);

// Irredundant primary decomposition by recursive generator splitting; each
// component is generated by pure variable powers and paired with its radical.
struct PrimaryComponent {
  MonomialIdeal component;
  MonomialPrime prime;
};
std::vector<PrimaryComponent> primary_decomposition(const MonomialIdeal& I);

// Ass(S/I) = primes of the irredundant decomposition.
PrimeSet associated_primes(const MonomialIdeal& I);
PrimeSet minimal_primes(const MonomialIdeal& I);

// Associated primes of a Z^n-graded presented module, brute-forced over the
// 2^n monomial primes via p in Ass(N) <=> (0 :_N p) localized away from p is
// nonzero. The presentation must have term entries (built from monomial data).
PrimeSet ass_multigraded(const PresentedModule& N);

// Att H^i_m(M) = Ass K^i(M) for the quotient by a monomial ideal.
PrimeSet attached_primes(const DeficiencyBattery& battery, int i);
std::vector<PrimeSet> attached_primes_all(const MonomialIdeal& I);

// The dimension filtration 0 or H^0 = D_t < ... < D_1 < D_0 = S/I, realized
// by the chain of ideals J with D_i = J_i / I: J = intersection of the
// primary components of dimension > e.
struct DimensionFiltration {
  MonomialIdeal I;
  std::vector<MonomialIdeal> chain;  // chain[i] = J_i, chain[0] = (unit) for D_0 = M
  std::vector<int> dims;             // dims[i] = dim D_i; dims[0] = dim M

  int steps() const { return static_cast<int>(chain.size()) - 1; }  // = t
  // D_{i-1}/D_i = J_{i-1}/J_i as a presented module, 1 <= i <= t.
  PresentedModule quotient(int i) const;
};

DimensionFiltration dimension_filtration(const MonomialIdeal& I);

// Chain ideal J(e) with J(e)/I = the largest submodule of S/I of dimension
// <= e; e = d-1 gives U_M(0), e = 1 the M' of the finite-length tests, e = 0
// the ideal behind H^0_m.
MonomialIdeal largest_small_submodule_ideal(const MonomialIdeal& I, int e);

// J/I as a presented module for ideals I <= J.
PresentedModule ideal_quotient_module(const MonomialIdeal& J, const MonomialIdeal& I);

}  // namespace seqcm
