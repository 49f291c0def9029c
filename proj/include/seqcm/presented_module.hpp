#pragma once

#include <functional>
#include <mutex>
#include <optional>

#include "groebner.hpp"

namespace seqcm {

// A graded module given by a free presentation: M = coker(phi : F1 -> F0),
// the columns of phi stored as elements of F0 (F1 twists are their degrees).
// Every module this engine touches -- quotients S/I, syzygies, deficiency
// modules, filtration subquotients -- is one of these.
class PresentedModule {
 public:
  PresentedModule() = default;
  PresentedModule(FreeModule f0, std::vector<FreeElement> relations);

  // S/I for an ideal given by generators.
  static PresentedModule quotient_ring(const RingPtr& ring, std::vector<Polynomial> ideal_gens);
  static PresentedModule free_module(const FreeModule& f0);
  static PresentedModule zero_module(const RingPtr& ring);

  const FreeModule& f0() const { return f0_; }
  const std::vector<FreeElement>& relations() const { return rels_; }
  const RingPtr& ring() const { return f0_.ring; }

  const GroebnerBasis& relations_gb() const;

  bool is_zero() const;

  // M / fM and M / (f_1,...,f_k) M.
  PresentedModule quotient_by(const Polynomial& f) const;
  PresentedModule quotient_by(const std::vector<Polynomial>& fs) const;

  // (0 :_M f) and (0 :_M a) for an ideal a, as presented modules.
  PresentedModule annihilator_submodule(const Polynomial& f) const;
  PresentedModule annihilator_submodule(const std::vector<Polynomial>& ideal_gens) const;

  // Ann(M) as an ideal of S.
  std::vector<Polynomial> annihilator_ideal() const;

  // Direct sum.
  PresentedModule direct_sum(const PresentedModule& other) const;

 private:
  struct GbCache {
    std::once_flag flag;
    std::optional<GroebnerBasis> gb;
  };

  FreeModule f0_;
  std::vector<FreeElement> rels_;
  // copies share the cache; call_once keeps concurrent readers safe
  mutable std::shared_ptr<GbCache> gb_cache_ = std::make_shared<GbCache>();
};

// Presents (span(sub_gens) + span(rel_gens)) / span(rel_gens), the workhorse
// for kernels-mod-images and filtration quotients. Generators of the result
// are the sub_gens; relations come from one syzygy computation.
PresentedModule subquotient(const FreeModule& ambient, const std::vector<FreeElement>& sub_gens,
                            const std::vector<FreeElement>& rel_gens);

// ---------------------------------------------------------------------------
// Hilbert-series data, dimension, length.

// The numerator N(t) with HS_M(t) = N(t) / (1-t)^n, stored with a power
// offset so negative twists are fine: N(t) = t^offset * sum coeffs[i] t^i.
struct HilbertNumerator {
  long long offset = 0;
  std::vector<long long> coeffs;

  bool is_zero() const;
  // Multiplicity of the root t = 1.
  int vanishing_order_at_one() const;
  // Divides by (1-t)^k exactly; throws if not divisible.
  HilbertNumerator divide_by_one_minus_t(int k) const;
  long long value_at_one() const;
};

HilbertNumerator hilbert_numerator(const std::vector<Monomial>& monomial_ideal_gens, int nvars);

// Leading-term monomial ideals of the relations, one per component of F0.
std::vector<std::vector<Monomial>> lead_module(const PresentedModule& M);

// Krull dimension of S/L for a monomial ideal, combinatorially: the largest
// coordinate subspace disjoint from the staircase.
int dim_monomial_quotient(const std::vector<Monomial>& gens, int nvars);

// Krull dimension; -1 for the zero module. Computed from the Hilbert
// numerator of the initial module, cross-checked combinatorially.
int module_dimension(const PresentedModule& M);

// Length if dim <= 0; nullopt marks infinite length.
std::optional<long long> module_length(const PresentedModule& M);

// dim_Q of the degree-k graded piece.
long long hilbert_function(const PresentedModule& M, int k);

// Number of monomials of degree d in n variables that avoid the staircase.
long long count_standard_monomials(const std::vector<Monomial>& gens, int nvars, int degree);

void enumerate_monomials(int nvars, int degree, const std::function<void(const Monomial&)>& fn);

}  // namespace seqcm
