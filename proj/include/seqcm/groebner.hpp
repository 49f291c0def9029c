#pragma once

#include <optional>
#include <tuple>

#include "free_module.hpp"

namespace seqcm {

// Internal sparse representation for the Buchberger machinery: terms sorted
// strictly descending in the active module order.
struct VTerm {
  int comp;
  Monomial mono;
  Rational coeff;
};

struct VecPoly {
  std::vector<VTerm> terms;

  bool is_zero() const { return terms.empty(); }
  const VTerm& lead() const { return terms.front(); }
  int degree(const std::vector<int>& twists) const {
    return terms.empty() ? INT_MIN : terms.front().mono.degree() + twists[terms.front().comp];
  }
};

VecPoly to_vecpoly(const FreeElement& e, const ModuleOrder& ord);
FreeElement to_free_element(const FreeModule& mod, const VecPoly& v);

// Re-sorts terms under ord, merging duplicates and dropping zeros.
VecPoly normalize_vecpoly(std::vector<VTerm> terms, const ModuleOrder& ord);

// f - c * m * g, both sorted under ord.
VecPoly axpy(const VecPoly& f, const Rational& c, const Monomial& m, const VecPoly& g,
             const ModuleOrder& ord);

struct GroebnerBasis {
  FreeModule ambient;
  ModuleOrder order = ModuleOrder::top();
  std::vector<VecPoly> elems;  // monic leading coefficients
  bool reduced = false;

  bool is_zero_module() const { return elems.empty(); }
};

// Buchberger's algorithm with the Gebauer-Moller pair criteria. Input must be
// homogeneous; pairs are processed degree by degree. With reduce=true the
// result is the unique reduced basis for the order.
GroebnerBasis buchberger(const FreeModule& ambient, const std::vector<VecPoly>& gens,
                         const ModuleOrder& ord, bool reduce = true);
GroebnerBasis buchberger(const FreeModule& ambient, const std::vector<FreeElement>& gens,
                         const ModuleOrder& ord, bool reduce = true);

// Full normal form: no term of the result is divisible by a leading term of
// gb. With quotients non-null, records ops so that
//   f = result + sum_k c_k * m_k * gb.elems[k].
VecPoly normal_form(VecPoly f, const GroebnerBasis& gb,
                    std::vector<std::tuple<int, Monomial, Rational>>* quotients = nullptr);
FreeElement normal_form(const FreeElement& f, const GroebnerBasis& gb);

bool contains(const GroebnerBasis& gb, const FreeElement& f);

// All-pairs Schreyer syzygies of a Groebner basis. The result lives in the
// free module with one generator per basis element (twists = their degrees)
// and is itself a Groebner basis for the induced Schreyer order.
struct SyzygyModule {
  FreeModule ambient;          // free on the gb elements
  ModuleOrder schreyer_order = ModuleOrder::top();
  std::vector<VecPoly> gens;   // sorted under schreyer_order
};
SyzygyModule syzygies_of_basis(const GroebnerBasis& gb);

// ---------------------------------------------------------------------------
// Submodules of graded free modules and derived constructions. All of these
// go through elimination orders on G + F blocks.

struct Submodule {
  FreeModule ambient;
  std::vector<FreeElement> gens;

  static Submodule zero(const FreeModule& amb) { return Submodule{amb, {}}; }
};

GroebnerBasis groebner(const Submodule& sub, const ModuleOrder& ord = ModuleOrder::top());

bool is_zero_submodule(const Submodule& sub);
bool submodule_contains(const GroebnerBasis& gb_of_N, const FreeElement& f);
bool submodule_leq(const Submodule& a, const GroebnerBasis& gb_of_b);
bool submodule_equal(const Submodule& a, const Submodule& b);

// Kernel of the map F -> G sending basis element j to columns[j].
// source_twists define F (must make every column homogeneous).
Submodule kernel_of_map(const FreeModule& target, const std::vector<FreeElement>& columns,
                        const std::vector<int>& source_twists);

// Expresses v as a combination of the columns if possible: returns q with
// v = sum q_j columns[j].
std::optional<std::vector<Polynomial>> lift_through(const FreeModule& target,
                                                    const std::vector<FreeElement>& columns,
                                                    const std::vector<int>& source_twists,
                                                    const FreeElement& v);

// (N : f) = { v in F0 : f v in N }.
Submodule colon(const Submodule& N, const Polynomial& f);
// (N : (g_1,...,g_k)), the intersection of the (N : g_i).
Submodule colon(const Submodule& N, const std::vector<Polynomial>& ideal_gens);
// (N : f^inf), stabilized colon chain.
Submodule saturation(const Submodule& N, const Polynomial& f);

Submodule intersect(const Submodule& A, const Submodule& B);

// Prunes to a subset generating the same submodule, no member redundant.
std::vector<FreeElement> minimal_generators(const FreeModule& ambient,
                                            std::vector<FreeElement> gens);

}  // namespace seqcm
