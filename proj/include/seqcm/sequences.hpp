#pragma once

#include <cstdint>
#include <optional>

#include "monomial_tools.hpp"

namespace seqcm {

enum class SequenceKind { Regular, FilterRegular, GeneralizedRegular, Sequential, SequentialFilter };

std::string kind_name(SequenceKind k);
std::optional<SequenceKind> kind_from_name(std::string_view name);

// Classification of one homogeneous element against all five notions.
//   regular              (0 :_M f) = 0
//   f-element            dim (0 :_M f) <= 0
//   generalized regular  dim (0 :_M f) <= 1
//   sequential           f is K^i-regular for every nonzero K^i, 1 <= i <= d
//   sequential f-element f is an f-element of K^i for every i, 2 <= i <= d
struct ElementClassification {
  bool regular = false;
  bool f_element = false;
  bool generalized_regular = false;
  bool sequential = false;
  bool sequential_f = false;

  int kernel_dim = -1;                  // dim (0 :_M f)
  std::vector<int> battery_kernel_dims; // dim (0 :_{K^i} f), index 0..d; -1 when zero
  std::string failure_note;             // first offending kernel, for reports

  bool passes(SequenceKind k) const;
};

// Shared per-module data for classifying many elements.
struct ClassifyContext {
  PresentedModule M;
  DeficiencyBattery battery;
  int dim = -1;
};

ClassifyContext make_context(PresentedModule M);

ElementClassification classify_element(const ClassifyContext& ctx, const Polynomial& f);
ElementClassification classify_element(const PresentedModule& M, const Polynomial& f);

struct SequenceReport {
  SequenceKind kind = SequenceKind::Regular;
  bool verdict = false;
  int first_failure = -1;    // step index (0-based) of the first failure
  std::string reason;
  std::vector<int> dims_trail;  // dim M, dim M/f_1 M, ...
};

// Iterated check: f_{i+1} must classify positively on M/(f_1,...,f_i)M.
SequenceReport check_sequence(const PresentedModule& M, const std::vector<Polynomial>& fs,
                              SequenceKind kind);

// Full system of parameters: |fs| = dim M and dim M/(fs)M = 0; a part drops
// the dimension by its length.
bool is_sop(const PresentedModule& M, const std::vector<Polynomial>& fs);
bool is_part_of_sop(const PresentedModule& M, const std::vector<Polynomial>& fs);

// Seeded random search for a witness sequence of the given kind whose steps
// each drop the dimension. Returns nullopt when the retry budget runs out
// ("not found", never "does not exist").
std::optional<std::vector<Polynomial>> find_sequence(const PresentedModule& M, SequenceKind kind,
                                                     int length, std::uint64_t seed,
                                                     int budget_per_step = 200);

// Multiplicity e(fs; M) by the classical additive recursion
//   e(f_1,...,f_d; M) = e(f_2,...; M/f_1 M) - e(f_2,...; (0 :_M f_1)).
long long multiplicity(const PresentedModule& M, const std::vector<Polynomial>& sop);

// ell(M/(f_1^{n_1},...,f_d^{n_d})M) - n_1...n_d e(fs; M), always >= 0.
long long length_multiplicity_gap(const PresentedModule& M, const std::vector<Polynomial>& sop,
                                  const std::vector<int>& powers);

// Product ideal a(N) = prod_{i < dim N} Ann K^i(N).
std::vector<Polynomial> cohomology_annihilator_product(const PresentedModule& N);

// fs is p-standard: f_d lies in a(M) and each earlier f_i in
// a(M/(f_{i+1},...,f_d)M).
bool is_p_standard_sop(const PresentedModule& M, const std::vector<Polynomial>& fs);

std::optional<std::vector<Polynomial>> find_p_standard_sop(const PresentedModule& M,
                                                           std::uint64_t seed,
                                                           int budget_per_step = 300);

}  // namespace seqcm
