#pragma once

#include <random>

#include "sequences.hpp"

namespace seqcm {

// p(M) = max_{i <= d-1} dim K^i(M); -1 exactly when M is Cohen-Macaulay,
// <= 0 exactly when generalized Cohen-Macaulay.
int polynomial_type(const DeficiencyBattery& B);
int polynomial_type(const PresentedModule& M);

// Both computations of the sequential polynomial type:
//   filtration route: max p(D_{i-1}/D_i) over the dimension filtration;
//   battery route:    max(q1, q2) with q1 = max_{i not in D(M)} dim K^i and
//                     q2 = max_{i in D(M)} p(K^i), D(M) the Ass dimensions.
struct SpBreakdown {
  std::vector<int> quotient_p;  // per filtration quotient, top first
  int sp_filtration = -1;
  std::vector<int> ass_dims;    // D(M), ascending
  int q1 = -1;
  int q2 = -1;
  int sp_battery = -1;

  int value() const { return sp_filtration; }
};

int sp_via_filtration(const MonomialIdeal& I);
int sp_via_battery(const MonomialIdeal& I);
// Computes both routes; throws std::logic_error if they disagree.
SpBreakdown sp_breakdown(const MonomialIdeal& I);

// Two independent routes, which must agree:
//   filtration: every D_{i-1}/D_i is CM (resp. gCM);
//   battery:    every nonzero K^i is CM of dimension exactly i
//               (resp. of finite length or gCM of dimension i).
bool is_sequentially_cm(const MonomialIdeal& I);
bool is_sequentially_gcm(const MonomialIdeal& I);

// dim of the non-Cohen-Macaulay locus, brute-forced over monomial primes
// containing Ann M; -1 when empty. dim M_p and depth M_p come from the
// localized Ext supports.
int non_cm_locus_dim(const MonomialIdeal& I);

// dim U_M(0), the largest submodule of dimension < d; -1 when zero.
int u0_dim(const MonomialIdeal& I);

// ---------------------------------------------------------------------------
// Sampled equivalences: decider verdicts against sequence behavior of
// randomly drawn systems of parameters. A disagreement is a bug.

struct ClauseReport {
  std::string clause;
  bool decider = false;        // the engine's verdict for the clause's module class
  bool conditions = true;      // side conditions (H^0 = 0, M' = H^0)
  int samples_pass = 0;
  int samples_total = 0;
  std::optional<std::vector<Polynomial>> falsifier;  // pinned failing s.o.p.
  bool agree = false;
};

struct HarnessReport {
  std::vector<ClauseReport> clauses;
  bool all_agree = true;
  std::uint64_t seed = 0;
  int samples = 0;
};

// Samples s.o.p.s of each constrained kind und checks the implied sequence
// property against the sCM/sgCM/CM/gCM verdicts.
HarnessReport sampling_harness(const MonomialIdeal& I, int samples, std::uint64_t seed);

// Random s.o.p. of M whose steps satisfy `constraint` (pass nullopt for no
// constraint beyond being a parameter element).
std::optional<std::vector<Polynomial>> sample_constrained_sop(
    const PresentedModule& M, std::optional<SequenceKind> constraint, std::mt19937_64& rng,
    int budget_per_step = 200);

// Searches for an s.o.p. satisfying `constraint` that fails `target`,
// steering the first element into an attached prime of positive dimension.
std::optional<std::vector<Polynomial>> find_falsifying_sop(
    const MonomialIdeal& I, std::optional<SequenceKind> constraint, SequenceKind target,
    std::uint64_t seed, int budget = 60);

// ---------------------------------------------------------------------------

struct Profile {
  int dim = -1;
  int depth = -1;
  PrimeSet ass;
  std::vector<PrimeSet> att;        // index 0..dim
  std::vector<int> filtration_dims; // dim D_0 > dim D_1 > ...
  std::vector<std::vector<Polynomial>> filtration_ideals;
  std::vector<char> quotient_cm, quotient_gcm;
  bool is_cm = false, is_gcm = false, is_scm = false, is_sgcm = false;
  int p = -1;
  int sp = -1;
  SpBreakdown breakdown;
  int ncm_dim = -1;
  int u0 = -1;
  std::optional<std::vector<Polynomial>> witness_sequential_sop;
  std::optional<std::vector<Polynomial>> falsifying_sop;
};

Profile profile(const MonomialIdeal& I, std::uint64_t seed, int witness_budget = 40);

}  // namespace seqcm
