#include "seqcm/invariants.hpp"

#include <random>

#include "seqcm/random_draw.hpp"

namespace seqcm {

int polynomial_type(const DeficiencyBattery& B) {
  int p = -1;
  for (int i = 0; i <= B.d - 1; ++i)
    if (B.nonzero[i]) p = std::max(p, B.dims[i]);
  return p;
}

int polynomial_type(const PresentedModule& M) {
  if (M.is_zero()) throw std::invalid_argument("polynomial_type: zero module");
  return polynomial_type(ext_battery(M));
}

int sp_via_filtration(const MonomialIdeal& I) {
  DimensionFiltration F = dimension_filtration(I);
  int sp = -1;
  for (int i = 1; i <= F.steps(); ++i) {
    PresentedModule Q = F.quotient(i);
    if (Q.is_zero()) throw std::logic_error("sp_via_filtration: zero filtration quotient");
    sp = std::max(sp, polynomial_type(Q));
  }
  return sp;
}

int sp_via_battery(const MonomialIdeal& I) {
  PresentedModule M = I.quotient_module();
  DeficiencyBattery B = ext_battery(M);
  std::vector<char> inD(B.d + 1, 0);
  for (const auto& p : associated_primes(I)) {
    int dim = I.ring()->nvars() - p.height();
    if (dim <= B.d) inD[dim] = 1;
  }
  int q1 = -1, q2 = -1;
  for (int i = 0; i <= B.d; ++i) {
    if (!B.nonzero[i]) continue;
    if (!inD[i])
      q1 = std::max(q1, B.dims[i]);
    else
      q2 = std::max(q2, polynomial_type(B.K[i]));
  }
  return std::max(q1, q2);
}

SpBreakdown sp_breakdown(const MonomialIdeal& I) {
  SpBreakdown b;
  DimensionFiltration F = dimension_filtration(I);
  for (int i = 1; i <= F.steps(); ++i) b.quotient_p.push_back(polynomial_type(F.quotient(i)));
  b.sp_filtration = -1;
  for (int p : b.quotient_p) b.sp_filtration = std::max(b.sp_filtration, p);

  PresentedModule M = I.quotient_module();
  DeficiencyBattery B = ext_battery(M);
  std::vector<char> inD(B.d + 1, 0);
  for (const auto& p : associated_primes(I)) {
    int dim = I.ring()->nvars() - p.height();
    if (dim <= B.d && !inD[dim]) {
      inD[dim] = 1;
      b.ass_dims.push_back(dim);
    }
  }
  std::sort(b.ass_dims.begin(), b.ass_dims.end());
  for (int i = 0; i <= B.d; ++i) {
    if (!B.nonzero[i]) continue;
    if (!inD[i])
      b.q1 = std::max(b.q1, B.dims[i]);
    else
      b.q2 = std::max(b.q2, polynomial_type(B.K[i]));
  }
  b.sp_battery = std::max(b.q1, b.q2);
  if (b.sp_battery != b.sp_filtration)
    throw std::logic_error("sequential polynomial type: filtration and battery routes disagree");
  return b;
}

namespace {

bool scm_via_filtration(const DimensionFiltration& F) {
  for (int i = 1; i <= F.steps(); ++i)
    if (!is_cohen_macaulay(F.quotient(i))) return false;
  return true;
}

bool scm_via_battery(const DeficiencyBattery& B) {
  for (int i = 0; i <= B.d; ++i)
    if (B.nonzero[i] && !(B.dims[i] == i && is_cohen_macaulay(B.K[i]))) return false;
  return true;
}

bool sgcm_via_filtration(const DimensionFiltration& F) {
  for (int i = 1; i <= F.steps(); ++i)
    if (!is_generalized_cm(F.quotient(i))) return false;
  return true;
}

bool sgcm_via_battery(const DeficiencyBattery& B) {
  for (int i = 0; i <= B.d; ++i) {
    if (!B.nonzero[i]) continue;
    if (B.dims[i] <= 0) continue;  // finite length
    if (!(B.dims[i] == i && is_generalized_cm(B.K[i]))) return false;
  }
  return true;
}

}  // namespace

bool is_sequentially_cm(const MonomialIdeal& I) {
  bool a = scm_via_filtration(dimension_filtration(I));
  bool b = scm_via_battery(ext_battery(I.quotient_module()));
  if (a != b) throw std::logic_error("sequential CM: filtration and battery routes disagree");
  return a;
}

bool is_sequentially_gcm(const MonomialIdeal& I) {
  bool a = sgcm_via_filtration(dimension_filtration(I));
  bool b = sgcm_via_battery(ext_battery(I.quotient_module()));
  if (a != b)
    throw std::logic_error("sequential gCM: filtration and battery routes disagree");
  return a;
}

int u0_dim(const MonomialIdeal& I) {
  const int d = I.quotient_dimension();
  MonomialIdeal J = largest_small_submodule_ideal(I, d - 1);
  if (J == I) return -1;  // U_M(0) = 0
  PresentedModule U = ideal_quotient_module(J, I);
  return U.is_zero() ? -1 : module_dimension(U);
}

int non_cm_locus_dim(const MonomialIdeal& I) {
  const RingPtr& R = I.ring();
  const int n = R->nvars();
  PresentedModule M = I.quotient_module();
  DeficiencyBattery B = ext_battery(M);

  // Ann of the nonzero deficiency modules, as monomial ideals
  std::vector<std::pair<int, std::vector<Monomial>>> anns;  // (i, gens of Ann K^i)
  for (int i = 0; i <= B.d; ++i) {
    if (!B.nonzero[i]) continue;
    std::vector<Monomial> gens;
    for (const auto& g : B.K[i].annihilator_ideal()) {
      if (!g.is_term() || g.is_zero())
        throw std::logic_error("non_cm_locus_dim: annihilator not monomial");
      gens.push_back(g.leading_term().mono);
    }
    anns.push_back({i, std::move(gens)});
  }
  PrimeSet minimals = minimal_primes(I);

  auto contains_ideal = [](VarMask p, const std::vector<Monomial>& gens) {
    for (const auto& g : gens)
      if ((g.support() & p) == 0) return false;
    return true;
  };

  int locus = -1;
  for (VarMask mask = 0; mask < (VarMask(1) << n); ++mask) {
    // p must contain Ann(M) = contain every generator of I
    bool inSupp = true;
    for (const auto& g : I.gens())
      if ((g.support() & mask) == 0) {
        inSupp = false;
        break;
      }
    if (!inSupp) continue;
    int ht = mask_size(mask);
    // depth M_p = ht - max{ n - i : p contains Ann K^i }
    int maxj = -1;
    for (const auto& [i, gens] : anns)
      if (contains_ideal(mask, gens)) maxj = std::max(maxj, n - i);
    if (maxj < 0) continue;  // M_p = 0
    int depth_p = ht - maxj;
    // dim M_p = max over minimal primes q <= p of ht(p) - ht(q)
    int dim_p = -1;
    for (const auto& q : minimals)
      if ((q.vars & ~mask) == 0) dim_p = std::max(dim_p, ht - q.height());
    if (dim_p != depth_p) locus = std::max(locus, n - ht);
  }
  return locus;
}

// ---------------------------------------------------------------------------

namespace {

Polynomial random_linear_in(std::mt19937_64& rng, const RingPtr& R, VarMask vars, int bound) {
  while (true) {
    std::vector<Term> terms;
    for (int i = 0; i < R->nvars(); ++i) {
      if (!(vars & (VarMask(1) << i))) continue;
      int c = draw_int(rng, -bound, bound);
      if (c != 0) terms.push_back(Term{Monomial::var(R->nvars(), i), Rational(c)});
    }
    if (!terms.empty()) return Polynomial(R, std::move(terms));
  }
}

}  // namespace

std::optional<std::vector<Polynomial>> sample_constrained_sop(
    const PresentedModule& M, std::optional<SequenceKind> constraint, std::mt19937_64& rng,
    int budget_per_step) {
  if (M.is_zero()) return std::nullopt;
  const RingPtr& R = M.ring();
  const int d = module_dimension(M);
  std::vector<Polynomial> fs;
  PresentedModule cur = M;
  for (int step = 0; step < d; ++step) {
    ClassifyContext ctx = make_context(cur);
    bool ok = false;
    for (int trial = 0; trial < budget_per_step && !ok; ++trial) {
      Polynomial cand = random_linear_in(rng, R, R->all_vars_mask(), 3);
      if (constraint && !classify_element(ctx, cand).passes(*constraint)) continue;
      PresentedModule next = cur.quotient_by(cand);
      int dn = next.is_zero() ? -1 : module_dimension(next);
      if (dn != ctx.dim - 1) continue;
      fs.push_back(cand);
      cur = std::move(next);
      ok = true;
    }
    if (!ok) return std::nullopt;
  }
  return fs;
}

std::optional<std::vector<Polynomial>> find_falsifying_sop(
    const MonomialIdeal& I, std::optional<SequenceKind> constraint, SequenceKind target,
    std::uint64_t seed, int budget) {
  PresentedModule M = I.quotient_module();
  const RingPtr& R = I.ring();
  const int d = module_dimension(M);
  DeficiencyBattery B = ext_battery(M);
  std::mt19937_64 rng(seed);

  // Attached primes whose avoidance the target notion demands.
  PrimeSet targets;
  int lo = target == SequenceKind::SequentialFilter ? 2 : 1;
  for (int i = lo; i <= d; ++i)
    for (const auto& p : attached_primes(B, i)) {
      if (target == SequenceKind::SequentialFilter && p.vars == R->all_vars_mask()) continue;
      targets.push_back(p);
    }
  sort_unique(targets);

  ClassifyContext ctx0 = make_context(M);
  for (const auto& p : targets) {
    for (int trial = 0; trial < budget; ++trial) {
      Polynomial f1 = random_linear_in(rng, R, p.vars, 3);
      if (constraint && !classify_element(ctx0, f1).passes(*constraint)) continue;
      PresentedModule next = M.quotient_by(f1);
      int dn = next.is_zero() ? -1 : module_dimension(next);
      if (dn != d - 1) continue;
      // extend to a full s.o.p. under the same constraint
      std::vector<Polynomial> fs{f1};
      if (d > 1) {
        auto rest = sample_constrained_sop(next, constraint, rng, budget);
        if (!rest) continue;
        fs.insert(fs.end(), rest->begin(), rest->end());
      }
      if (!is_sop(M, fs)) continue;
      if (constraint && !check_sequence(M, fs, *constraint).verdict) continue;
      if (!check_sequence(M, fs, target).verdict) return fs;
    }
  }
  // fall back to unsteered samples
  for (int trial = 0; trial < budget; ++trial) {
    auto fs = sample_constrained_sop(M, constraint, rng);
    if (!fs) break;
    if (!check_sequence(M, *fs, target).verdict) return fs;
  }
  return std::nullopt;
}

HarnessReport sampling_harness(const MonomialIdeal& I, int samples, std::uint64_t seed) {
  HarnessReport rep;
  rep.seed = seed;
  rep.samples = samples;
  PresentedModule M = I.quotient_module();
  const int d = module_dimension(M);

  bool cm = is_cohen_macaulay(M);
  bool gcm = is_generalized_cm(M);
  bool scm = is_sequentially_cm(I);
  bool sgcm = is_sequentially_gcm(I);
  bool h0_zero = largest_small_submodule_ideal(I, 0) == I;
  bool mprime_is_h0 =
      largest_small_submodule_ideal(I, 1) == largest_small_submodule_ideal(I, 0);

  struct Clause {
    std::string name;
    bool decider;
    bool conditions;
    std::optional<SequenceKind> constraint;
    SequenceKind target;
    bool applies;
  };
  std::vector<Clause> specs = {
      {"scm: filter s.o.p.s are sequential", scm, true, SequenceKind::FilterRegular,
       SequenceKind::Sequential, true},
      {"sgcm: generalized s.o.p.s are sequential-f", sgcm, true,
       SequenceKind::GeneralizedRegular, SequenceKind::SequentialFilter, true},
      {"cm: H^0 = 0 and s.o.p.s are sequential", cm, h0_zero, std::nullopt,
       SequenceKind::Sequential, d >= 2},
      {"gcm: M' = H^0 and s.o.p.s are sequential-f", gcm, mprime_is_h0, std::nullopt,
       SequenceKind::SequentialFilter, d >= 2},
  };

  for (size_t ci = 0; ci < specs.size(); ++ci) {
    const Clause& s = specs[ci];
    if (!s.applies) continue;
    ClauseReport c;
    c.clause = s.name;
    c.decider = s.decider;
    c.conditions = s.conditions;
    c.samples_total = samples;
    // deterministic per-clause seed derivation
    std::mt19937_64 rng(seed * 1000003ULL + ci * 7919ULL + 1);
    for (int k = 0; k < samples; ++k) {
      auto fs = sample_constrained_sop(M, s.constraint, rng);
      if (!fs) break;
      bool pass = check_sequence(M, *fs, s.target).verdict;
      if (pass)
        ++c.samples_pass;
      else if (!c.falsifier)
        c.falsifier = fs;
    }
    bool sampled_universal = c.samples_pass == c.samples_total;
    if (s.decider) {
      // decider true: conditions must hold and no sample may fail
      c.agree = s.conditions && sampled_universal;
    } else if (!s.conditions) {
      // right side already false; nothing else to show
      c.agree = true;
    } else {
      // need a pinned falsifier; steer the search if sampling found none
      if (!c.falsifier)
        c.falsifier = find_falsifying_sop(I, s.constraint, s.target,
                                          seed * 1000003ULL + ci * 7919ULL + 2);
      c.agree = c.falsifier.has_value();
    }
    rep.all_agree = rep.all_agree && c.agree;
    rep.clauses.push_back(std::move(c));
  }
  return rep;
}

Profile profile(const MonomialIdeal& I, std::uint64_t seed, int witness_budget) {
  Profile pr;
  PresentedModule M = I.quotient_module();
  if (M.is_zero()) throw std::invalid_argument("profile: zero module");
  DeficiencyBattery B = ext_battery(M);
  pr.dim = B.d;
  pr.depth = B.depth();
  pr.ass = associated_primes(I);
  for (int i = 0; i <= B.d; ++i) pr.att.push_back(attached_primes(B, i));

  DimensionFiltration F = dimension_filtration(I);
  pr.filtration_dims = F.dims;
  for (const auto& J : F.chain) pr.filtration_ideals.push_back(J.to_polynomials());
  for (int i = 1; i <= F.steps(); ++i) {
    PresentedModule Q = F.quotient(i);
    pr.quotient_cm.push_back(is_cohen_macaulay(Q) ? 1 : 0);
    pr.quotient_gcm.push_back(is_generalized_cm(Q) ? 1 : 0);
  }

  pr.is_cm = is_cohen_macaulay(B);
  pr.is_gcm = is_generalized_cm(B);
  pr.is_scm = is_sequentially_cm(I);
  pr.is_sgcm = is_sequentially_gcm(I);
  pr.p = polynomial_type(B);
  pr.breakdown = sp_breakdown(I);
  pr.sp = pr.breakdown.value();
  pr.ncm_dim = non_cm_locus_dim(I);
  pr.u0 = u0_dim(I);

  // consistency gates
  if (pr.is_cm != (pr.p == -1)) throw std::logic_error("profile: p(M) vs CM mismatch");
  if (pr.is_gcm != (pr.p <= 0)) throw std::logic_error("profile: p(M) vs gCM mismatch");
  if (pr.is_scm != (pr.sp == -1)) throw std::logic_error("profile: sp(M) vs sCM mismatch");
  if (pr.is_sgcm != (pr.sp <= 0)) throw std::logic_error("profile: sp(M) vs sgCM mismatch");
  if (!(pr.p <= pr.dim - 1 && pr.sp <= pr.dim - 1))
    throw std::logic_error("profile: polynomial type exceeds dim - 1");
  if (pr.p != std::max(pr.ncm_dim, pr.u0))
    throw std::logic_error("profile: p(M) differs from max(dim nCM, dim U_M(0))");

  if (pr.dim >= 1) {
    if (pr.is_scm)
      pr.witness_sequential_sop =
          find_sequence(M, SequenceKind::Sequential, pr.dim, seed, witness_budget);
    else
      pr.falsifying_sop = find_falsifying_sop(I, std::nullopt, SequenceKind::Sequential, seed);
  }
  return pr;
}

}  // namespace seqcm
