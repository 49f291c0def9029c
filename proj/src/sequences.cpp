#include "seqcm/sequences.hpp"

#include <random>

#include "seqcm/random_draw.hpp"
#include <sstream>

namespace seqcm {

std::string kind_name(SequenceKind k) {
  switch (k) {
    case SequenceKind::Regular: return "regular";
    case SequenceKind::FilterRegular: return "filter";
    case SequenceKind::GeneralizedRegular: return "generalized";
    case SequenceKind::Sequential: return "sequential";
    case SequenceKind::SequentialFilter: return "sequential-f";
  }
  return "?";
}

std::optional<SequenceKind> kind_from_name(std::string_view name) {
  if (name == "regular") return SequenceKind::Regular;
  if (name == "filter" || name == "f") return SequenceKind::FilterRegular;
  if (name == "generalized" || name == "genreg") return SequenceKind::GeneralizedRegular;
  if (name == "sequential" || name == "seq") return SequenceKind::Sequential;
  if (name == "sequential-f" || name == "seqf") return SequenceKind::SequentialFilter;
  return std::nullopt;
}

bool ElementClassification::passes(SequenceKind k) const {
  switch (k) {
    case SequenceKind::Regular: return regular;
    case SequenceKind::FilterRegular: return f_element;
    case SequenceKind::GeneralizedRegular: return generalized_regular;
    case SequenceKind::Sequential: return sequential;
    case SequenceKind::SequentialFilter: return sequential_f;
  }
  return false;
}

ClassifyContext make_context(PresentedModule M) {
  ClassifyContext ctx;
  ctx.battery = ext_battery(M);
  ctx.dim = ctx.battery.d;
  ctx.M = std::move(M);
  return ctx;
}

ElementClassification classify_element(const ClassifyContext& ctx, const Polynomial& f) {
  if (f.is_zero() || f.degree() == 0)
    throw std::invalid_argument("classify_element: element must have positive degree");
  if (!f.is_homogeneous())
    throw std::invalid_argument("classify_element: element must be homogeneous");
  if (ctx.M.is_zero()) throw std::invalid_argument("classify_element: zero module");

  ElementClassification c;
  PresentedModule ker = ctx.M.annihilator_submodule(f);
  bool ker_zero = ker.is_zero();
  c.kernel_dim = ker_zero ? -1 : module_dimension(ker);
  c.regular = ker_zero;
  c.f_element = c.kernel_dim <= 0;
  c.generalized_regular = c.kernel_dim <= 1;

  const int d = ctx.dim;
  c.battery_kernel_dims.assign(d + 1, -1);
  c.sequential = true;
  c.sequential_f = true;
  std::ostringstream note;
  for (int i = 1; i <= d; ++i) {
    if (!ctx.battery.nonzero[i]) continue;
    PresentedModule ki_ker = ctx.battery.K[i].annihilator_submodule(f);
    bool kz = ki_ker.is_zero();
    int kd = kz ? -1 : module_dimension(ki_ker);
    c.battery_kernel_dims[i] = kd;
    if (!kz && c.sequential) {
      c.sequential = false;
      note << "multiplication is not injective on the deficiency module K^" << i;
    }
    if (i >= 2 && kd > 0 && c.sequential_f) {
      c.sequential_f = false;
      if (note.tellp() > 0) note << "; ";
      note << "kernel on K^" << i << " has dimension " << kd;
    }
  }
  c.failure_note = note.str();
  return c;
}

ElementClassification classify_element(const PresentedModule& M, const Polynomial& f) {
  return classify_element(make_context(M), f);
}

SequenceReport check_sequence(const PresentedModule& M, const std::vector<Polynomial>& fs,
                              SequenceKind kind) {
  SequenceReport rep;
  rep.kind = kind;
  rep.verdict = true;
  PresentedModule cur = M;
  for (size_t i = 0; i < fs.size(); ++i) {
    if (cur.is_zero()) {
      // every element is vacuously everything on the zero module except
      // regular, which asks for injectivity on nothing -- also fine
      rep.dims_trail.push_back(-1);
      continue;
    }
    ClassifyContext ctx = make_context(cur);
    if (rep.dims_trail.empty()) rep.dims_trail.push_back(ctx.dim);
    ElementClassification c = classify_element(ctx, fs[i]);
    if (!c.passes(kind)) {
      rep.verdict = false;
      rep.first_failure = static_cast<int>(i);
      std::ostringstream os;
      os << "element " << i + 1 << " (" << fs[i].to_string() << ") is not "
         << kind_name(kind);
      if (!c.failure_note.empty()) os << ": " << c.failure_note;
      rep.reason = os.str();
      return rep;
    }
    cur = cur.quotient_by(fs[i]);
    rep.dims_trail.push_back(cur.is_zero() ? -1 : module_dimension(cur));
  }
  return rep;
}

bool is_part_of_sop(const PresentedModule& M, const std::vector<Polynomial>& fs) {
  for (const auto& f : fs) {
    if (f.is_zero() || !f.is_homogeneous() || f.degree() < 1) return false;
  }
  int d = M.is_zero() ? -1 : module_dimension(M);
  if (static_cast<int>(fs.size()) > d) return false;
  if (fs.empty()) return true;
  PresentedModule q = M.quotient_by(fs);
  int dq = q.is_zero() ? -1 : module_dimension(q);
  return dq == d - static_cast<int>(fs.size());
}

bool is_sop(const PresentedModule& M, const std::vector<Polynomial>& fs) {
  int d = M.is_zero() ? -1 : module_dimension(M);
  return static_cast<int>(fs.size()) == d && is_part_of_sop(M, fs);
}

namespace {

Polynomial random_combination(std::mt19937_64& rng, const RingPtr& R,
                              const std::vector<Polynomial>& pool, int bound) {
  while (true) {
    Polynomial f = Polynomial::zero(R);
    for (const auto& p : pool) {
      int c = draw_int(rng, -bound, bound);
      if (c != 0) f = f + p.scaled(Rational(c));
    }
    if (!f.is_zero()) return f;
  }
}

std::vector<Polynomial> variable_pool(const RingPtr& R) {
  std::vector<Polynomial> pool;
  for (int i = 0; i < R->nvars(); ++i) pool.push_back(Polynomial::variable(R, i));
  return pool;
}

}  // namespace

std::optional<std::vector<Polynomial>> find_sequence(const PresentedModule& M, SequenceKind kind,
                                                     int length, std::uint64_t seed,
                                                     int budget_per_step) {
  std::mt19937_64 rng(seed);
  const RingPtr& R = M.ring();
  auto pool = variable_pool(R);

  std::vector<Polynomial> found;
  PresentedModule cur = M;
  for (int step = 0; step < length; ++step) {
    if (cur.is_zero()) return std::nullopt;
    ClassifyContext ctx = make_context(cur);
    bool ok = false;
    for (int trial = 0; trial < budget_per_step && !ok; ++trial) {
      // structured first attempts: the variables themselves
      Polynomial cand = trial < R->nvars() ? pool[trial]
                                           : random_combination(rng, R, pool, 3);
      ElementClassification c = classify_element(ctx, cand);
      if (!c.passes(kind)) continue;
      PresentedModule next = cur.quotient_by(cand);
      int dn = next.is_zero() ? -1 : module_dimension(next);
      if (ctx.dim >= 1 && dn != ctx.dim - 1) continue;  // keep it a part of s.o.p.
      found.push_back(cand);
      cur = std::move(next);
      ok = true;
    }
    if (!ok) return std::nullopt;
  }
  return found;
}

namespace {

long long mult_rec(const PresentedModule& M, const std::vector<Polynomial>& fs, size_t idx) {
  if (M.is_zero()) return 0;
  if (idx == fs.size()) {
    auto len = module_length(M);
    if (!len) throw std::invalid_argument("multiplicity: not a system of parameters");
    return *len;
  }
  long long a = mult_rec(M.quotient_by(fs[idx]), fs, idx + 1);
  long long b = mult_rec(M.annihilator_submodule(fs[idx]), fs, idx + 1);
  return a - b;
}

}  // namespace

long long multiplicity(const PresentedModule& M, const std::vector<Polynomial>& sop) {
  if (!is_sop(M, sop)) throw std::invalid_argument("multiplicity: not a system of parameters");
  return mult_rec(M, sop, 0);
}

long long length_multiplicity_gap(const PresentedModule& M, const std::vector<Polynomial>& sop,
                                  const std::vector<int>& powers) {
  if (powers.size() != sop.size())
    throw std::invalid_argument("length_multiplicity_gap: power count mismatch");
  long long e = multiplicity(M, sop);
  std::vector<Polynomial> powered;
  long long prod = 1;
  for (size_t i = 0; i < sop.size(); ++i) {
    if (powers[i] < 1) throw std::invalid_argument("length_multiplicity_gap: powers must be >= 1");
    powered.push_back(sop[i].pow(powers[i]));
    prod *= powers[i];
  }
  auto len = module_length(M.quotient_by(powered));
  if (!len) throw std::logic_error("length_multiplicity_gap: quotient not of finite length");
  return *len - prod * e;
}

std::vector<Polynomial> cohomology_annihilator_product(const PresentedModule& N) {
  const RingPtr& R = N.ring();
  Polynomial one = Polynomial::constant(R, Rational(1));
  if (N.is_zero()) return {one};
  DeficiencyBattery B = ext_battery(N);
  std::vector<Polynomial> acc{one};
  for (int i = 0; i < B.d; ++i) {
    if (!B.nonzero[i]) continue;  // Ann of the zero module is the unit ideal
    std::vector<Polynomial> ann = B.K[i].annihilator_ideal();
    std::vector<Polynomial> next;
    for (const auto& a : acc)
      for (const auto& b : ann) next.push_back(a * b);
    acc = std::move(next);
    if (acc.empty()) return {};  // some annihilator was zero -- cannot happen for dim < d
  }
  return acc;
}

bool is_p_standard_sop(const PresentedModule& M, const std::vector<Polynomial>& fs) {
  if (!is_sop(M, fs)) throw std::invalid_argument("is_p_standard_sop: not a system of parameters");
  const int d = static_cast<int>(fs.size());
  FreeModule s1 = FreeModule::rank_one(M.ring());
  for (int i = d; i >= 1; --i) {
    std::vector<Polynomial> tail(fs.begin() + i, fs.end());
    PresentedModule N = tail.empty() ? M : M.quotient_by(tail);
    std::vector<Polynomial> a = cohomology_annihilator_product(N);
    Submodule ideal = Submodule::zero(s1);
    for (const auto& g : a) ideal.gens.push_back(FreeElement::single(s1, 0, g));
    GroebnerBasis gb = groebner(ideal);
    if (!contains(gb, FreeElement::single(s1, 0, fs[i - 1]))) return false;
  }
  return true;
}

std::optional<std::vector<Polynomial>> find_p_standard_sop(const PresentedModule& M,
                                                           std::uint64_t seed,
                                                           int budget_per_step) {
  std::mt19937_64 rng(seed);
  const RingPtr& R = M.ring();
  if (M.is_zero()) return std::nullopt;
  const int d = module_dimension(M);
  std::vector<Polynomial> rev;  // built from f_d down to f_1
  PresentedModule cur = M;
  for (int step = 0; step < d; ++step) {
    std::vector<Polynomial> a = cohomology_annihilator_product(cur);
    bool unit = false;
    for (const auto& g : a)
      if (!g.is_zero() && g.degree() == 0) unit = true;
    // candidate pool: generators of a (grouped by degree) or, if a is the
    // unit ideal, the variables
    std::vector<Polynomial> pool;
    if (unit) {
      pool = variable_pool(R);
    } else {
      int min_deg = INT_MAX;
      for (const auto& g : a)
        if (!g.is_zero()) min_deg = std::min(min_deg, g.degree());
      for (const auto& g : a)
        if (!g.is_zero() && g.degree() == min_deg) pool.push_back(g);
    }
    int dcur = module_dimension(cur);
    bool ok = false;
    for (int trial = 0; trial < budget_per_step && !ok; ++trial) {
      Polynomial cand = trial < static_cast<int>(pool.size())
                            ? pool[trial]
                            : random_combination(rng, R, pool, 3);
      if (cand.is_zero() || cand.degree() < 1 || !cand.is_homogeneous()) continue;
      PresentedModule next = cur.quotient_by(cand);
      int dn = next.is_zero() ? -1 : module_dimension(next);
      if (dn != dcur - 1) continue;
      rev.push_back(cand);
      cur = std::move(next);
      ok = true;
    }
    if (!ok) return std::nullopt;
  }
  std::vector<Polynomial> fs(rev.rbegin(), rev.rend());
  if (!is_p_standard_sop(M, fs)) return std::nullopt;
  return fs;
}

}  // namespace seqcm
