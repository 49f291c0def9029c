#include "doctest.h"
#include "fixtures_common.hpp"
#include "seqcm/invariants.hpp"
#include "test_helpers.hpp"

using namespace seqcm;
using namespace seqcm::testing;

namespace {

MonomialIdeal fixture_ideal(const Fixture& f) {
  std::vector<Monomial> gens;
  for (const auto& p : f.ideal) gens.push_back(p.leading_term().mono);
  return MonomialIdeal(f.ring, gens);
}

}  // namespace

TEST_CASE("classification on the two-planes-along-a-line quotient") {
  auto f = two_planes_line();
  auto ctx = make_context(f.module);

  auto xz = classify_element(ctx, parse_polynomial(f.ring, "x + z"));
  CHECK(xz.regular);
  CHECK_FALSE(xz.sequential_f);  // x+z lies in the attached prime (x,y,z,t) of H^2
  CHECK_FALSE(xz.sequential);

  auto w = classify_element(ctx, parse_polynomial(f.ring, "w"));
  CHECK(w.regular);
  CHECK(w.sequential);
  CHECK(w.sequential_f);
}

TEST_CASE("classification on the mixed-chain quotient") {
  auto f = mixed_chain();
  auto ctx = make_context(f.module);

  auto xz = classify_element(ctx, parse_polynomial(f.ring, "x + z"));
  CHECK(xz.sequential);
  CHECK_FALSE(xz.regular);

  auto y = classify_element(ctx, parse_polynomial(f.ring, "y"));
  CHECK(y.sequential_f);
  CHECK_FALSE(y.f_element);  // y lies in the associated prime (y,z) of dimension 1
}

TEST_CASE("classify rejects bad input") {
  auto f = mixed_chain();
  auto ctx = make_context(f.module);
  CHECK_THROWS_AS(classify_element(ctx, Polynomial::constant(f.ring, Rational(2))),
                  std::invalid_argument);
  CHECK_THROWS_AS(classify_element(ctx, parse_polynomial(f.ring, "x + y^2")),
                  std::invalid_argument);
}

TEST_CASE("regular system on the free module") {
  auto R = make_ring({"x", "y", "z"});
  auto S = PresentedModule::free_module(FreeModule::rank_one(R));
  std::vector<Polynomial> vars;
  for (int i = 0; i < 3; ++i) vars.push_back(Polynomial::variable(R, i));
  CHECK(check_sequence(S, vars, SequenceKind::Regular).verdict);
  auto found = find_sequence(S, SequenceKind::Regular, 3, 0);
  REQUIRE(found.has_value());
  CHECK(*found == vars);  // structured first attempts take the variables
}

TEST_CASE("hierarchy of notions on random linear forms") {
  for (auto f : {two_planes_line(), mixed_chain(), embedded_plane(), two_planes_point()}) {
    auto ctx = make_context(f.module);
    std::mt19937_64 rng(101);
    for (int it = 0; it < 100; ++it) {
      auto fe = random_linear_form(rng, f.ring);
      auto c = classify_element(ctx, fe);
      if (c.regular) CHECK(c.f_element);
      if (c.f_element) CHECK(c.generalized_regular);
      if (c.sequential) CHECK(c.f_element);
      if (c.sequential_f) CHECK(c.generalized_regular);
    }
  }
}

TEST_CASE("kernel tests agree with prime avoidance on attached primes") {
  // sequential <=> avoids every attached prime of H^1..H^d;
  // sequential-f <=> avoids every non-maximal attached prime of H^2..H^d
  for (auto f : {two_planes_line(), mixed_chain(), embedded_plane(), two_planes_point()}) {
    auto I = fixture_ideal(f);
    auto ctx = make_context(f.module);
    auto att = attached_primes_all(I);
    const int d = static_cast<int>(att.size()) - 1;
    VarMask maximal = f.ring->all_vars_mask();
    std::mt19937_64 rng(202);
    for (int it = 0; it < 40; ++it) {
      auto fe = random_linear_form(rng, f.ring);
      auto c = classify_element(ctx, fe);
      bool avoid_seq = true, avoid_seqf = true;
      for (int j = 1; j <= d; ++j)
        for (const auto& p : att[j])
          if (p.contains(fe)) avoid_seq = false;
      for (int j = 2; j <= d; ++j)
        for (const auto& p : att[j])
          if (p.vars != maximal && p.contains(fe)) avoid_seqf = false;
      CHECK(c.sequential == avoid_seq);
      CHECK(c.sequential_f == avoid_seqf);
    }
  }
}

TEST_CASE("f-element and regular also match prime avoidance on Ass") {
  for (auto f : {two_planes_line(), mixed_chain(), embedded_plane()}) {
    auto I = fixture_ideal(f);
    auto ctx = make_context(f.module);
    PrimeSet ass = associated_primes(I);
    const int n = f.ring->nvars();
    std::mt19937_64 rng(303);
    for (int it = 0; it < 30; ++it) {
      auto fe = random_linear_form(rng, f.ring);
      auto c = classify_element(ctx, fe);
      bool avoid_all = true, avoid_pos = true, avoid_big = true;
      for (const auto& p : ass) {
        if (p.contains(fe)) {
          avoid_all = false;
          if (n - p.height() > 0) avoid_pos = false;
          if (n - p.height() > 1) avoid_big = false;
        }
      }
      CHECK(c.regular == avoid_all);
      CHECK(c.f_element == avoid_pos);
      CHECK(c.generalized_regular == avoid_big);
    }
  }
}

TEST_CASE("systems of parameters") {
  auto f = two_planes_line();
  CHECK(is_part_of_sop(f.module, {}));

  // x, y, z only cuts to the (z,t)-plane's complement: not an s.o.p.
  std::vector<Polynomial> xyz = {parse_polynomial(f.ring, "x"), parse_polynomial(f.ring, "y"),
                                 parse_polynomial(f.ring, "z")};
  CHECK_FALSE(is_sop(f.module, xyz));

  // three generic-looking linear forms are one
  std::vector<Polynomial> generic = {parse_polynomial(f.ring, "x + z"),
                                     parse_polynomial(f.ring, "y + t"),
                                     parse_polynomial(f.ring, "w")};
  CHECK(is_sop(f.module, generic));
}

TEST_CASE("witness search on the embedded-plane quotient") {
  auto f = embedded_plane();
  auto found = find_sequence(f.module, SequenceKind::Sequential, 3, 0);
  REQUIRE(found.has_value());
  CHECK(check_sequence(f.module, *found, SequenceKind::Sequential).verdict);
  CHECK(is_sop(f.module, *found));
}

TEST_CASE("no sequential s.o.p. exists on the two-planes-along-a-line quotient") {
  auto f = two_planes_line();
  // the search gives up ...
  CHECK_FALSE(find_sequence(f.module, SequenceKind::Sequential, 3, 0, 40).has_value());
  // ... and sampled s.o.p.s all fail the sequential check
  std::mt19937_64 rng(11);
  for (int k = 0; k < 5; ++k) {
    auto fs = sample_constrained_sop(f.module, std::nullopt, rng);
    REQUIRE(fs.has_value());
    CHECK_FALSE(check_sequence(f.module, *fs, SequenceKind::Sequential).verdict);
  }
}

TEST_CASE("multiplicities") {
  auto R2 = make_ring({"x", "y"});
  auto line = PresentedModule::quotient_ring(R2, {parse_polynomial(R2, "x")});
  CHECK(multiplicity(line, {parse_polynomial(R2, "y")}) == 1);

  auto g = two_planes_point();
  std::vector<Polynomial> fs = {parse_polynomial(g.ring, "x - z"),
                                parse_polynomial(g.ring, "y - t")};
  CHECK(multiplicity(g.module, fs) == 2);
  std::vector<Polynomial> sf(fs.rbegin(), fs.rend());
  CHECK(multiplicity(g.module, sf) == 2);  // symmetric in the sequence

  // length-based cross-check: ell(M/(fs)M) - correction = e for this pair
  auto q = g.module.quotient_by(fs);
  auto len = module_length(q);
  REQUIRE(len.has_value());
  CHECK(*len >= 2);

  CHECK_THROWS_AS(multiplicity(g.module, {parse_polynomial(g.ring, "x")}),
                  std::invalid_argument);
}

TEST_CASE("length-multiplicity gap") {
  // CM module, regular s.o.p.: the gap vanishes identically
  auto R2 = make_ring({"x", "y"});
  auto line = PresentedModule::quotient_ring(R2, {parse_polynomial(R2, "x")});
  for (int nn = 1; nn <= 3; ++nn)
    CHECK(length_multiplicity_gap(line, {parse_polynomial(R2, "y")}, {nn}) == 0);

  // generalized CM: the gap is a nonnegative constant
  auto g = two_planes_point();
  std::vector<Polynomial> fs = {parse_polynomial(g.ring, "x - z"),
                                parse_polynomial(g.ring, "y - t")};
  long long base = length_multiplicity_gap(g.module, fs, {1, 1});
  CHECK(base >= 0);
  for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 2}, {2, 1}, {2, 2}, {3, 2}})
    CHECK(length_multiplicity_gap(g.module, fs, {a, b}) == base);

  // not generalized CM: the gap grows
  auto c = two_planes_line();
  std::vector<Polynomial> cs = {parse_polynomial(c.ring, "x + z"),
                                parse_polynomial(c.ring, "y + t"),
                                parse_polynomial(c.ring, "w")};
  long long v1 = length_multiplicity_gap(c.module, cs, {1, 1, 1});
  long long v2 = length_multiplicity_gap(c.module, cs, {2, 2, 2});
  long long v3 = length_multiplicity_gap(c.module, cs, {3, 3, 3});
  CHECK(v1 >= 0);
  CHECK(v2 >= v1);
  CHECK(v3 > v1);  // p = 1 means the gap is unbounded
}

TEST_CASE("p-standard systems of parameters") {
  // CM quotient: a(M) is the unit ideal, any regular s.o.p. is p-standard
  auto R2 = make_ring({"x", "y"});
  auto line = PresentedModule::quotient_ring(R2, {parse_polynomial(R2, "x")});
  CHECK(is_p_standard_sop(line, {parse_polynomial(R2, "y")}));

  auto e = embedded_plane();
  auto found = find_p_standard_sop(e.module, 0);
  REQUIRE(found.has_value());
  CHECK(is_p_standard_sop(e.module, *found));

  // a generic linear s.o.p. whose last element leaves a(M) = (x, y) fails
  std::vector<Polynomial> bad = {parse_polynomial(e.ring, "x - y"),
                                 parse_polynomial(e.ring, "z"),
                                 parse_polynomial(e.ring, "t")};
  CHECK(is_sop(e.module, bad));
  CHECK_FALSE(is_p_standard_sop(e.module, bad));
}

TEST_CASE("sequential elements are parameter elements on unmixed fixtures") {
  auto f = two_planes_line();
  auto ctx = make_context(f.module);
  std::mt19937_64 rng(404);
  int seen = 0;
  for (int it = 0; it < 60 && seen < 10; ++it) {
    auto fe = random_linear_form(rng, f.ring);
    if (!classify_element(ctx, fe).sequential) continue;
    ++seen;
    PresentedModule q = f.module.quotient_by(fe);
    CHECK(module_dimension(q) == ctx.dim - 1);
  }
  CHECK(seen > 0);

  // on the two-planes-point quotient the maximal ideal is attached to H^1,
  // so no sequential element exists at all
  auto g = two_planes_point();
  auto gctx = make_context(g.module);
  for (int it = 0; it < 30; ++it) {
    auto fe = random_linear_form(rng, g.ring);
    CHECK_FALSE(classify_element(gctx, fe).sequential);
  }
  CHECK_FALSE(find_sequence(g.module, SequenceKind::Sequential, 1, 0, 30).has_value());
}

TEST_CASE("p-standard check requires a system of parameters") {
  auto f = embedded_plane();
  CHECK_THROWS_AS(is_p_standard_sop(f.module, {parse_polynomial(f.ring, "x")}),
                  std::invalid_argument);
}

TEST_CASE("on zero-dimensional modules every element is vacuously sequential") {
  auto R = make_ring({"x", "y"});
  auto M = PresentedModule::quotient_ring(
      R, {parse_polynomial(R, "x^2"), parse_polynomial(R, "y^2")});
  auto ctx = make_context(M);
  REQUIRE(ctx.dim == 0);
  auto c = classify_element(ctx, parse_polynomial(R, "x + y"));
  CHECK(c.sequential);
  CHECK(c.sequential_f);
  CHECK_FALSE(c.regular);
}
