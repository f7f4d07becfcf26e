#include <random>

#include "doctest.h"
#include "fixture.hpp"
#include "granrough/approx.hpp"
#include "granrough/error.hpp"

using namespace granrough;

namespace {

const Rational kAlpha(3, 10);

// Small random granulations for oracle cross-checks, independent of the
// library's own generator.
std::vector<std::vector<oracle::SSet>> random_granulations(const oracle::SSet& top, int count, unsigned seed) {
  std::mt19937 rng(seed);
  const std::vector<std::string> elems(top.begin(), top.end());
  std::vector<std::vector<oracle::SSet>> out;
  while (static_cast<int>(out.size()) < count) {
    std::vector<oracle::SSet> g;
    const int granules = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < granules; ++i) {
      oracle::SSet h;
      for (const auto& e : elems)
        if (rng() % 2) h.insert(e);
      if (!h.empty() && std::find(g.begin(), g.end(), h) == g.end()) g.push_back(h);
    }
    if (!g.empty()) out.push_back(g);
  }
  return out;
}

}  // namespace

TEST_CASE("classical and bited approximations on the worked example") {
  testfx::Tolerance4 fx;
  CHECK(classical_lower(fx.A(7), fx.g) == fx.A(4));
  CHECK(classical_lower(0, fx.g) == 0);
  CHECK(classical_upper(0, fx.g) == 0);
  CHECK(classical_upper(fx.A(10), fx.g) == fx.A(15));
  CHECK(classical_upper(fx.A(1), fx.g) == fx.A(11));
  CHECK(bited_upper(fx.A(10), fx.g) == fx.A(10));
  CHECK(bited_upper(fx.A(15), fx.g) == fx.A(15));
  CHECK(bited_upper(fx.A(1), fx.g) == fx.A(1));
  CHECK(classical_lower(fx.u.set({"x1", "x4"}), fx.g) == fx.u.set({"x4"}));
}

TEST_CASE("variable precision approximations on the worked example") {
  testfx::Tolerance4 fx;
  const auto k0 = InclusionFn::k0(fx.u);
  CHECK(vprs_lower(fx.A(5), fx.g, k0, kAlpha) == fx.A(5));
  CHECK(vprs_lower(fx.A(12), fx.g, k0, kAlpha) == 0);
  CHECK(vprs_upper(fx.A(4), fx.g, k0, kAlpha) == fx.A(4));
  CHECK(vprs_star_lower(fx.A(4), fx.g, k0, kAlpha) == fx.A(4));
  CHECK(vprs_star_upper(fx.A(4), fx.g, k0, kAlpha) == fx.A(4));
  CHECK(vprs_star_upper(fx.A(7), fx.g, k0, kAlpha) == fx.A(15));
  CHECK(vprs_star_lower(fx.A(1), fx.g, k0, kAlpha) == fx.A(11));
  CHECK_THROWS_AS(vprs_lower(fx.A(1), fx.g, k0, Rational(1, 2)), ParameterError);
  CHECK_THROWS_AS(vprs_upper(fx.A(1), fx.g, k0, Rational(-1, 10)), ParameterError);
  CHECK_NOTHROW(vprs_upper(fx.A(1), fx.g, k0, Rational(0)));

  SUBCASE("regions") {
    const auto empty = vprs_regions(fx.u.bottom(), fx.g, k0, kAlpha);
    CHECK(empty.positive.empty());
    CHECK(empty.negative.empty());
    CHECK(empty.boundary.empty());
    const auto r1 = vprs_regions(fx.u.from_mask(fx.A(1)), fx.g, k0, kAlpha);
    CHECK(r1.positive.empty());
    CHECK(r1.boundary.mask() == fx.A(11));
    const auto r4 = vprs_regions(fx.u.from_mask(fx.A(4)), fx.g, k0, kAlpha);
    CHECK(r4.negative.empty());
  }
}

TEST_CASE("operators agree with the reference implementation") {
  testfx::Tolerance4 fx;
  auto grans = random_granulations(fx.top(), 40, 11);
  grans.push_back(fx.oracle_granules());
  const auto subsets = oracle::powerset(fx.top());
  for (const auto& og : grans) {
    std::vector<Mask> masks;
    for (const auto& h : og) masks.push_back(testfx::to_mask(fx.u, h));
    Granulation g(fx.u, masks);
    const auto k0 = InclusionFn::k0(fx.u);
    for (long an : {0L, 1L, 2L, 3L, 4L}) {
      const Rational alpha(an, 10);
      for (const auto& x : subsets) {
        const Mask m = testfx::to_mask(fx.u, x);
        CHECK(testfx::to_sset(fx.u, vprs_lower(m, g, k0, alpha)) == oracle::vprs_lower(x, og, an, 10));
        CHECK(testfx::to_sset(fx.u, vprs_upper(m, g, k0, alpha)) == oracle::vprs_upper(x, og, an, 10));
        CHECK(testfx::to_sset(fx.u, vprs_star_lower(m, g, k0, alpha)) == oracle::star_lower(x, og, an, 10));
        CHECK(testfx::to_sset(fx.u, vprs_star_upper(m, g, k0, alpha)) == oracle::star_upper(x, og, an, 10));
      }
    }
    for (const auto& x : subsets) {
      const Mask m = testfx::to_mask(fx.u, x);
      CHECK(testfx::to_sset(fx.u, classical_lower(m, g)) == oracle::lower(x, og));
      CHECK(testfx::to_sset(fx.u, classical_upper(m, g)) == oracle::upper(x, og));
      CHECK(testfx::to_sset(fx.u, bited_upper(m, g)) == oracle::bited(x, fx.top(), og));
      // At alpha = 0 the upper operator is the classical one; the lower keeps
      // only granules equal to x, since K0(x,h) = 1 forces x ⊆ h.
      CHECK(vprs_upper(m, g, k0, Rational(0)) == classical_upper(m, g));
      CHECK(vprs_lower(m, g, k0, Rational(0)) == (g.contains(m) ? m : 0));
      for (int k = 0; k <= 3; ++k) {
        CHECK(testfx::to_sset(fx.u, graded_upper_literal(m, g, k)) == oracle::graded_upper(x, og, k));
        CHECK(testfx::to_sset(fx.u, graded_lower_literal(m, g, k)) == oracle::graded_lower(x, og, k));
        CHECK(testfx::to_sset(fx.u, graded_lower_strict(m, g, k)) == oracle::graded_lower_strict(x, og, k));
      }
    }
  }
}

TEST_CASE("pointwise approximations") {
  testfx::Tolerance4 fx;
  const auto k0 = InclusionFn::k0(fx.u);
  const NeighborhoodMap& n = *fx.g.neighborhoods();
  CHECK(vprs_pointwise_lower(fx.A(1), n, fx.g, k0, kAlpha) == fx.u.mask_of({"x1", "x2"}));
  // K0(H, n(y)) = #n(y)/#H, so only the three-element neighborhood of x2 clears 7/10.
  CHECK(vprs_pointwise_lower(fx.A(15), n, fx.g, k0, kAlpha) == fx.u.mask_of({"x2"}));
  CHECK(vprs_pointwise_lower(0, n, fx.g, k0, kAlpha) == fx.A(15));
  CHECK(vprs_pointwise_lower(fx.A(5), n, fx.g, k0, kAlpha) == fx.A(5));
  CHECK(vprs_pointwise_upper(fx.A(4), n, fx.g, k0, kAlpha) == fx.A(4));
  // Neighborhoods outside the admissible family are skipped.
  Granulation only_middle(fx.u, {fx.A(11)});
  CHECK(vprs_pointwise_lower(fx.A(5), n, only_middle, k0, kAlpha) == fx.u.mask_of({"x2"}));
}

TEST_CASE("graded approximations and regions") {
  testfx::Tolerance4 fx;
  CHECK(graded_upper_literal(fx.A(5), fx.g, 1) == fx.A(11));
  CHECK(graded_upper_literal(fx.A(11), fx.g, 1) == fx.A(11));
  CHECK(graded_lower_literal(fx.A(5), fx.g, 1) == fx.A(15));
  CHECK(graded_lower_strict(fx.A(12), fx.g, 1) == fx.A(5));
  CHECK(graded_lower_strict(0, fx.g, 1) == 0);
  CHECK(graded_lower_strict(fx.A(15), fx.g, 1) == fx.A(11));
  CHECK_THROWS_AS(graded_upper_literal(fx.A(1), fx.g, -1), ParameterError);

  const auto r0 = graded_regions(fx.u.bottom(), fx.g, 0, GradedLower::Literal);
  CHECK(r0.negative == fx.u.top());
  const auto r5 = graded_regions(fx.u.from_mask(fx.A(5)), fx.g, 1, GradedLower::Strict);
  CHECK(r5.positive.mask() == fx.A(5));
  REQUIRE(r5.upper_boundary);
  REQUIRE(r5.lower_boundary);
  CHECK(r5.upper_boundary->mask() == fx.u.mask_of({"x3"}));
  CHECK(r5.lower_boundary->empty());
  const auto r4 = graded_regions(fx.u.from_mask(fx.A(4)), fx.g, 1, GradedLower::Strict);
  CHECK(r4.negative == fx.u.top());

  // Monotone in k.
  for (Mask x = 0; x < 16; ++x) {
    for (int k = 0; k < 3; ++k) {
      CHECK(is_subset(graded_upper_literal(x, fx.g, k + 1), graded_upper_literal(x, fx.g, k)));
      CHECK(is_subset(graded_lower_literal(x, fx.g, k), graded_lower_literal(x, fx.g, k + 1)));
    }
  }
}

TEST_CASE("operator factory") {
  testfx::Tolerance4 fx;
  ApproxSpec spec{ApproxFamily::Vprs, InclusionFn::k0(fx.u), kAlpha, 1, std::nullopt};
  for (const auto& id : operator_ids()) {
    const auto op = make_operator(id, spec, fx.g);
    CHECK(op.name() == id);
  }
  CHECK(make_operator("l_k-strict", spec, fx.g)(fx.A(12)) == fx.A(5));
  CHECK_THROWS_WITH_AS(make_operator("nope", spec, fx.g), doctest::Contains("valid operators"), ParameterError);
  ApproxSpec bare{ApproxFamily::Vprs, std::nullopt, std::nullopt, std::nullopt, std::nullopt};
  CHECK_THROWS_AS(make_operators(bare, fx.g), ParameterError);
  Granulation expl(fx.u, fx.g.granules());
  spec.family = ApproxFamily::VprsPointwise;
  CHECK_THROWS_AS(make_operators(spec, expl), ParameterError);
  CHECK(parse_family("graded-strict") == ApproxFamily::GradedStrict);
  CHECK_THROWS_AS(parse_family("fuzzy"), ParameterError);
}
