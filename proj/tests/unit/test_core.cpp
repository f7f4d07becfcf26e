#include <sstream>

#include "doctest.h"
#include "fixture.hpp"
#include "granrough/error.hpp"
#include "granrough/ggs.hpp"
#include "granrough/rational.hpp"

using namespace granrough;

TEST_CASE("rational normalizes and compares exactly") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(7, 10) > Rational(2, 3));
  CHECK(Rational::parse("0.3") == Rational(3, 10));
  CHECK(Rational::parse("3/10") == Rational(3, 10));
  CHECK(Rational::parse("-2/4") == Rational(-1, 2));
  CHECK(Rational::from_double(0.3) == Rational(3, 10));
  CHECK(Rational::from_double(0.1 + 0.2) == Rational(3, 10));
  CHECK(Rational(7, 3).ceil() == 3);
  CHECK(Rational(7, 3).floor() == 2);
  CHECK(Rational(-7, 3).floor() == -3);
  CHECK(Rational(6, 5).to_string() == "6/5");
  CHECK(Rational(4).to_string() == "4");
  CHECK_THROWS_AS(Rational(1, 0), ParameterError);
  CHECK_THROWS_AS(Rational::parse("abc"), ParameterError);
  std::ostringstream os;
  os << Rational(3, 10);
  CHECK(os.str() == "3/10");
}

TEST_CASE("universe validates labels and orders lexically by default") {
  Universe u({"b", "a", "c"});
  CHECK(u.labels() == std::vector<std::string>{"a", "b", "c"});
  Universe given({"b", "a", "c"}, ElementOrder::AsGiven);
  CHECK(given.label(0) == "b");
  CHECK_THROWS_AS(Universe({"a", "a"}), ParameterError);
  CHECK_THROWS_AS(Universe({"a", ""}), ParameterError);
  CHECK_THROWS_WITH_AS(u.index_of("zz"), doctest::Contains("zz"), ParameterError);
  CHECK(u.format(u.mask_of({"c", "a"})) == "{a,c}");
  CHECK(u.format(0) == "{}");
}

TEST_CASE("sets from different universes do not combine") {
  Universe u1({"a", "b"});
  Universe u2({"a", "b"});
  CHECK_THROWS_AS(u1.set({"a"}) | u2.set({"b"}), UniverseMismatch);
  CHECK((u1.set({"a"}) | u1.set({"b"})) == u1.top());
  CHECK(u1.set({"a"}).complement() == u1.set({"b"}));
  CHECK(u1.top().size() == 2);
}

TEST_CASE("subset enumeration is by cardinality then mask") {
  const auto s = enumerate_subsets(3);
  REQUIRE(s.size() == 8);
  CHECK(s.front() == 0);
  CHECK(s[1] == 1);
  CHECK(s[2] == 2);
  CHECK(s[3] == 4);
  CHECK(s[4] == 3);
  CHECK(s.back() == 7);
}

TEST_CASE("tolerance granulation of the worked example") {
  testfx::Tolerance4 fx;
  const auto& gs = fx.g.granules();
  REQUIRE(gs.size() == 4);
  CHECK(gs[0] == fx.A(5));
  CHECK(gs[1] == fx.A(11));
  CHECK(gs[2] == fx.A(8));
  CHECK(gs[3] == fx.A(4));
  CHECK(fx.g.provenance() == Provenance::PredecessorNeighborhood);
  REQUIRE(fx.g.neighborhoods().has_value());
  CHECK(fx.g.neighborhoods()->of(1) == fx.A(11));

  std::vector<oracle::SSet> mine;
  for (Mask h : gs) mine.push_back(testfx::to_sset(fx.u, h));
  CHECK(mine == fx.oracle_granules());
}

TEST_CASE("granulation construction edge cases") {
  Universe u({"x1", "x2", "x3", "x4"});
  SUBCASE("empty generators with tolerance closure give singletons") {
    auto g = build_neighborhood_granulation(u, RelationSpec{{}, Closure::Tolerance}, NeighborhoodMode::Predecessor);
    REQUIRE(g.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) CHECK(g.granules()[i] == Mask{1} << i);
  }
  SUBCASE("empty neighborhoods are dropped") {
    auto g =
        build_neighborhood_granulation(u, RelationSpec{{{"x1", "x2"}}, Closure::None}, NeighborhoodMode::Successor);
    REQUIRE(g.size() == 1);
    CHECK(g.granules()[0] == u.mask_of({"x2"}));
    CHECK(g.neighborhoods()->of(1) == 0);
  }
  SUBCASE("unknown label is named") {
    CHECK_THROWS_WITH_AS(
        build_neighborhood_granulation(u, RelationSpec{{{"x1", "x9"}}, Closure::None}, NeighborhoodMode::Successor),
        doctest::Contains("x9"), ParameterError);
  }
  SUBCASE("explicit granulation rejects duplicates and empties") {
    CHECK_THROWS_AS(Granulation(u, {1, 1}), ParameterError);
    CHECK_THROWS_AS(Granulation(u, {0}), ParameterError);
  }
}

TEST_CASE("relation closure is monotone and idempotent") {
  Universe u({"a", "b", "c", "d"});
  const RelationSpec spec{{{"a", "b"}, {"b", "c"}}, Closure::None};
  const Relation r = Relation::from_spec(u, spec);
  for (Closure c : {Closure::None, Closure::Reflexive, Closure::Symmetric, Closure::Tolerance, Closure::Equivalence}) {
    const Relation once = r.closed(c);
    CHECK(once.closed(c) == once);
    for (std::size_t i = 0; i < 4; ++i) CHECK(is_subset(r.rows()[i], once.rows()[i]));
  }
  const Relation eq = r.closed(Closure::Equivalence);
  CHECK(eq.related(0, 2));
  CHECK(eq.is_symmetric());
  const Relation tol = r.closed(Closure::Tolerance);
  CHECK_FALSE(tol.related(0, 2));
}

TEST_CASE("symmetric relations give equal predecessor and successor granulations") {
  Universe u({"p", "q", "r", "s", "t"});
  const RelationSpec spec{{{"p", "q"}, {"q", "s"}, {"t", "r"}}, Closure::Tolerance};
  auto pred = build_neighborhood_granulation(u, spec, NeighborhoodMode::Predecessor);
  auto succ = build_neighborhood_granulation(u, spec, NeighborhoodMode::Successor);
  CHECK(pred.granules() == succ.granules());
}

namespace {

SetOperator classical_l(const Granulation& g) {
  return {g.universe(), "l", [g](Mask x) { return classical_lower(x, g); }};
}
SetOperator classical_u(const Granulation& g) {
  return {g.universe(), "u", [g](Mask x) { return classical_upper(x, g); }};
}

const CheckReport& find(const std::vector<CheckReport>& rs, const std::string& name) {
  for (const auto& r : rs)
    if (r.name == name) return r;
  FAIL("missing report " << name);
  return rs.front();
}

}  // namespace

TEST_CASE("GGS axioms for classical approximations on the worked example") {
  testfx::Tolerance4 fx;
  const auto reports = check_ggs_axioms(fx.g, classical_l(fx.g), classical_u(fx.g));
  REQUIRE(reports.size() == 14);
  CHECK(reports[0].name == "PT1");
  CHECK(reports.back().name == "TB");
  CHECK(find(reports, "UL1.contract").holds);
  CHECK(find(reports, "UL1.idem-l").holds);
  CHECK(find(reports, "UL2").holds);
  CHECK(find(reports, "G3").holds);
  CHECK(find(reports, "UL1").holds);
}

TEST_CASE("GGS axioms with VPRS lower keep the contraction clause") {
  testfx::Tolerance4 fx;
  ApproxSpec spec{ApproxFamily::Vprs, InclusionFn::k0(fx.u), Rational(3, 10), std::nullopt, std::nullopt};
  auto ops = make_operators(spec, fx.g);
  const auto reports = check_ggs_axioms(fx.g, ops.lower, ops.upper);
  CHECK(find(reports, "UL1.contract").holds);
}

TEST_CASE("GGS axioms hold vacuously on the empty universe") {
  Universe u;
  Granulation g(u, {});
  for (const auto& r : check_ggs_axioms(g, classical_l(g), classical_u(g))) {
    CHECK_MESSAGE(r.holds, r.name);
  }
}

TEST_CASE("admissibility checks") {
  testfx::Tolerance4 fx;
  SUBCASE("classical operators are lower stable") {
    const auto rs = check_admissibility(fx.g, classical_l(fx.g), classical_u(fx.g));
    CHECK(find(rs, "LS").holds);
    CHECK(find(rs, "WRA").holds);
  }
  SUBCASE("VPRS lower breaks lower stability at {x4} inside A7") {
    ApproxSpec spec{ApproxFamily::Vprs, InclusionFn::k0(fx.u), Rational(3, 10), std::nullopt, std::nullopt};
    auto ops = make_operators(spec, fx.g);
    CheckOptions all;
    all.max_witnesses = 1000;
    const auto rs = check_admissibility(fx.g, ops.lower, ops.upper, all);
    const auto& ls = find(rs, "LS");
    CHECK_FALSE(ls.holds);
    bool seen = false;
    for (const auto& w : ls.witnesses) {
      if (std::get<Mask>(w[0].value) == fx.A(4) && std::get<Mask>(w[1].value) == fx.A(7)) {
        seen = true;
        CHECK(std::get<Mask>(w[2].value) == 0);
      }
    }
    CHECK(seen);
  }
  SUBCASE("single granule {H}: WRA holds, FU fails") {
    Granulation whole(fx.u, {fx.u.full()});
    const auto rs = check_admissibility(whole, classical_l(whole), classical_u(whole));
    CHECK(find(rs, "WRA").holds);
    CHECK_FALSE(find(rs, "FU").holds);
  }
}

TEST_CASE("checks refuse oversized universes") {
  std::vector<std::string> labels;
  for (int i = 0; i < 13; ++i) labels.push_back("e" + std::to_string(i));
  Universe u(labels);
  Granulation g(u, {u.full()});
  CHECK_THROWS_AS(check_ggs_axioms(g, classical_l(g), classical_u(g)), SizeLimitError);
}

TEST_CASE("check reports are identical across thread counts") {
  testfx::Tolerance4 fx;
  ApproxSpec spec{ApproxFamily::Vprs, InclusionFn::k0(fx.u), Rational(3, 10), std::nullopt, std::nullopt};
  auto ops = make_operators(spec, fx.g);
  CheckOptions one;
  CheckOptions four;
  four.threads = 4;
  const auto a = check_admissibility(fx.g, ops.lower, ops.upper, one);
  const auto b = check_admissibility(fx.g, ops.lower, ops.upper, four);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].violation_count == b[i].violation_count);
    REQUIRE(a[i].witnesses.size() == b[i].witnesses.size());
    for (std::size_t j = 0; j < a[i].witnesses.size(); ++j) {
      for (std::size_t k = 0; k < a[i].witnesses[j].size(); ++k) {
        CHECK(a[i].witnesses[j][k].value == b[i].witnesses[j][k].value);
      }
    }
  }
}
