#include <set>

#include "doctest.h"
#include "fixture.hpp"
#include "granrough/error.hpp"
#include "granrough/spec_io.hpp"
#include "granrough/verify.hpp"

using namespace granrough;

namespace {

std::string pointer_of(const Json& doc) {
  try {
    parse_problem(doc);
  } catch (const SpecError& e) {
    return e.pointer();
  }
  return "<accepted>";
}

Json minimal_spec() {
  return Json::parse(R"({
    "universe": ["x1", "x2", "x3", "x4"],
    "granulation": {"relation": {"pairs": [["x1","x2"],["x2","x3"]], "closure": "tolerance"}},
    "alpha": 0.3,
    "operators": ["l", "u_alpha"]
  })");
}

}  // namespace

TEST_CASE("shipped fixture loads and matches the hand-built example") {
  const Fixture fx = load_fixture(default_fixture_path());
  testfx::Tolerance4 t;
  CHECK(fx.rows.size() == 16);
  CHECK(fx.alpha == Rational(3, 10));
  CHECK(fx.universe().labels() == t.u.labels());
  std::set<Mask> want(t.g.granules().begin(), t.g.granules().end());
  std::set<Mask> got(fx.granulation.granules().begin(), fx.granulation.granules().end());
  CHECK(got == want);
  for (int i = 1; i <= 16; ++i) CHECK(fx.row("A" + std::to_string(i)) == t.A(i));
  CHECK(fx.s3_pairs.size() == 33);
  CHECK(fx.pu_classes.size() == 4);
  CHECK_THROWS_AS(fx.row("A99"), ParameterError);
}

TEST_CASE("table diff counts") {
  const Fixture fx = load_fixture(default_fixture_path());
  const DiffReport d = diff_tables(fx);
  CHECK(d.ok());
  auto col = [&](const std::string& table, const std::string& op) -> const ColumnDiff& {
    for (const auto& c : d.columns)
      if (c.table == table && c.op == op) return c;
    FAIL("missing column " << table << "/" << op);
    return d.columns.front();
  };
  for (const char* op : {"l", "u_b", "l_alpha", "u_alpha"}) CHECK(col("table1", op).matches == 16);
  const ColumnDiff& u = col("table1", "u");
  CHECK(u.matches == 15);
  CHECK(u.known_mismatches == 1);
  CHECK(u.unexpected_mismatches == 0);
  CHECK(col("table2", "l_k-strict").matches == 16);
}

TEST_CASE("random granulations are seeded, covering and distinct") {
  const Universe u({"e1", "e2", "e3", "e4", "e5"}, ElementOrder::AsGiven);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Granulation a = random_granulation(u, seed, 1, 7);
    const Granulation b = random_granulation(u, seed, 1, 7);
    CHECK(a.granules() == b.granules());
    Mask cover = 0;
    std::set<Mask> distinct;
    for (Mask h : a.granules()) {
      CHECK(h != 0);
      cover |= h;
      distinct.insert(h);
    }
    CHECK(cover == u.full());
    CHECK(distinct.size() == a.size());
    CHECK(a.size() >= 1);
    CHECK(a.size() <= 7);
  }
  CHECK_THROWS_AS(random_granulation(u, 1, 3, 2), ParameterError);
}

TEST_CASE("battery is reproducible and respects the size range") {
  const auto a = make_battery(nullptr, 7, 12, 3, 6);
  const auto b = make_battery(nullptr, 7, 12, 3, 6);
  REQUIRE(a.size() == 12);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].granulation.granules() == b[i].granulation.granules());
    CHECK(a[i].granulation.universe().size() >= 3);
    CHECK(a[i].granulation.universe().size() <= 6);
  }
  const auto c = make_battery(nullptr, 8, 12, 3, 6);
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i)
    differs = differs || a[i].granulation.universe().size() != c[i].granulation.universe().size() ||
              a[i].granulation.granules() != c[i].granulation.granules();
  CHECK(differs);
}

TEST_CASE("problem spec validation reports JSON pointers") {
  CHECK(pointer_of(minimal_spec()) == "<accepted>");

  Json doc = minimal_spec();
  doc["colour"] = "red";
  CHECK(pointer_of(doc) == "/colour");

  doc = minimal_spec();
  doc["kappa"] = "K7";
  CHECK(pointer_of(doc) == "/kappa");

  doc = minimal_spec();
  doc["alpha"] = 0.75;
  CHECK(pointer_of(doc) == "/alpha");

  doc = minimal_spec();
  doc["operators"] = {"l", "bogus"};
  CHECK(pointer_of(doc) == "/operators/1");

  doc = minimal_spec();
  doc["granulation"]["relation"]["pairs"][0][1] = "x9";
  CHECK(pointer_of(doc).rfind("/granulation/relation/pairs/0", 0) == 0);

  doc = minimal_spec();
  doc.erase("universe");
  CHECK(pointer_of(doc) == "/universe");
}

TEST_CASE("subsets of interest") {
  Json doc = minimal_spec();
  CHECK(subsets_of_interest(parse_problem(doc)).size() == 16);

  doc["universe"] = Json::array();
  doc["granulation"] = {{"granules", Json::array()}};
  CHECK(subsets_of_interest(parse_problem(doc)).empty());

  Json big = Json::parse(R"({"universe": [], "granulation": {"granules": []}})");
  for (int i = 1; i <= 13; ++i) big["universe"].push_back("e" + std::to_string(i));
  big["granulation"]["granules"].push_back(big["universe"]);
  CHECK_THROWS_AS(subsets_of_interest(parse_problem(big)), SizeLimitError);
  big["subsets"] = Json::array({Json::array({"e1", "e2"})});
  const auto s = subsets_of_interest(parse_problem(big));
  REQUIRE(s.size() == 1);
  CHECK(card(s[0].set) == 2);
}

TEST_CASE("verify reports are identical across thread counts") {
  const Fixture fx = load_fixture(default_fixture_path());
  SuiteOptions one;
  one.seed = 7;
  one.random_granulations = 8;
  SuiteOptions four = one;
  four.threads = 4;
  for (const char* suite : {"vprs-theorem-alpha", "parthood", "correspond"}) {
    CHECK(suites_to_json(run_suites(suite, fx, one), one) == suites_to_json(run_suites(suite, fx, four), four));
  }
  CHECK_THROWS_AS(run_suites("nope", fx, one), ParameterError);
}
