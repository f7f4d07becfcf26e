#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <random>

#include "granrough/approx.hpp"
#include "granrough/error.hpp"
#include "granrough/spec_io.hpp"
#include "granrough/verify.hpp"

#ifndef GRANROUGH_DATA_DIR
#define GRANROUGH_DATA_DIR "data"
#endif

namespace granrough {

namespace {

Mask row_ref(const Json& v, const std::map<std::string, Mask>& rows, const JsonPointer& at) {
  if (!v.is_string()) throw SpecError(at.to_string(), "expected a row label");
  const auto it = rows.find(v.get<std::string>());
  if (it == rows.end()) throw SpecError(at.to_string(), "unknown row label '" + v.get<std::string>() + "'");
  return it->second;
}

std::vector<std::pair<Mask, Mask>> row_pairs(const Json& v, const std::map<std::string, Mask>& rows,
                                             const JsonPointer& at) {
  if (!v.is_array()) throw SpecError(at.to_string(), "expected an array of row-label pairs");
  std::vector<std::pair<Mask, Mask>> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_array() || v[i].size() != 2) throw SpecError((at / i).to_string(), "expected a pair");
    out.emplace_back(row_ref(v[i][0], rows, at / i / 0), row_ref(v[i][1], rows, at / i / 1));
  }
  return out;
}

}  // namespace

Mask Fixture::row(const std::string& label) const {
  const auto it = std::find(row_labels.begin(), row_labels.end(), label);
  if (it == row_labels.end()) throw ParameterError("fixture '" + name + "' has no row '" + label + "'");
  return rows[static_cast<std::size_t>(it - row_labels.begin())];
}

const std::string& Fixture::label_of(Mask m) const {
  const auto it = std::find(rows.begin(), rows.end(), m);
  if (it == rows.end()) throw ParameterError("set is not a row of fixture '" + name + "'");
  return row_labels[static_cast<std::size_t>(it - rows.begin())];
}

std::string default_fixture_path() {
  const char* env = std::getenv("GRANROUGH_DATA_DIR");
  const std::string dir = env && *env ? env : GRANROUGH_DATA_DIR;
  return dir + "/fixtures/bited_tolerance.json";
}

Fixture load_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open fixture file '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SpecError("/", std::string("invalid JSON in '") + path + "': " + e.what());
  }
  const JsonPointer root;
  require_known_keys(doc, root,
                     {"provenance", "name", "universe", "relation", "granules", "parameters", "rows", "tables",
                      "parthood", "rational"});
  const Universe u = parse_universe(require_field(doc, root, "universe"), root / "universe");
  Json gspec = Json::object();
  if (doc.contains("relation")) gspec["relation"] = doc["relation"];
  if (doc.contains("granules")) gspec["granules"] = doc["granules"];
  const Granulation g = parse_granulation(gspec, u, root);

  const auto pat = root / "parameters";
  const Json& params = require_field(doc, root, "parameters");
  require_known_keys(params, pat, {"kappa", "alpha", "k"});
  const InclusionFn kappa = parse_kappa(require_field(params, pat, "kappa"), g, pat / "kappa");
  const Rational alpha = parse_rational(require_field(params, pat, "alpha"), pat / "alpha");
  const int k = parse_int(require_field(params, pat, "k"), pat / "k");

  std::vector<std::string> labels;
  std::vector<Mask> rows;
  std::map<std::string, Mask> by_label;
  const Json& jrows = require_field(doc, root, "rows");
  if (!jrows.is_array()) throw SpecError("/rows", "expected an array");
  for (std::size_t i = 0; i < jrows.size(); ++i) {
    const auto at = root / "rows" / i;
    require_known_keys(jrows[i], at, {"label", "set"});
    const Json& l = require_field(jrows[i], at, "label");
    if (!l.is_string()) throw SpecError((at / "label").to_string(), "expected a string");
    const Mask m = parse_set(require_field(jrows[i], at, "set"), u, at / "set");
    if (!by_label.emplace(l.get<std::string>(), m).second) {
      throw SpecError((at / "label").to_string(), "duplicate row label");
    }
    labels.push_back(l.get<std::string>());
    rows.push_back(m);
  }

  std::vector<ExpectedTable> tables;
  if (doc.contains("tables")) {
    const Json& jt = doc["tables"];
    for (std::size_t ti = 0; ti < jt.size(); ++ti) {
      const auto tat = root / "tables" / ti;
      require_known_keys(jt[ti], tat, {"name", "title", "columns"});
      ExpectedTable t;
      t.name = require_field(jt[ti], tat, "name").get<std::string>();
      t.title = jt[ti].value("title", "");
      const Json& cols = require_field(jt[ti], tat, "columns");
      for (std::size_t ci = 0; ci < cols.size(); ++ci) {
        const auto cat = tat / "columns" / ci;
        require_known_keys(cols[ci], cat, {"id", "operators", "cells", "known"});
        TableColumn c;
        c.id = require_field(cols[ci], cat, "id").get<std::string>();
        const Json& ops = require_field(cols[ci], cat, "operators");
        if (!ops.is_array() || ops.empty()) throw SpecError((cat / "operators").to_string(), "expected operator ids");
        for (const auto& op : ops) c.operators.push_back(op.get<std::string>());
        const Json& cells = require_field(cols[ci], cat, "cells");
        for (const auto& l : labels) {
          const Json& cell = require_field(cells, cat / "cells", l);
          c.cells.push_back(parse_set(cell, u, cat / "cells" / l));
        }
        if (cells.size() != labels.size()) {
          throw SpecError((cat / "cells").to_string(), "cells must cover exactly the fixture rows");
        }
        if (cols[ci].contains("known")) {
          for (const auto& [row, reason] : cols[ci]["known"].items()) {
            if (!by_label.count(row)) throw SpecError((cat / "known" / row).to_string(), "unknown row label");
            c.known[row] = reason.get<std::string>();
          }
        }
        t.columns.push_back(std::move(c));
      }
      tables.push_back(std::move(t));
    }
  }

  int s3_k = 0;
  std::vector<std::pair<Mask, Mask>> s3_pairs;
  std::vector<std::vector<Mask>> pu_classes;
  if (doc.contains("parthood")) {
    const auto at = root / "parthood";
    const Json& p = doc["parthood"];
    require_known_keys(p, at, {"s3", "pu"});
    if (p.contains("s3")) {
      require_known_keys(p["s3"], at / "s3", {"k", "pairs"});
      s3_k = parse_int(require_field(p["s3"], at / "s3", "k"), at / "s3" / "k");
      s3_pairs = row_pairs(require_field(p["s3"], at / "s3", "pairs"), by_label, at / "s3" / "pairs");
    }
    if (p.contains("pu")) {
      require_known_keys(p["pu"], at / "pu", {"classes"});
      const Json& cls = require_field(p["pu"], at / "pu", "classes");
      for (std::size_t i = 0; i < cls.size(); ++i) {
        std::vector<Mask> members;
        for (std::size_t j = 0; j < cls[i].size(); ++j) {
          members.push_back(row_ref(cls[i][j], by_label, at / "pu" / "classes" / i / j));
        }
        pu_classes.push_back(std::move(members));
      }
    }
  }

  std::optional<RationalListing> rational;
  if (doc.contains("rational")) {
    const auto at = root / "rational";
    const Json& r = doc["rational"];
    require_known_keys(r, at, {"lower", "parthood", "t", "defined"});
    RationalListing rl;
    rl.lower = require_field(r, at, "lower").get<std::string>();
    rl.parthood = require_field(r, at, "parthood").get<std::string>();
    if (r.contains("t")) {
      for (std::size_t i = 0; i < r["t"].size(); ++i) rl.t.push_back(row_ref(r["t"][i], by_label, at / "t" / i));
    }
    rl.defined = row_pairs(require_field(r, at, "defined"), by_label, at / "defined");
    rational = std::move(rl);
  }

  return Fixture{doc.value("name", "fixture"),
                 doc.value("provenance", ""),
                 g,
                 kappa,
                 alpha,
                 k,
                 std::move(labels),
                 std::move(rows),
                 std::move(tables),
                 s3_k,
                 std::move(s3_pairs),
                 std::move(pu_classes),
                 std::move(rational)};
}

bool DiffReport::ok() const {
  return std::all_of(columns.begin(), columns.end(), [](const ColumnDiff& c) { return c.ok(); });
}

DiffReport diff_tables(const Fixture& fx) {
  const ApproxSpec spec{ApproxFamily::Classical, fx.kappa, fx.alpha, fx.k};
  DiffReport report;
  report.fixture = fx.name;
  report.universe = fx.universe();
  for (const auto& table : fx.tables) {
    for (const auto& col : table.columns) {
      for (std::size_t oi = 0; oi < col.operators.size(); ++oi) {
        const SetOperator op = make_operator(col.operators[oi], spec, fx.granulation);
        ColumnDiff d;
        d.table = table.name;
        d.column = col.id;
        d.op = col.operators[oi];
        d.primary = oi == 0;
        for (std::size_t r = 0; r < fx.rows.size(); ++r) {
          CellDiff c;
          c.row = fx.row_labels[r];
          c.engine = op(fx.rows[r]);
          c.expected = col.cells[r];
          c.match = c.engine == c.expected;
          const auto kn = col.known.find(c.row);
          c.known = d.primary && kn != col.known.end();
          if (c.known) c.reason = kn->second;
          if (c.match) {
            ++d.matches;
            if (c.known) ++d.stale_known;
          } else if (c.known) {
            ++d.known_mismatches;
          } else {
            ++d.unexpected_mismatches;
          }
          d.cells.push_back(std::move(c));
        }
        report.columns.push_back(std::move(d));
      }
    }
  }
  return report;
}

Granulation random_granulation(const Universe& u, std::uint64_t seed, std::size_t min_count, std::size_t max_count) {
  const std::size_t n = u.size();
  if (n == 0) return Granulation(u, {});
  if (n > 20) throw SizeLimitError("random granulations are limited to 20 elements");
  if (min_count == 0 || min_count > max_count) {
    throw ParameterError("granule count range must satisfy 1 <= min <= max");
  }
  std::mt19937_64 rng(seed);
  const std::size_t available = (std::size_t{1} << n) - 1;
  const std::size_t lo = std::min(min_count, available);
  const std::size_t hi = std::min(max_count, available);
  const std::size_t count = lo + static_cast<std::size_t>(rng() % (hi - lo + 1));

  std::vector<Mask> granules;
  while (granules.size() < count) {
    const Mask h = rng() & u.full();
    if (h != 0 && std::find(granules.begin(), granules.end(), h) == granules.end()) granules.push_back(h);
  }
  Mask covered = 0;
  for (Mask h : granules) covered |= h;
  if (covered != u.full()) {
    // The added elements belong to no other granule, so the result stays distinct.
    granules[rng() % granules.size()] |= u.full() & ~covered;
  }
  return Granulation(u, granules);
}

std::vector<BatteryCase> make_battery(const Fixture* fx, std::uint64_t seed, std::size_t count, std::size_t min_n,
                                      std::size_t max_n) {
  if (min_n == 0 || min_n > max_n) throw ParameterError("universe size range must satisfy 1 <= min <= max");
  std::vector<BatteryCase> out;
  if (fx) out.push_back({fx->name, fx->granulation});
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = min_n + static_cast<std::size_t>(rng() % (max_n - min_n + 1));
    const std::uint64_t case_seed = rng();
    std::vector<std::string> labels;
    for (std::size_t e = 1; e <= n; ++e) labels.push_back("e" + std::to_string(e));
    const Universe u(labels, ElementOrder::AsGiven);
    out.push_back({"random-" + std::to_string(i + 1), random_granulation(u, case_seed, 1, n + 2)});
  }
  return out;
}

}  // namespace granrough
