#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "granrough/check_report.hpp"
#include "granrough/granulation.hpp"
#include "granrough/rational.hpp"
#include "granrough/rif.hpp"

namespace granrough {

/// One column of a transcribed table. The first operator is the one the
/// column is judged against; the others are reported for comparison only.
struct TableColumn {
  std::string id;
  std::vector<std::string> operators;
  /// Transcribed value per fixture row, in row order.
  std::vector<Mask> cells;
  /// Row label -> reason, for cells known to disagree with the defining equations.
  std::map<std::string, std::string> known;
};

struct ExpectedTable {
  std::string name;
  std::string title;
  std::vector<TableColumn> columns;
};

struct RationalListing {
  std::string lower;
  std::string parthood;
  std::vector<Mask> t;
  std::vector<std::pair<Mask, Mask>> defined;
};

/// A worked example with transcribed reference data, loaded from JSON.
struct Fixture {
  std::string name;
  std::string provenance;
  Granulation granulation;
  InclusionFn kappa;
  Rational alpha;
  int k = 0;
  std::vector<std::string> row_labels;
  std::vector<Mask> rows;
  std::vector<ExpectedTable> tables;
  int s3_k = 0;
  std::vector<std::pair<Mask, Mask>> s3_pairs;
  std::vector<std::vector<Mask>> pu_classes;
  std::optional<RationalListing> rational;

  const Universe& universe() const { return granulation.universe(); }
  /// Throws ParameterError for an unknown row label.
  Mask row(const std::string& label) const;
  const std::string& label_of(Mask m) const;
};

/// `GRANROUGH_DATA_DIR` from the environment if set, else the source tree's data directory.
std::string default_fixture_path();
/// Throws SpecError (with a JSON pointer) on malformed data, Error if unreadable.
Fixture load_fixture(const std::string& path);

struct CellDiff {
  std::string row;
  Mask engine = 0;
  Mask expected = 0;
  bool match = false;
  bool known = false;
  std::string reason;
};

struct ColumnDiff {
  std::string table;
  std::string column;
  std::string op;
  bool primary = true;
  std::vector<CellDiff> cells;
  std::size_t matches = 0;
  std::size_t known_mismatches = 0;
  std::size_t unexpected_mismatches = 0;
  /// Known entries whose cell now matches.
  std::size_t stale_known = 0;
  bool ok() const { return !primary || (unexpected_mismatches == 0 && stale_known == 0); }
};

struct DiffReport {
  std::string fixture;
  Universe universe;
  std::vector<ColumnDiff> columns;
  bool ok() const;
};

/// Recomputes every column with the engine (κ, α, k from the fixture) and diffs cell by cell.
DiffReport diff_tables(const Fixture& fx);

/// Granules drawn from mt19937_64(seed): a count in [min_count, max_count]
/// (capped at 2^n - 1) of distinct nonempty sets; elements left uncovered are
/// added to a drawn granule, so the union is always the universe.
Granulation random_granulation(const Universe& u, std::uint64_t seed, std::size_t min_count, std::size_t max_count);

struct BatteryCase {
  std::string name;
  Granulation granulation;
};

/// The fixture (when given) followed by `count` random granulations on
/// universes e1..en with n drawn from [min_n, max_n].
std::vector<BatteryCase> make_battery(const Fixture* fx, std::uint64_t seed, std::size_t count, std::size_t min_n,
                                      std::size_t max_n);

struct SuiteOptions {
  std::uint64_t seed = 0;
  std::size_t random_granulations = 50;
  unsigned threads = 1;
  std::size_t max_witnesses = 8;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckReport> reports;
  std::optional<DiffReport> diff;
  bool passed() const;
};

/// vprs-theorem-alpha vprs-theorem-ast riprop grif-theorem table-diff rif-axioms
/// parthood rational correspond ggs
const std::vector<std::string>& suite_ids();

/// Runs one suite, or every suite for "all". Throws ParameterError for unknown ids.
std::vector<SuiteResult> run_suites(const std::string& id, const Fixture& fx, const SuiteOptions& opts);

/// Deterministic serializations of suite results.
std::string suites_to_json(const std::vector<SuiteResult>& results, const SuiteOptions& opts);
std::string suites_to_markdown(const std::vector<SuiteResult>& results, const SuiteOptions& opts);

/// Textual rendering of a binding value; masks are formatted against `u`.
std::string format_binding(const Binding& b, const Universe& u);

}  // namespace granrough
