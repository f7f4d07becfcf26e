#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "granrough/rational.hpp"
#include "granrough/universe.hpp"

namespace granrough {

/// One variable of a violating assignment: a set, a number or a free-form tag.
struct Binding {
  std::string name;
  std::variant<Mask, Rational, std::string> value;
};

using Witness = std::vector<Binding>;

/// Hard checks are assertions (a failure is a defect somewhere); soft checks
/// record an observation whose outcome is informative either way.
enum class Severity { Hard, Soft };

/// Pass/fail result of one quantified formula, with the violating assignments.
struct CheckReport {
  std::string name;
  bool holds = true;
  bool applicable = true;
  Severity severity = Severity::Hard;
  std::vector<Witness> witnesses;
  std::size_t violation_count = 0;
  std::size_t universe_size = 0;
  std::map<std::string, std::string> parameters;
  std::string note;

  void add_violation(Witness w, std::size_t cap);
  /// Folds another report's violations into this one (used when merging chunks).
  void absorb(const CheckReport& other, std::size_t cap);
  bool failed_hard() const { return applicable && !holds && severity == Severity::Hard; }
};

struct ExhaustiveLimits {
  std::size_t max_universe = 24;
  std::size_t max_triple_universe = 12;
};

struct CheckOptions {
  ExhaustiveLimits limits;
  unsigned threads = 1;
  std::size_t max_witnesses = 8;
};

/// Throws SizeLimitError when a formula with `arity` quantified set variables
/// cannot be evaluated exhaustively over an n-element universe.
void require_exhaustive(std::size_t n, const ExhaustiveLimits& limits, int arity, const std::string& what);

}  // namespace granrough
