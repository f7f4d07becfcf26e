#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "granrough/error.hpp"
#include "granrough/granulation.hpp"
#include "granrough/parthood.hpp"
#include "granrough/rational.hpp"
#include "granrough/rif.hpp"

namespace granrough {

/// Invalid input document; `pointer` is the JSON pointer of the offending field.
class SpecError : public ParameterError {
 public:
  SpecError(std::string pointer, const std::string& message)
      : ParameterError(pointer + ": " + message), pointer_(std::move(pointer)) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

using Json = nlohmann::json;
using JsonPointer = nlohmann::json::json_pointer;

/// Throws SpecError for any key of `obj` not in `allowed`.
void require_known_keys(const Json& obj, const JsonPointer& at, const std::vector<std::string>& allowed);
const Json& require_field(const Json& obj, const JsonPointer& at, const std::string& key);

/// A JSON number (0.3 becomes 3/10) or a string such as "3/10".
Rational parse_rational(const Json& v, const JsonPointer& at);
int parse_int(const Json& v, const JsonPointer& at);

Universe parse_universe(const Json& v, const JsonPointer& at);
/// An array of element labels.
Mask parse_set(const Json& v, const Universe& u, const JsonPointer& at);

/// Either {"granules": [[...], ...]} or
/// {"relation": {"pairs": [[a,b],...], "closure": "...", "neighborhoods": "predecessor|successor"}}.
Granulation parse_granulation(const Json& spec, const Universe& u, const JsonPointer& at);

/// "K0" | "K1" | "K2" or an object {"tag": ...}: {"tag":"Kst","s":..,"t":..,"base":<kappa>},
/// {"tag":"bGRIF"|"cGRIF","sigma":"l|u","pi":"l|u"} (classical operators of g).
InclusionFn parse_kappa(const Json& v, const Granulation& g, const JsonPointer& at);

/// Sorted label array, the wire form of a set.
Json set_to_json(const Universe& u, Mask m);

struct NamedSet {
  std::string label;
  Mask set = 0;
};

struct ParthoodSpec {
  ParthoodTag tag = ParthoodTag::Subset;
  ParthoodParams params;
};

struct RationalSpec {
  std::string lower = "l_alpha";
  std::string upper = "u_alpha";
  std::string strategy = "maximal-search";
};

/// A validated problem description. Everything is checked on load, so no
/// command can fail on its input after it has started computing.
struct ProblemSpec {
  std::string name;
  Granulation granulation;
  InclusionFn kappa;
  std::optional<Rational> alpha;
  std::optional<int> k;
  std::optional<ParthoodSpec> parthood;
  std::vector<std::string> operators;
  std::vector<std::string> axioms;
  std::optional<RationalSpec> rational;
  /// Empty when the document gives none; see subsets_of_interest().
  std::vector<NamedSet> subsets;

  const Universe& universe() const { return granulation.universe(); }
};

/// Keys: name, description, universe, granulation, kappa (default K0), alpha, k,
/// parthood {tag, kappa, alpha, k, t}, operators, axioms,
/// rational {lower, upper, strategy}, subsets (label arrays or {label, set}).
ProblemSpec parse_problem(const Json& doc);
/// Reads and parses a file; unreadable files and malformed JSON raise SpecError at "/".
ProblemSpec load_problem(const std::string& path);

/// Universes above this size need an explicit subset list.
inline constexpr std::size_t kMaxEnumeratedUniverse = 12;

/// The spec's subsets, or the whole powerset in enumeration order with
/// "{...}" labels. Throws SizeLimitError when that would be too large.
std::vector<NamedSet> subsets_of_interest(const ProblemSpec& spec);

}  // namespace granrough
