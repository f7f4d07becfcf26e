#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "granrough/check_report.hpp"
#include "granrough/granulation.hpp"
#include "granrough/rif.hpp"

namespace granrough {

enum class ParthoodTag {
  Subset,
  S3,       // #(a∩b) > k and a ⊆ b
  S5,       // a^{l_α} ⊆ b^{l_α}
  S5Star,   // a^{l_α*} ⊆ b^{l_α*}
  S6,       // a ⊆ b and #a > k
  S7,       // every granule h ⊆ a∩b with κ(a,h) >= 1-α has κ(b,h) >= 1-α
  S9,       // every granule h with κ(a,h) >= α has κ(b,h) >= α
  SStar,    // #(a∩b) > k and b is not a proper subset of a
  S0l,      // s5 and κ(a,b) >= 1-α
  S0u,      // a^{u_α} ⊆ b^{u_α} and κ(a,b) >= α
  S0lStar,  // s0l with l_α*
  S0uStar,  // s0u with u_α*
  St,       // some h in T has h ⊆ a ⊆ b
  Pu,       // a^{u_α} ⊆ b^{u_α}
  Custom,
};

std::string to_string(ParthoodTag t);
ParthoodTag parse_parthood_tag(const std::string& text);

struct ParthoodParams {
  std::optional<InclusionFn> kappa;
  std::optional<Rational> alpha;
  std::optional<int> k;
  /// Granules designated for st; must be granules of the granulation. Empty when unset.
  std::vector<Mask> t;
};

/// A binary relation on the powerset of a universe. Membership is evaluated
/// from the tagged definition; `pairs()` materializes the extension.
class ParthoodRelation {
 public:
  using Pred = std::function<bool(Mask, Mask)>;

  ParthoodTag tag() const { return tag_; }
  const std::string& name() const { return name_; }
  const Universe& universe() const { return universe_; }
  const ParthoodParams& params() const { return params_; }

  bool holds(Mask a, Mask b) const;
  bool holds(const ESet& a, const ESet& b) const;
  /// The equivalence used by sub3 for this tag.
  bool similar(Mask a, Mask b) const { return similar_(a, b); }
  /// Description of that equivalence, for reports.
  const std::string& similarity_note() const { return similarity_note_; }

  /// All related pairs in subset enumeration order (first component major).
  std::vector<std::pair<Mask, Mask>> pairs() const;
  std::size_t count() const;

  static ParthoodRelation custom(Universe u, std::string name, Pred pred);

  friend ParthoodRelation build_parthood(ParthoodTag, const Granulation&, const ParthoodParams&);

 private:
  ParthoodRelation(ParthoodTag tag, std::string name, Universe u, ParthoodParams params, Pred pred, Pred similar,
                   std::string similarity_note);

  ParthoodTag tag_;
  std::string name_;
  Universe universe_;
  ParthoodParams params_;
  Pred pred_;
  Pred similar_;
  std::string similarity_note_;
  std::shared_ptr<const std::vector<std::uint64_t>> matrix_;
};

/// Throws ParameterError when a parameter the tag needs is missing, when
/// alpha is outside [0, 1/2), or when T is not a subset of the granulation.
ParthoodRelation build_parthood(ParthoodTag tag, const Granulation& g, const ParthoodParams& params);

struct PuResult {
  ParthoodRelation relation;
  /// Classes of the symmetrization, ordered by their first member in subset
  /// enumeration order; members likewise ordered.
  std::vector<std::vector<Mask>> classes;
};

PuResult build_pu(const Granulation& g, const InclusionFn& kappa, const Rational& alpha);

struct Verdict {
  enum class State { Holds, Fails, Conditional };
  State state = State::Holds;
  /// First violating assignment when the property fails outright.
  Witness witness;
  std::size_t violations = 0;
  /// For Conditional: the condition under which the property holds.
  std::string condition;
};

std::string to_string(Verdict::State s);

/// Relation properties and the sub-axioms, each as a verdict. Names, in order:
/// reflexive transitive antisymmetric symmetric sub1 sub2 sub3 sub4 sub5 sub6
/// Asy-join Asy-antisym.
struct PropertyProfile {
  std::vector<std::pair<std::string, Verdict>> entries;
  const Verdict& at(const std::string& name) const;
};

PropertyProfile analyze_properties(const ParthoodRelation& r, const CheckOptions& opts = {});

/// The reports behind a profile, one per property, in profile order.
std::vector<CheckReport> property_reports(const ParthoodRelation& r, const CheckOptions& opts = {});

struct Equalizers {
  std::vector<Mask> e1;  // {c : κ(a,b) = κ(a,c)}
  std::vector<Mask> e2;  // {c : κ(a,b) = κ(c,b)}
};

Equalizers equalizers(const InclusionFn& kappa, Mask a, Mask b);

}  // namespace granrough
