#pragma once

#include <optional>
#include <string>
#include <vector>

#include "granrough/check_report.hpp"
#include "granrough/parthood.hpp"
#include "granrough/set_operator.hpp"

namespace granrough {

/// Operators and substantial parthood a rational approximation is taken
/// relative to. Definite sets are the nonempty fixed points of `lower`.
class RationalSetting {
 public:
  RationalSetting(SetOperator lower, SetOperator upper, ParthoodRelation ps);

  const SetOperator& lower() const { return lower_; }
  const SetOperator& upper() const { return upper_; }
  const ParthoodRelation& parthood() const { return ps_; }
  const std::vector<Mask>& definites() const { return definites_; }
  /// The image of `upper`, in subset enumeration order.
  const std::vector<Mask>& upper_image() const { return upper_image_; }

 private:
  SetOperator lower_;
  SetOperator upper_;
  ParthoodRelation ps_;
  std::vector<Mask> definites_;
  std::vector<Mask> upper_image_;
};

/// How to pick among the sets b whose lower approximation may serve.
///
/// MaximalSearch: over all b ⊆ a whose definite parts are all substantial
/// parts of a, take b^l for the b maximizing #(b^l), then #b, then earliest
/// in subset enumeration order. Always defined (b = ∅ qualifies).
///
/// SelfWitness: b = a, defined only when a^l is itself a substantial part of a.
enum class RationalLowerStrategy { MaximalSearch, SelfWitness };

std::string to_string(RationalLowerStrategy s);

struct RationalResult {
  bool defined = false;
  std::optional<Mask> value;
  /// Lower: the b whose approximation was taken. Upper: some z with z^u = value.
  std::optional<Mask> witness;
  /// Upper only: every qualifying b, in subset enumeration order.
  std::vector<Mask> alternatives;
};

RationalResult rational_lower(Mask a, const RationalSetting& s,
                              RationalLowerStrategy strategy = RationalLowerStrategy::MaximalSearch);

/// The ⊆-least qualifying b (fewest elements, then earliest in enumeration
/// order); undefined when there is none.
RationalResult rational_upper(Mask a, const RationalSetting& s);

/// b ⊆ a and every definite e ⊆ b is a substantial part of a.
bool lower_clause_holds(Mask a, Mask b, const RationalSetting& s);

/// Re-checks a result against the clauses of its strategy. For SelfWitness
/// that is value = a^l and P_s(value, a); the definition's clause on b = a
/// need not hold.
bool revalidate_lower(Mask a, const RationalResult& r, const RationalSetting& s,
                      RationalLowerStrategy strategy = RationalLowerStrategy::MaximalSearch);
/// Re-checks the clauses of the upper definition for a defined result.
bool revalidate_upper(Mask a, const RationalResult& r, const RationalSetting& s);

/// Idempotence, Low-comp1, s-Monotony, Up-comp1 (soft: their hypotheses are
/// not checked here), then Low-comp2 and Up-comp2 (reported only).
std::vector<CheckReport> check_rational_proposition(const RationalSetting& s, RationalLowerStrategy strategy,
                                                    const CheckOptions& opts = {});

}  // namespace granrough
