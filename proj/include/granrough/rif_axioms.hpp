#pragma once

#include <optional>
#include <string>
#include <vector>

#include "granrough/check_report.hpp"
#include "granrough/rif.hpp"

namespace granrough {

/// Axioms on an inclusion function over the powerset, with parthood = ⊆,
/// meet = ∩, join = ∪, bottom = ∅, top = the universe.
///
/// R5 is evaluated in guarded form: for nonempty a, κ(a,b) = 0 iff a∩b = ∅.
/// RIUnguarded is RI with the c ⊆ a∩b premise removed. FirstArgAntitone is
/// a ⊆ b ⇒ κ(b,e) ≤ κ(a,e), a property K0 does not have; it is here so the
/// claim can be tested rather than assumed.
enum class Axiom { U1, R0, IR0, R1, R2, R3, R4, IR4, R5, RB, R6, RV, RI, RIUnguarded, FirstArgAntitone };

struct AxiomId {
  Axiom axiom;
  /// Threshold for RV / RI / RIUnguarded. Empty means "sweep".
  std::optional<Rational> delta;

  bool takes_delta() const;
  std::string name() const;
  /// "R2", "RV", "RV@3/10", "RI-unguarded@1/5", ... Throws ParameterError listing valid names.
  static AxiomId parse(const std::string& text);
};

std::string to_string(Axiom a);
int arity(Axiom a);
const std::vector<std::string>& axiom_names();

/// δ values used when a thresholded axiom is checked without a fixed δ:
/// 0, 1/10, ..., 1, every p/q with q <= n, and every value κ takes in [0, 1].
std::vector<Rational> delta_sweep(const InclusionFn& kappa);

/// One instance of the axiom. Unused arguments are ignored; `delta` is
/// required for thresholded axioms.
bool axiom_instance_holds(const InclusionFn& kappa, const AxiomId& axiom, Mask a, Mask b, Mask c);

/// Exhaustive check over all subsets of κ's universe. A thresholded axiom
/// without δ is checked at every sweep value; each witness then records the
/// smallest violated δ.
CheckReport check_axiom(const InclusionFn& kappa, const AxiomId& axiom, const CheckOptions& opts = {});

struct RifClassification {
  bool grif = false;
  bool qrif = false;
  bool wqrif = false;
  bool prif = false;
  /// Reports for R0, R1, R2, R3 and RV (swept), in that order.
  std::vector<CheckReport> evidence;

  std::vector<std::string> tags() const;
};

RifClassification classify_rif(const InclusionFn& kappa, const CheckOptions& opts = {});

/// prif1..prif9 plus "R1->U1" and "R0->U1", each evaluated as a propositional
/// implication between exhaustive axiom verdicts for every κ in the family.
/// A report fails (hard) when some κ satisfies the premises but not the
/// conclusion; the witness names that κ. The note lists the κ for which the
/// implication was non-vacuous.
std::vector<CheckReport> check_prif_implications(const std::vector<InclusionFn>& family, const CheckOptions& opts = {});

}  // namespace granrough
