#pragma once

#include <vector>

#include "granrough/check_report.hpp"
#include "granrough/granulation.hpp"
#include "granrough/set_operator.hpp"

namespace granrough {

/// Granular operator space axioms instantiated on the powerset: parthood is
/// inclusion, join/meet are union/intersection, bottom is the empty set and
/// top the universe. Returns one report per axiom, in the order
/// PT1 PT2 G1..G5 UL1 (with its three clauses UL1.contract, UL1.idem-l,
/// UL1.idem-u) UL2 UL3 TB.
std::vector<CheckReport> check_ggs_axioms(const Granulation& g, const SetOperator& lower, const SetOperator& upper,
                                          const CheckOptions& opts = {});

/// Admissibility of the granulation for the given operators: WRA, LS and FU
/// (one report each, in that order).
std::vector<CheckReport> check_admissibility(const Granulation& g, const SetOperator& lower, const SetOperator& upper,
                                             const CheckOptions& opts = {});

/// True when `x` equals the union of the granules it contains.
bool is_granule_union(Mask x, const Granulation& g);

}  // namespace granrough
