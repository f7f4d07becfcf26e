#pragma once

#include <optional>
#include <string>
#include <vector>

#include "granrough/granulation.hpp"
#include "granrough/rational.hpp"
#include "granrough/rif.hpp"
#include "granrough/set_operator.hpp"

namespace granrough {

/// Throws ParameterError unless 0 <= alpha < 1/2.
void require_alpha(const Rational& alpha);

// Classical granular approximations.
Mask classical_lower(Mask x, const Granulation& g);
Mask classical_upper(Mask x, const Granulation& g);
/// Classical upper minus the classical lower of the complement.
Mask bited_upper(Mask x, const Granulation& g);
ESet classical_lower(const ESet& x, const Granulation& g);
ESet classical_upper(const ESet& x, const Granulation& g);
ESet bited_upper(const ESet& x, const Granulation& g);

// Variable precision: granules h ⊆ x with κ(x,h) >= 1-α (lower), granules
// meeting x with κ(x,h) > α (upper).
Mask vprs_lower(Mask x, const Granulation& f, const InclusionFn& kappa, const Rational& alpha);
Mask vprs_upper(Mask x, const Granulation& f, const InclusionFn& kappa, const Rational& alpha);
ESet vprs_lower(const ESet& x, const Granulation& f, const InclusionFn& kappa, const Rational& alpha);
ESet vprs_upper(const ESet& x, const Granulation& f, const InclusionFn& kappa, const Rational& alpha);

// Star variants: same thresholds, no inclusion or overlap requirement.
Mask vprs_star_lower(Mask x, const Granulation& g, const InclusionFn& kappa, const Rational& alpha);
Mask vprs_star_upper(Mask x, const Granulation& g, const InclusionFn& kappa, const Rational& alpha);
ESet vprs_star_lower(const ESet& x, const Granulation& g, const InclusionFn& kappa, const Rational& alpha);
ESet vprs_star_upper(const ESet& x, const Granulation& g, const InclusionFn& kappa, const Rational& alpha);

/// Pointwise: the elements y whose neighborhood n(y) is a granule of `f` and
/// satisfies κ(x, n(y)) >= 1-α. The result need not be a subset of x.
Mask vprs_pointwise_lower(Mask x, const NeighborhoodMap& n, const Granulation& f, const InclusionFn& kappa,
                          const Rational& alpha);
/// Pointwise upper: κ(x, n(y)) > α.
Mask vprs_pointwise_upper(Mask x, const NeighborhoodMap& n, const Granulation& f, const InclusionFn& kappa,
                          const Rational& alpha);
ESet vprs_pointwise_lower(const ESet& x, const NeighborhoodMap& n, const Granulation& f, const InclusionFn& kappa,
                          const Rational& alpha);
ESet vprs_pointwise_upper(const ESet& x, const NeighborhoodMap& n, const Granulation& f, const InclusionFn& kappa,
                          const Rational& alpha);

// Graded approximations. The literal lower keeps every granule missing at
// most k elements of x, including granules disjoint from x when #h <= k.
Mask graded_upper_literal(Mask x, const Granulation& g, int k);
Mask graded_lower_literal(Mask x, const Granulation& g, int k);
/// Table-compatible lower: granules h ⊆ x with #(h∩x) > k. Not the defining
/// formula; prefer graded_lower_literal unless reproducing published tables.
Mask graded_lower_strict(Mask x, const Granulation& g, int k);
/// Union of granules h with #(h∩x) >= m.
Mask overlap_at_least(Mask x, const Granulation& g, int m);
ESet graded_upper_literal(const ESet& x, const Granulation& g, int k);
ESet graded_lower_literal(const ESet& x, const Granulation& g, int k);
ESet graded_lower_strict(const ESet& x, const Granulation& g, int k);

struct Regions {
  ESet positive;
  ESet negative;
  ESet boundary;
  /// Graded only: u_k \ l_k and l_k \ u_k. For graded regions `boundary`
  /// holds the upper boundary as well.
  std::optional<ESet> upper_boundary;
  std::optional<ESet> lower_boundary;
};

Regions vprs_regions(const ESet& x, const Granulation& f, const InclusionFn& kappa, const Rational& alpha);

enum class GradedLower { Literal, Strict };
Regions graded_regions(const ESet& x, const Granulation& g, int k, GradedLower variant);

enum class ApproxFamily { Classical, Bited, Vprs, VprsStar, VprsPointwise, GradedLiteral, GradedStrict };

std::string to_string(ApproxFamily f);
ApproxFamily parse_family(const std::string& text);

struct ApproxSpec {
  ApproxFamily family = ApproxFamily::Classical;
  std::optional<InclusionFn> kappa;
  std::optional<Rational> alpha;
  std::optional<int> k;
  /// Pointwise family only; defaults to the granulation's own neighborhoods.
  std::optional<NeighborhoodMap> neighborhoods;
};

struct OperatorPair {
  SetOperator lower;
  SetOperator upper;
};

/// Lower/upper operators of a family over `g`. Throws ParameterError when a
/// parameter the family needs is missing or out of range.
OperatorPair make_operators(const ApproxSpec& spec, const Granulation& g);

/// Named single operators, as used for table columns:
/// l u u_b l_alpha u_alpha l_alpha* u_alpha* l_p u_p l_k u_k l_k-strict.
const std::vector<std::string>& operator_ids();
SetOperator make_operator(const std::string& id, const ApproxSpec& params, const Granulation& g);

}  // namespace granrough
