#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "granrough/rational.hpp"
#include "granrough/set_operator.hpp"
#include "granrough/universe.hpp"

namespace granrough {

enum class KappaTag { K0, K1, K2, Kst, BGrif, CGrif, Custom };

/// Which approximation of an argument a granular inclusion function looks at.
enum class ApproxSide { Lower, Upper };

std::string to_string(KappaTag t);

/// A rough inclusion function bound to one universe: a total map from pairs of
/// subsets to rationals. The value lies in [0, 1] for every tag except the
/// cobasic granular one, whose values are returned unclamped.
class InclusionFn {
 public:
  using Fn = std::function<Rational(Mask, Mask)>;

  /// #(a∩b)/#a, and 1 when a is empty.
  static InclusionFn k0(Universe u);
  /// #b/#(a∪b), and 1 when a∪b is empty.
  static InclusionFn k1(Universe u);
  /// #(complement(a) ∪ b)/#universe; the empty universe maps to 1.
  static InclusionFn k2(Universe u);
  /// Piecewise-linear rescaling of `base` between s and t; requires 0 <= s < t <= 1.
  static InclusionFn kst(Rational s, Rational t, InclusionFn base);
  /// #(a^σ ∩ b^π)/#(a^σ), and 1 when a^σ is empty.
  static InclusionFn bgrif(ApproxSide sigma, ApproxSide pi, SetOperator lower, SetOperator upper);
  /// #(a^σ ∩ b^π)/#(a^π), and 1 when a^π is empty. May exceed 1.
  static InclusionFn cgrif(ApproxSide sigma, ApproxSide pi, SetOperator lower, SetOperator upper);
  static InclusionFn custom(Universe u, std::string name, Fn fn);

  KappaTag tag() const { return tag_; }
  const std::string& name() const { return name_; }
  const Universe& universe() const { return universe_; }

  Rational operator()(Mask a, Mask b) const { return table_ ? (*table_)[(a << universe_.size()) | b] : fn_(a, b); }
  Rational operator()(const ESet& a, const ESet& b) const;

  /// Copy with all pair values precomputed; universes above 10 elements are
  /// returned untabulated.
  InclusionFn tabulated() const;

 private:
  InclusionFn(KappaTag tag, std::string name, Universe u, Fn fn)
      : tag_(tag), name_(std::move(name)), universe_(std::move(u)), fn_(std::move(fn)) {}

  KappaTag tag_;
  std::string name_;
  Universe universe_;
  Fn fn_;
  std::shared_ptr<const std::vector<Rational>> table_;
};

Rational eval_k0(const ESet& a, const ESet& b);
/// 1 - K0(a, b): the error of classifying b as a.
Rational eval_classification_error(const ESet& a, const ESet& b);
Rational eval_k1(const ESet& a, const ESet& b);
Rational eval_k2(const ESet& a, const ESet& b);
Rational eval_kst(const Rational& s, const Rational& t, const InclusionFn& base, const ESet& a, const ESet& b);
/// The rescaling applied by Kst to an already computed base value.
Rational kst_rescale(const Rational& s, const Rational& t, const Rational& base_value);
Rational eval_bgrif(ApproxSide sigma, ApproxSide pi, const SetOperator& lower, const SetOperator& upper, const ESet& a,
                    const ESet& b);
Rational eval_cgrif(ApproxSide sigma, ApproxSide pi, const SetOperator& lower, const SetOperator& upper, const ESet& a,
                    const ESet& b);

/// p(a∩b) - p(a)p(b) under the uniform measure p(x) = #x/#universe.
Rational dependence_degree(const ESet& a, const ESet& b);

}  // namespace granrough
