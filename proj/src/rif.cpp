#include "granrough/rif.hpp"

#include "granrough/error.hpp"

namespace granrough {

namespace {

Rational ratio(int num, int den) { return den == 0 ? Rational(1) : Rational(num, den); }

Rational k0_mask(Mask a, Mask b) { return ratio(card(a & b), card(a)); }

const SetOperator& pick(ApproxSide side, const SetOperator& lower, const SetOperator& upper) {
  return side == ApproxSide::Lower ? lower : upper;
}

std::string side_letter(ApproxSide s) { return s == ApproxSide::Lower ? "l" : "u"; }

void check_kst_params(const Rational& s, const Rational& t) {
  if (!(Rational(0) <= s && s < t && t <= Rational(1))) {
    throw ParameterError("Kst requires 0 <= s < t <= 1 (got s=" + s.to_string() + ", t=" + t.to_string() + ")");
  }
}

}  // namespace

std::string to_string(KappaTag t) {
  switch (t) {
    case KappaTag::K0:
      return "K0";
    case KappaTag::K1:
      return "K1";
    case KappaTag::K2:
      return "K2";
    case KappaTag::Kst:
      return "Kst";
    case KappaTag::BGrif:
      return "bGRIF";
    case KappaTag::CGrif:
      return "cGRIF";
    case KappaTag::Custom:
      return "custom";
  }
  return "custom";
}

InclusionFn InclusionFn::k0(Universe u) { return {KappaTag::K0, "K0", std::move(u), k0_mask}; }

InclusionFn InclusionFn::k1(Universe u) {
  return {KappaTag::K1, "K1", std::move(u), [](Mask a, Mask b) { return ratio(card(b), card(a | b)); }};
}

InclusionFn InclusionFn::k2(Universe u) {
  const Mask top = u.full();
  const int n = static_cast<int>(u.size());
  return {KappaTag::K2, "K2", std::move(u), [top, n](Mask a, Mask b) { return ratio(card((top & ~a) | b), n); }};
}

Rational kst_rescale(const Rational& s, const Rational& t, const Rational& v) {
  if (v <= s) return Rational(0);
  if (v >= t) return Rational(1);
  return (v - s) / (t - s);
}

InclusionFn InclusionFn::kst(Rational s, Rational t, InclusionFn base) {
  check_kst_params(s, t);
  std::string name = "Kst(" + s.to_string() + "," + t.to_string() + "," + base.name() + ")";
  Universe u = base.universe();
  return {KappaTag::Kst, std::move(name), std::move(u),
          [s, t, base = std::move(base)](Mask a, Mask b) { return kst_rescale(s, t, base(a, b)); }};
}

InclusionFn InclusionFn::bgrif(ApproxSide sigma, ApproxSide pi, SetOperator lower, SetOperator upper) {
  require_same(lower.universe(), upper.universe());
  Universe u = lower.universe();
  std::string name = "bGRIF(" + side_letter(sigma) + side_letter(pi) + ")";
  return {KappaTag::BGrif, std::move(name), std::move(u),
          [sigma, pi, lower = std::move(lower), upper = std::move(upper)](Mask a, Mask b) {
            const Mask as = pick(sigma, lower, upper)(a);
            const Mask bp = pick(pi, lower, upper)(b);
            return ratio(card(as & bp), card(as));
          }};
}

InclusionFn InclusionFn::cgrif(ApproxSide sigma, ApproxSide pi, SetOperator lower, SetOperator upper) {
  require_same(lower.universe(), upper.universe());
  Universe u = lower.universe();
  std::string name = "cGRIF(" + side_letter(sigma) + side_letter(pi) + ")";
  return {KappaTag::CGrif, std::move(name), std::move(u),
          [sigma, pi, lower = std::move(lower), upper = std::move(upper)](Mask a, Mask b) {
            const Mask as = pick(sigma, lower, upper)(a);
            const Mask ap = pick(pi, lower, upper)(a);
            const Mask bp = pick(pi, lower, upper)(b);
            return ratio(card(as & bp), card(ap));
          }};
}

InclusionFn InclusionFn::custom(Universe u, std::string name, Fn fn) {
  if (!fn) throw ParameterError("custom inclusion function needs a definition");
  return {KappaTag::Custom, std::move(name), std::move(u), std::move(fn)};
}

InclusionFn InclusionFn::tabulated() const {
  const std::size_t n = universe_.size();
  if (table_ || n > 10) return *this;
  const Mask total = Mask{1} << n;
  auto table = std::make_shared<std::vector<Rational>>(total * total);
  for (Mask a = 0; a < total; ++a) {
    for (Mask b = 0; b < total; ++b) (*table)[(a << n) | b] = fn_(a, b);
  }
  InclusionFn copy = *this;
  copy.table_ = std::move(table);
  return copy;
}

Rational InclusionFn::operator()(const ESet& a, const ESet& b) const {
  require_same(universe_, a.universe());
  require_same(universe_, b.universe());
  return (*this)(a.mask(), b.mask());
}

Rational eval_k0(const ESet& a, const ESet& b) {
  require_same(a.universe(), b.universe());
  return k0_mask(a.mask(), b.mask());
}

Rational eval_classification_error(const ESet& a, const ESet& b) { return Rational(1) - eval_k0(a, b); }

Rational eval_k1(const ESet& a, const ESet& b) { return InclusionFn::k1(a.universe())(a, b); }

Rational eval_k2(const ESet& a, const ESet& b) { return InclusionFn::k2(a.universe())(a, b); }

Rational eval_kst(const Rational& s, const Rational& t, const InclusionFn& base, const ESet& a, const ESet& b) {
  check_kst_params(s, t);
  return kst_rescale(s, t, base(a, b));
}

Rational eval_bgrif(ApproxSide sigma, ApproxSide pi, const SetOperator& lower, const SetOperator& upper, const ESet& a,
                    const ESet& b) {
  return InclusionFn::bgrif(sigma, pi, lower, upper)(a, b);
}

Rational eval_cgrif(ApproxSide sigma, ApproxSide pi, const SetOperator& lower, const SetOperator& upper, const ESet& a,
                    const ESet& b) {
  return InclusionFn::cgrif(sigma, pi, lower, upper)(a, b);
}

Rational dependence_degree(const ESet& a, const ESet& b) {
  require_same(a.universe(), b.universe());
  const auto n = static_cast<std::int64_t>(a.universe().size());
  if (n == 0) return Rational(0);
  const Rational pa(card(a.mask()), n);
  const Rational pb(card(b.mask()), n);
  const Rational pab(card(a.mask() & b.mask()), n);
  return pab - pa * pb;
}

}  // namespace granrough
