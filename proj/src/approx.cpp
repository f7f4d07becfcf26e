#include "granrough/approx.hpp"

#include "granrough/error.hpp"

namespace granrough {

namespace {

template <typename Keep>
Mask union_where(const Granulation& g, Keep keep) {
  Mask out = 0;
  for (Mask h : g.granules()) {
    if (keep(h)) out |= h;
  }
  return out;
}

void require_k(int k) {
  if (k < 0) throw ParameterError("grade k must be non-negative (got " + std::to_string(k) + ")");
}

void require_kappa(const InclusionFn& kappa, const Granulation& g) { require_same(kappa.universe(), g.universe()); }

template <typename F>
ESet lift(const ESet& x, const Granulation& g, F f) {
  require_same(x.universe(), g.universe());
  return ESet(x.universe(), f(x.mask()));
}

}  // namespace

void require_alpha(const Rational& alpha) {
  if (alpha < Rational(0) || alpha >= Rational(1, 2)) {
    throw ParameterError("alpha must lie in [0, 1/2) (got " + alpha.to_string() + ")");
  }
}

Mask classical_lower(Mask x, const Granulation& g) {
  return union_where(g, [x](Mask h) { return is_subset(h, x); });
}

Mask classical_upper(Mask x, const Granulation& g) {
  return union_where(g, [x](Mask h) { return (h & x) != 0; });
}

Mask bited_upper(Mask x, const Granulation& g) {
  const Mask top = g.universe().full();
  return classical_upper(x, g) & ~classical_lower(top & ~x, g);
}

ESet classical_lower(const ESet& x, const Granulation& g) {
  return lift(x, g, [&](Mask m) { return classical_lower(m, g); });
}
ESet classical_upper(const ESet& x, const Granulation& g) {
  return lift(x, g, [&](Mask m) { return classical_upper(m, g); });
}
ESet bited_upper(const ESet& x, const Granulation& g) {
  return lift(x, g, [&](Mask m) { return bited_upper(m, g); });
}

Mask vprs_lower(Mask x, const Granulation& f, const InclusionFn& kappa, const Rational& alpha) {
  require_alpha(alpha);
  const Rational need = Rational(1) - alpha;
  return union_where(f, [&](Mask h) { return is_subset(h, x) && kappa(x, h) >= need; });
}

Mask vprs_upper(Mask x, const Granulation& f, const InclusionFn& kappa, const Rational& alpha) {
  require_alpha(alpha);
  return union_where(f, [&](Mask h) { return (h & x) != 0 && kappa(x, h) > alpha; });
}

ESet vprs_lower(const ESet& x, const Granulation& f, const InclusionFn& kappa, const Rational& alpha) {
  require_kappa(kappa, f);
  return lift(x, f, [&](Mask m) { return vprs_lower(m, f, kappa, alpha); });
}
ESet vprs_upper(const ESet& x, const Granulation& f, const InclusionFn& kappa, const Rational& alpha) {
  require_kappa(kappa, f);
  return lift(x, f, [&](Mask m) { return vprs_upper(m, f, kappa, alpha); });
}

Mask vprs_star_lower(Mask x, const Granulation& g, const InclusionFn& kappa, const Rational& alpha) {
  require_alpha(alpha);
  const Rational need = Rational(1) - alpha;
  return union_where(g, [&](Mask h) { return kappa(x, h) >= need; });
}

Mask vprs_star_upper(Mask x, const Granulation& g, const InclusionFn& kappa, const Rational& alpha) {
  require_alpha(alpha);
  return union_where(g, [&](Mask h) { return kappa(x, h) > alpha; });
}

ESet vprs_star_lower(const ESet& x, const Granulation& g, const InclusionFn& kappa, const Rational& alpha) {
  require_kappa(kappa, g);
  return lift(x, g, [&](Mask m) { return vprs_star_lower(m, g, kappa, alpha); });
}
ESet vprs_star_upper(const ESet& x, const Granulation& g, const InclusionFn& kappa, const Rational& alpha) {
  require_kappa(kappa, g);
  return lift(x, g, [&](Mask m) { return vprs_star_upper(m, g, kappa, alpha); });
}

namespace {

template <typename Accept>
Mask pointwise(const NeighborhoodMap& n, const Granulation& f, Accept accept) {
  require_same(n.universe(), f.universe());
  Mask out = 0;
  const auto& all = n.all();
  for (std::size_t y = 0; y < all.size(); ++y) {
    if (f.contains(all[y]) && accept(all[y])) out |= Mask{1} << y;
  }
  return out;
}

}  // namespace

Mask vprs_pointwise_lower(Mask x, const NeighborhoodMap& n, const Granulation& f, const InclusionFn& kappa,
                          const Rational& alpha) {
  require_alpha(alpha);
  const Rational need = Rational(1) - alpha;
  return pointwise(n, f, [&](Mask ny) { return kappa(x, ny) >= need; });
}

Mask vprs_pointwise_upper(Mask x, const NeighborhoodMap& n, const Granulation& f, const InclusionFn& kappa,
                          const Rational& alpha) {
  require_alpha(alpha);
  return pointwise(n, f, [&](Mask ny) { return kappa(x, ny) > alpha; });
}

ESet vprs_pointwise_lower(const ESet& x, const NeighborhoodMap& n, const Granulation& f, const InclusionFn& kappa,
                          const Rational& alpha) {
  require_kappa(kappa, f);
  return lift(x, f, [&](Mask m) { return vprs_pointwise_lower(m, n, f, kappa, alpha); });
}
ESet vprs_pointwise_upper(const ESet& x, const NeighborhoodMap& n, const Granulation& f, const InclusionFn& kappa,
                          const Rational& alpha) {
  require_kappa(kappa, f);
  return lift(x, f, [&](Mask m) { return vprs_pointwise_upper(m, n, f, kappa, alpha); });
}

Mask graded_upper_literal(Mask x, const Granulation& g, int k) {
  require_k(k);
  return union_where(g, [&](Mask h) { return card(h & x) > k; });
}

Mask graded_lower_literal(Mask x, const Granulation& g, int k) {
  require_k(k);
  return union_where(g, [&](Mask h) { return card(h) - card(h & x) <= k; });
}

Mask graded_lower_strict(Mask x, const Granulation& g, int k) {
  require_k(k);
  return union_where(g, [&](Mask h) { return is_subset(h, x) && card(h & x) > k; });
}

Mask overlap_at_least(Mask x, const Granulation& g, int m) {
  return union_where(g, [&](Mask h) { return card(h & x) >= m; });
}

ESet graded_upper_literal(const ESet& x, const Granulation& g, int k) {
  return lift(x, g, [&](Mask m) { return graded_upper_literal(m, g, k); });
}
ESet graded_lower_literal(const ESet& x, const Granulation& g, int k) {
  return lift(x, g, [&](Mask m) { return graded_lower_literal(m, g, k); });
}
ESet graded_lower_strict(const ESet& x, const Granulation& g, int k) {
  return lift(x, g, [&](Mask m) { return graded_lower_strict(m, g, k); });
}

Regions vprs_regions(const ESet& x, const Granulation& f, const InclusionFn& kappa, const Rational& alpha) {
  require_kappa(kappa, f);
  require_same(x.universe(), f.universe());
  const Mask m = x.mask();
  const Mask lower = vprs_lower(m, f, kappa, alpha);
  const Mask upper = vprs_upper(m, f, kappa, alpha);
  const Mask negative = union_where(f, [&](Mask h) { return (h & m) != 0 && kappa(m, h) <= alpha; });
  const Universe& u = x.universe();
  return Regions{ESet(u, lower), ESet(u, negative), ESet(u, upper & ~lower), std::nullopt, std::nullopt};
}

Regions graded_regions(const ESet& x, const Granulation& g, int k, GradedLower variant) {
  require_same(x.universe(), g.universe());
  const Mask m = x.mask();
  const Mask upper = graded_upper_literal(m, g, k);
  const Mask lower = variant == GradedLower::Literal ? graded_lower_literal(m, g, k) : graded_lower_strict(m, g, k);
  const Universe& u = x.universe();
  const ESet bnd_u(u, upper & ~lower);
  return Regions{ESet(u, upper & lower), ESet(u, u.full() & ~(lower | upper)), bnd_u, bnd_u, ESet(u, lower & ~upper)};
}

std::string to_string(ApproxFamily f) {
  switch (f) {
    case ApproxFamily::Classical:
      return "classical";
    case ApproxFamily::Bited:
      return "bited";
    case ApproxFamily::Vprs:
      return "vprs";
    case ApproxFamily::VprsStar:
      return "vprs-star";
    case ApproxFamily::VprsPointwise:
      return "vprs-pointwise";
    case ApproxFamily::GradedLiteral:
      return "graded-literal";
    case ApproxFamily::GradedStrict:
      return "graded-strict";
  }
  return "classical";
}

ApproxFamily parse_family(const std::string& text) {
  for (auto f : {ApproxFamily::Classical, ApproxFamily::Bited, ApproxFamily::Vprs, ApproxFamily::VprsStar,
                 ApproxFamily::VprsPointwise, ApproxFamily::GradedLiteral, ApproxFamily::GradedStrict}) {
    if (to_string(f) == text) return f;
  }
  throw ParameterError("unknown approximation family '" + text + "'");
}

namespace {

const InclusionFn& need_kappa(const ApproxSpec& s, const Granulation& g) {
  if (!s.kappa) throw ParameterError("this operator needs an inclusion function (kappa)");
  require_kappa(*s.kappa, g);
  return *s.kappa;
}

Rational need_alpha(const ApproxSpec& s) {
  if (!s.alpha) throw ParameterError("this operator needs alpha");
  require_alpha(*s.alpha);
  return *s.alpha;
}

int need_k(const ApproxSpec& s) {
  if (!s.k) throw ParameterError("this operator needs the grade k");
  require_k(*s.k);
  return *s.k;
}

NeighborhoodMap need_neighborhoods(const ApproxSpec& s, const Granulation& g) {
  if (s.neighborhoods) {
    require_same(s.neighborhoods->universe(), g.universe());
    return *s.neighborhoods;
  }
  if (g.neighborhoods()) return *g.neighborhoods();
  throw ParameterError("pointwise operators need a neighborhood map (give a relation-derived granulation)");
}

}  // namespace

const std::vector<std::string>& operator_ids() {
  static const std::vector<std::string> ids = {"l",        "u",   "u_b", "l_alpha", "u_alpha", "l_alpha*",
                                               "u_alpha*", "l_p", "u_p", "l_k",     "u_k",     "l_k-strict"};
  return ids;
}

SetOperator make_operator(const std::string& id, const ApproxSpec& s, const Granulation& g) {
  const Universe& u = g.universe();
  if (id == "l") return {u, id, [g](Mask x) { return classical_lower(x, g); }};
  if (id == "u") return {u, id, [g](Mask x) { return classical_upper(x, g); }};
  if (id == "u_b") return {u, id, [g](Mask x) { return bited_upper(x, g); }};
  if (id == "l_alpha" || id == "u_alpha" || id == "l_alpha*" || id == "u_alpha*" || id == "l_p" || id == "u_p") {
    const InclusionFn kappa = need_kappa(s, g).tabulated();
    const Rational alpha = need_alpha(s);
    if (id == "l_alpha") return {u, id, [=](Mask x) { return vprs_lower(x, g, kappa, alpha); }};
    if (id == "u_alpha") return {u, id, [=](Mask x) { return vprs_upper(x, g, kappa, alpha); }};
    if (id == "l_alpha*") return {u, id, [=](Mask x) { return vprs_star_lower(x, g, kappa, alpha); }};
    if (id == "u_alpha*") return {u, id, [=](Mask x) { return vprs_star_upper(x, g, kappa, alpha); }};
    const NeighborhoodMap n = need_neighborhoods(s, g);
    if (id == "l_p") return {u, id, [=](Mask x) { return vprs_pointwise_lower(x, n, g, kappa, alpha); }};
    return {u, id, [=](Mask x) { return vprs_pointwise_upper(x, n, g, kappa, alpha); }};
  }
  if (id == "l_k" || id == "u_k" || id == "l_k-strict") {
    const int k = need_k(s);
    if (id == "l_k") return {u, id, [=](Mask x) { return graded_lower_literal(x, g, k); }};
    if (id == "u_k") return {u, id, [=](Mask x) { return graded_upper_literal(x, g, k); }};
    return {u, id, [=](Mask x) { return graded_lower_strict(x, g, k); }};
  }
  std::string valid;
  for (const auto& v : operator_ids()) valid += (valid.empty() ? "" : ", ") + v;
  throw ParameterError("unknown operator '" + id + "'; valid operators: " + valid);
}

OperatorPair make_operators(const ApproxSpec& spec, const Granulation& g) {
  switch (spec.family) {
    case ApproxFamily::Classical:
      return {make_operator("l", spec, g), make_operator("u", spec, g)};
    case ApproxFamily::Bited:
      return {make_operator("l", spec, g), make_operator("u_b", spec, g)};
    case ApproxFamily::Vprs:
      return {make_operator("l_alpha", spec, g), make_operator("u_alpha", spec, g)};
    case ApproxFamily::VprsStar:
      return {make_operator("l_alpha*", spec, g), make_operator("u_alpha*", spec, g)};
    case ApproxFamily::VprsPointwise:
      return {make_operator("l_p", spec, g), make_operator("u_p", spec, g)};
    case ApproxFamily::GradedLiteral:
      return {make_operator("l_k", spec, g), make_operator("u_k", spec, g)};
    case ApproxFamily::GradedStrict:
      return {make_operator("l_k-strict", spec, g), make_operator("u_k", spec, g)};
  }
  throw ParameterError("unknown approximation family");
}

}  // namespace granrough
