#include "granrough/rational_approx.hpp"

#include <tuple>

#include "granrough/error.hpp"
#include "granrough/quantify.hpp"

namespace granrough {

namespace {}  // namespace

bool lower_clause_holds(Mask a, Mask b, const RationalSetting& s) {
  if (!is_subset(b, a)) return false;
  for (Mask e : s.definites()) {
    if (is_subset(e, b) && !s.parthood().holds(e, a)) return false;
  }
  return true;
}

namespace {

bool upper_candidate(Mask a, Mask b, const RationalSetting& s) {
  if (!is_subset(a, b) || !is_subset(b, s.upper()(a))) return false;
  for (Mask x : s.definites()) {
    if (is_subset(x, b) && !s.parthood().holds(x, b)) return false;
  }
  return true;
}

std::optional<Mask> preimage(Mask b, const RationalSetting& s) {
  for (Mask z : enumerate_subsets(s.upper().universe().size())) {
    if (s.upper()(z) == b) return z;
  }
  return std::nullopt;
}

}  // namespace

RationalSetting::RationalSetting(SetOperator lower, SetOperator upper, ParthoodRelation ps)
    : lower_(std::move(lower)), upper_(std::move(upper)), ps_(std::move(ps)) {
  require_same(lower_.universe(), upper_.universe());
  require_same(lower_.universe(), ps_.universe());
  const std::size_t n = lower_.universe().size();
  require_exhaustive(n, ExhaustiveLimits{}, 1, "rational approximation");
  if (n <= 16) {
    lower_ = lower_.tabulated();
    upper_ = upper_.tabulated();
  }
  std::vector<bool> in_image(std::size_t{1} << n, false);
  for (Mask x : enumerate_subsets(n)) {
    if (x != 0 && lower_(x) == x) definites_.push_back(x);
    in_image[upper_(x)] = true;
  }
  for (Mask x : enumerate_subsets(n))
    if (in_image[x]) upper_image_.push_back(x);
}

std::string to_string(RationalLowerStrategy s) {
  return s == RationalLowerStrategy::MaximalSearch ? "maximal-search" : "self-witness";
}

RationalResult rational_lower(Mask a, const RationalSetting& s, RationalLowerStrategy strategy) {
  RationalResult r;
  if (strategy == RationalLowerStrategy::SelfWitness) {
    const Mask v = s.lower()(a);
    if (s.parthood().holds(v, a)) {
      r.defined = true;
      r.value = v;
      r.witness = a;
    }
    return r;
  }
  // Key: larger approximation, then larger b, then earlier enumeration (smaller mask within a cardinality).
  std::optional<std::tuple<int, int, Mask>> best;
  for_each_submask(a, [&](Mask b) {
    if (!lower_clause_holds(a, b, s)) return;
    const Mask v = s.lower()(b);
    const std::tuple<int, int, Mask> key{card(v), card(b), b};
    if (!best || std::get<0>(key) > std::get<0>(*best) ||
        (std::get<0>(key) == std::get<0>(*best) &&
         (std::get<1>(key) > std::get<1>(*best) ||
          (std::get<1>(key) == std::get<1>(*best) && std::get<2>(key) < std::get<2>(*best))))) {
      best = key;
    }
  });
  // b = ∅ always qualifies, so best is set.
  const Mask b = std::get<2>(*best);
  r.defined = true;
  r.witness = b;
  r.value = s.lower()(b);
  return r;
}

RationalResult rational_upper(Mask a, const RationalSetting& s) {
  RationalResult r;
  for (Mask b : s.upper_image()) {
    if (upper_candidate(a, b, s)) r.alternatives.push_back(b);
  }
  if (r.alternatives.empty()) return r;
  r.defined = true;
  r.value = r.alternatives.front();
  r.witness = preimage(*r.value, s);
  return r;
}

bool revalidate_lower(Mask a, const RationalResult& r, const RationalSetting& s, RationalLowerStrategy strategy) {
  if (strategy == RationalLowerStrategy::SelfWitness) {
    const Mask v = s.lower()(a);
    if (!r.defined) return !r.value.has_value() && !s.parthood().holds(v, a);
    return r.value == v && r.witness == a && s.parthood().holds(v, a);
  }
  if (!r.defined) return false;
  if (!r.value || !r.witness) return false;
  const Mask b = *r.witness;
  return s.lower()(b) == *r.value && lower_clause_holds(a, b, s);
}

bool revalidate_upper(Mask a, const RationalResult& r, const RationalSetting& s) {
  if (!r.defined) return !r.value.has_value();
  if (!r.value || !r.witness) return false;
  return s.upper()(*r.witness) == *r.value && upper_candidate(a, *r.value, s);
}

std::vector<CheckReport> check_rational_proposition(const RationalSetting& s, RationalLowerStrategy strategy,
                                                    const CheckOptions& opts) {
  const std::size_t n = s.lower().universe().size();
  require_exhaustive(n, opts.limits, 2, "rational proposition");
  const Mask total = Mask{1} << n;
  std::vector<RationalResult> lo(total);
  std::vector<RationalResult> up(total);
  for (Mask x = 0; x < total; ++x) {
    lo[x] = rational_lower(x, s, strategy);
    up[x] = rational_upper(x, s);
  }
  const auto& l = s.lower();
  const auto& u = s.upper();
  const auto& ps = s.parthood();

  std::vector<CheckReport> out;
  out.push_back(check_forall<1>(
      "Idempotence", n, {"x"},
      [&](Mask x) {
        if (!lo[x].defined) return true;
        const auto& again = lo[*lo[x].value];
        return again.defined && *again.value == *lo[x].value;
      },
      opts));
  out.push_back(check_forall<1>(
      "Low-comp1", n, {"x"}, [&](Mask x) { return !lo[x].defined || is_subset(*lo[x].value, l(x)); }, opts));
  out.push_back(check_forall<2>(
      "s-Monotony", n, {"a", "b"},
      [&](Mask a, Mask b) {
        if (!is_subset(a, b) || !lo[a].defined || !lo[b].defined) return true;
        return is_subset(*lo[a].value, *lo[b].value);
      },
      opts));
  out.push_back(check_forall<1>(
      "Up-comp1", n, {"x"}, [&](Mask x) { return !up[x].defined || is_subset(*up[x].value, u(x)); }, opts));
  out.push_back(check_forall<1>(
      "Low-comp2", n, {"x"}, [&](Mask x) { return !lo[x].defined || ps.holds(*lo[x].value, l(x)); }, opts));
  out.push_back(check_forall<1>(
      "Up-comp2", n, {"x"}, [&](Mask x) { return !up[x].defined || ps.holds(*up[x].value, u(x)); }, opts));

  std::size_t defined_lower = 0;
  std::size_t defined_upper = 0;
  for (Mask x = 0; x < total; ++x) {
    defined_lower += lo[x].defined ? 1 : 0;
    defined_upper += up[x].defined ? 1 : 0;
  }
  for (auto& r : out) {
    r.severity = Severity::Soft;
    r.parameters["lower"] = l.name();
    r.parameters["upper"] = u.name();
    r.parameters["parthood"] = ps.name();
    r.parameters["strategy"] = to_string(strategy);
    r.note = "lower defined at " + std::to_string(defined_lower) + " of " + std::to_string(total) + " sets, upper at " +
             std::to_string(defined_upper);
  }
  return out;
}

}  // namespace granrough
