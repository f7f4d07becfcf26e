#include "granrough/parthood.hpp"

#include <algorithm>
#include <map>

#include "granrough/approx.hpp"
#include "granrough/error.hpp"
#include "granrough/quantify.hpp"

namespace granrough {

namespace {

constexpr std::size_t kMatrixLimit = 8;
constexpr std::size_t kPairsLimit = 12;

struct TagName {
  ParthoodTag tag;
  const char* name;
};

constexpr TagName kTagNames[] = {
    {ParthoodTag::Subset, "subset"}, {ParthoodTag::S3, "s3"},        {ParthoodTag::S5, "s5"},
    {ParthoodTag::S5Star, "s5*"},    {ParthoodTag::S6, "s6"},        {ParthoodTag::S7, "s7"},
    {ParthoodTag::S9, "s9"},         {ParthoodTag::SStar, "s*"},     {ParthoodTag::S0l, "s0l"},
    {ParthoodTag::S0u, "s0u"},       {ParthoodTag::S0lStar, "s0l*"}, {ParthoodTag::S0uStar, "s0u*"},
    {ParthoodTag::St, "st"},         {ParthoodTag::Pu, "pu"},        {ParthoodTag::Custom, "custom"},
};

bool uses_alpha(ParthoodTag t) {
  switch (t) {
    case ParthoodTag::S5:
    case ParthoodTag::S5Star:
    case ParthoodTag::S7:
    case ParthoodTag::S9:
    case ParthoodTag::S0l:
    case ParthoodTag::S0u:
    case ParthoodTag::S0lStar:
    case ParthoodTag::S0uStar:
    case ParthoodTag::Pu:
      return true;
    default:
      return false;
  }
}

bool uses_k(ParthoodTag t) { return t == ParthoodTag::S3 || t == ParthoodTag::S6 || t == ParthoodTag::SStar; }

SetOperator cached(SetOperator op) { return op.universe().size() <= 16 ? op.tabulated() : op; }

}  // namespace

std::string to_string(ParthoodTag t) {
  for (const auto& n : kTagNames)
    if (n.tag == t) return n.name;
  return "custom";
}

ParthoodTag parse_parthood_tag(const std::string& text) {
  for (const auto& n : kTagNames)
    if (text == n.name) return n.tag;
  std::string valid;
  for (const auto& n : kTagNames) valid += std::string(valid.empty() ? "" : ", ") + n.name;
  throw ParameterError("unknown parthood '" + text + "'; valid tags: " + valid);
}

ParthoodRelation::ParthoodRelation(ParthoodTag tag, std::string name, Universe u, ParthoodParams params, Pred pred,
                                   Pred similar, std::string similarity_note)
    : tag_(tag),
      name_(std::move(name)),
      universe_(std::move(u)),
      params_(std::move(params)),
      pred_(std::move(pred)),
      similar_(std::move(similar)),
      similarity_note_(std::move(similarity_note)) {
  const std::size_t n = universe_.size();
  if (n > kMatrixLimit) return;
  const Mask total = Mask{1} << n;
  auto bits = std::make_shared<std::vector<std::uint64_t>>((total * total + 63) / 64);
  for (Mask a = 0; a < total; ++a) {
    for (Mask b = 0; b < total; ++b) {
      if (pred_(a, b)) {
        const Mask i = (a << n) | b;
        (*bits)[i / 64] |= std::uint64_t{1} << (i % 64);
      }
    }
  }
  matrix_ = std::move(bits);
}

bool ParthoodRelation::holds(Mask a, Mask b) const {
  if (matrix_) {
    const Mask i = (a << universe_.size()) | b;
    return ((*matrix_)[i / 64] >> (i % 64)) & 1U;
  }
  return pred_(a, b);
}

bool ParthoodRelation::holds(const ESet& a, const ESet& b) const {
  require_same(universe_, a.universe());
  require_same(universe_, b.universe());
  return holds(a.mask(), b.mask());
}

std::vector<std::pair<Mask, Mask>> ParthoodRelation::pairs() const {
  const std::size_t n = universe_.size();
  if (n > kPairsLimit) {
    throw SizeLimitError("extension of " + name_ + " is not materialized above " + std::to_string(kPairsLimit) +
                         " elements (universe has " + std::to_string(n) + ")");
  }
  const auto order = enumerate_subsets(n);
  std::vector<std::pair<Mask, Mask>> out;
  for (Mask a : order)
    for (Mask b : order)
      if (holds(a, b)) out.emplace_back(a, b);
  return out;
}

std::size_t ParthoodRelation::count() const { return pairs().size(); }

ParthoodRelation ParthoodRelation::custom(Universe u, std::string name, Pred pred) {
  if (!pred) throw ParameterError("custom parthood needs a predicate");
  return {
      ParthoodTag::Custom, std::move(name), std::move(u), {}, std::move(pred), [](Mask a, Mask b) { return a == b; },
      "equality"};
}

ParthoodRelation build_parthood(ParthoodTag tag, const Granulation& g, const ParthoodParams& params) {
  const Universe& u = g.universe();
  const std::string tag_name = to_string(tag);
  if (tag == ParthoodTag::Custom) throw ParameterError("use ParthoodRelation::custom for custom parthoods");

  int k = 0;
  if (uses_k(tag)) {
    if (!params.k) throw ParameterError(tag_name + " needs the integer parameter k");
    k = *params.k;
    if (k < 0) throw ParameterError(tag_name + " needs k >= 0");
  }
  std::optional<InclusionFn> kappa;
  Rational alpha;
  if (uses_alpha(tag)) {
    if (!params.kappa) throw ParameterError(tag_name + " needs an inclusion function (kappa)");
    if (!params.alpha) throw ParameterError(tag_name + " needs alpha");
    require_same(params.kappa->universe(), u);
    require_alpha(*params.alpha);
    kappa = params.kappa->tabulated();
    alpha = *params.alpha;
  }
  if (tag == ParthoodTag::St) {
    for (Mask h : params.t) {
      if (!g.contains(h)) {
        throw ParameterError("st: designated set " + u.format(h) + " is not a granule of the granulation");
      }
    }
  }

  auto eq = [](Mask a, Mask b) { return a == b; };
  const Rational one_minus = Rational(1) - alpha;
  std::string name = tag_name;
  if (uses_k(tag)) name += "(k=" + std::to_string(k) + ")";
  if (uses_alpha(tag)) name += "(" + kappa->name() + ",alpha=" + alpha.to_string() + ")";

  auto make = [&](ParthoodRelation::Pred pred, ParthoodRelation::Pred sim, std::string note) {
    return ParthoodRelation(tag, name, u, params, std::move(pred), std::move(sim), std::move(note));
  };

  switch (tag) {
    case ParthoodTag::Subset:
      return make([](Mask a, Mask b) { return is_subset(a, b); }, eq, "equality");
    case ParthoodTag::S3:
      return make([k](Mask a, Mask b) { return card(a & b) > k && is_subset(a, b); }, eq, "equality");
    case ParthoodTag::S6:
      return make([k](Mask a, Mask b) { return is_subset(a, b) && card(a) > k; }, eq, "equality");
    case ParthoodTag::SStar:
      return make([k](Mask a, Mask b) { return card(a & b) > k && !is_proper_subset(b, a); }, eq, "equality");
    case ParthoodTag::St: {
      const std::vector<Mask> t = params.t;
      return make(
          [t](Mask a, Mask b) {
            if (!is_subset(a, b)) return false;
            return std::any_of(t.begin(), t.end(), [a](Mask h) { return is_subset(h, a); });
          },
          eq, "equality");
    }
    default:
      break;
  }

  const InclusionFn kap = *kappa;
  ApproxSpec spec{ApproxFamily::Vprs, kap, alpha, std::nullopt, std::nullopt};
  switch (tag) {
    case ParthoodTag::S5:
    case ParthoodTag::S5Star: {
      const SetOperator l = cached(make_operator(tag == ParthoodTag::S5 ? "l_alpha" : "l_alpha*", spec, g));
      return make([l](Mask a, Mask b) { return is_subset(l(a), l(b)); }, [l](Mask a, Mask b) { return l(a) == l(b); },
                  "equal " + l.name() + " approximations");
    }
    case ParthoodTag::Pu: {
      const SetOperator up = cached(make_operator("u_alpha", spec, g));
      return make([up](Mask a, Mask b) { return is_subset(up(a), up(b)); },
                  [up](Mask a, Mask b) { return up(a) == up(b); }, "equal u_alpha approximations");
    }
    case ParthoodTag::S0l:
    case ParthoodTag::S0lStar: {
      const SetOperator l = cached(make_operator(tag == ParthoodTag::S0l ? "l_alpha" : "l_alpha*", spec, g));
      return make([l, kap, one_minus](Mask a, Mask b) { return is_subset(l(a), l(b)) && kap(a, b) >= one_minus; },
                  [l, kap, one_minus](Mask a, Mask b) {
                    return l(a) == l(b) && kap(a, b) >= one_minus && kap(b, a) >= one_minus;
                  },
                  "equal " + l.name() + " approximations and mutual inclusion degree >= 1-alpha");
    }
    case ParthoodTag::S0u:
    case ParthoodTag::S0uStar: {
      const SetOperator up = cached(make_operator(tag == ParthoodTag::S0u ? "u_alpha" : "u_alpha*", spec, g));
      return make([up, kap, alpha](Mask a, Mask b) { return is_subset(up(a), up(b)) && kap(a, b) >= alpha; },
                  [up](Mask a, Mask b) { return up(a) == up(b); }, "equal " + up.name() + " approximations");
    }
    case ParthoodTag::S7: {
      const std::vector<Mask> gs = g.granules();
      auto s7 = [gs, kap, one_minus](Mask a, Mask b) {
        for (Mask h : gs) {
          if (is_subset(h, a) && is_subset(h, b) && kap(a, h) >= one_minus && !(kap(b, h) >= one_minus)) return false;
        }
        return true;
      };
      return make(s7, [s7](Mask a, Mask b) { return s7(a, b) && s7(b, a); }, "mutual s7");
    }
    case ParthoodTag::S9: {
      const std::vector<Mask> gs = g.granules();
      return make(
          [gs, kap, alpha](Mask a, Mask b) {
            for (Mask h : gs)
              if (kap(a, h) >= alpha && !(kap(b, h) >= alpha)) return false;
            return true;
          },
          [gs, kap, alpha](Mask a, Mask b) {
            for (Mask h : gs)
              if ((kap(a, h) >= alpha) != (kap(b, h) >= alpha)) return false;
            return true;
          },
          "same granules reach degree alpha");
    }
    default:
      break;
  }
  throw ParameterError("unsupported parthood " + tag_name);
}

PuResult build_pu(const Granulation& g, const InclusionFn& kappa, const Rational& alpha) {
  ParthoodRelation r = build_parthood(ParthoodTag::Pu, g, ParthoodParams{kappa, alpha, std::nullopt, {}});
  const std::size_t n = g.universe().size();
  require_exhaustive(n, ExhaustiveLimits{}, 2, "pu classes");
  std::vector<std::vector<Mask>> classes;
  for (Mask a : enumerate_subsets(n)) {
    bool placed = false;
    for (auto& cls : classes) {
      const Mask rep = cls.front();
      if (r.holds(a, rep) && r.holds(rep, a)) {
        cls.push_back(a);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({a});
  }
  return {std::move(r), std::move(classes)};
}

std::string to_string(Verdict::State s) {
  switch (s) {
    case Verdict::State::Holds:
      return "holds";
    case Verdict::State::Fails:
      return "fails";
    case Verdict::State::Conditional:
      return "conditional";
  }
  return "fails";
}

const Verdict& PropertyProfile::at(const std::string& name) const {
  for (const auto& [n, v] : entries)
    if (n == name) return v;
  throw ParameterError("no property named " + name);
}

std::vector<CheckReport> property_reports(const ParthoodRelation& r, const CheckOptions& opts) {
  const std::size_t n = r.universe().size();
  auto P = [&r](Mask a, Mask b) { return r.holds(a, b); };
  std::vector<CheckReport> out;
  out.push_back(check_forall<1>("reflexive", n, {"a"}, [&](Mask a) { return P(a, a); }, opts));
  out.push_back(check_forall<3>(
      "transitive", n, {"a", "b", "c"}, [&](Mask a, Mask b, Mask c) { return !(P(a, b) && P(b, c)) || P(a, c); },
      opts));
  out.push_back(check_forall<2>(
      "antisymmetric", n, {"a", "b"}, [&](Mask a, Mask b) { return !(P(a, b) && P(b, a)) || a == b; }, opts));
  out.push_back(check_forall<2>("symmetric", n, {"a", "b"}, [&](Mask a, Mask b) { return !P(a, b) || P(b, a); }, opts));
  out.push_back(check_forall<1>("sub1", n, {"a"}, [&](Mask a) { return P(a, a); }, opts));
  out.push_back(
      check_forall<2>("sub2", n, {"a", "b"}, [&](Mask a, Mask b) { return !P(a, b) || is_subset(a, b); }, opts));
  out.push_back(check_forall<2>(
      "sub3", n, {"a", "b"}, [&](Mask a, Mask b) { return !(P(a, b) && P(b, a)) || r.similar(a, b); }, opts));
  out.back().note = "similarity: " + r.similarity_note();
  out.push_back(check_forall<3>(
      "sub4", n, {"a", "b", "e"}, [&](Mask a, Mask b, Mask e) { return !(P(a, e) && P(a, b)) || P(a, b | e); }, opts));
  out.push_back(check_forall<3>(
      "sub5", n, {"a", "b", "e"},
      [&](Mask a, Mask b, Mask e) { return !(P(b, a) && P(b, e) && is_subset(a, e)) || P(a, e); }, opts));
  out.push_back(check_forall<3>(
      "sub6", n, {"a", "b", "e"},
      [&](Mask a, Mask b, Mask e) { return !(P(a, b) && P(e, b) && is_subset(a, e)) || P(a, e); }, opts));
  out.push_back(check_forall<3>(
      "Asy-join", n, {"a", "b", "e"}, [&](Mask a, Mask b, Mask e) { return !(P(a, e) && P(b, e)) || P(a | b, e); },
      opts));
  out.push_back(check_forall<2>(
      "Asy-antisym", n, {"a", "b"}, [&](Mask a, Mask b) { return !(P(a, b) && P(b, a)) || a == b; }, opts));
  for (auto& rep : out) {
    rep.severity = Severity::Soft;
    rep.parameters["parthood"] = r.name();
  }
  return out;
}

PropertyProfile analyze_properties(const ParthoodRelation& r, const CheckOptions& opts) {
  const auto reports = property_reports(r, opts);
  const std::size_t n = r.universe().size();
  const Mask total = Mask{1} << n;

  // Reflexivity that fails outright may still hold exactly on a describable class of sets.
  std::vector<std::pair<std::string, std::function<bool(Mask)>>> conditions;
  if (r.params().k) {
    const int k = *r.params().k;
    conditions.emplace_back("#a > " + std::to_string(k), [k](Mask a) { return card(a) > k; });
  }
  conditions.emplace_back("a nonempty", [](Mask a) { return a != 0; });
  auto reflexive_condition = [&]() -> std::string {
    for (const auto& [text, cond] : conditions) {
      bool exact = true;
      for (Mask a = 0; a < total && exact; ++a) exact = r.holds(a, a) == cond(a);
      if (exact) return text;
    }
    return {};
  };

  PropertyProfile profile;
  for (const auto& rep : reports) {
    Verdict v;
    v.violations = rep.violation_count;
    if (!rep.holds) {
      v.state = Verdict::State::Fails;
      v.witness = rep.witnesses.front();
      if (rep.name == "reflexive" || rep.name == "sub1") {
        const std::string c = reflexive_condition();
        if (!c.empty()) {
          v.state = Verdict::State::Conditional;
          v.condition = c;
        }
      }
    }
    profile.entries.emplace_back(rep.name, std::move(v));
  }
  return profile;
}

Equalizers equalizers(const InclusionFn& kappa, Mask a, Mask b) {
  const std::size_t n = kappa.universe().size();
  require_exhaustive(n, ExhaustiveLimits{}, 1, "equalizers");
  const Rational target = kappa(a, b);
  Equalizers e;
  for (Mask c : enumerate_subsets(n)) {
    if (kappa(a, c) == target) e.e1.push_back(c);
    if (kappa(c, b) == target) e.e2.push_back(c);
  }
  return e;
}

}  // namespace granrough
