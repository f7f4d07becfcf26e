#include "granrough/rif_axioms.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "granrough/error.hpp"
#include "granrough/quantify.hpp"

namespace granrough {

namespace {

struct AxiomName {
  Axiom axiom;
  const char* name;
};

constexpr AxiomName kNames[] = {
    {Axiom::U1, "U1"},
    {Axiom::R0, "R0"},
    {Axiom::IR0, "IR0"},
    {Axiom::R1, "R1"},
    {Axiom::R2, "R2"},
    {Axiom::R3, "R3"},
    {Axiom::R4, "R4"},
    {Axiom::IR4, "IR4"},
    {Axiom::R5, "R5"},
    {Axiom::RB, "RB"},
    {Axiom::R6, "R6"},
    {Axiom::RV, "RV"},
    {Axiom::RI, "RI"},
    {Axiom::RIUnguarded, "RI-unguarded"},
    {Axiom::FirstArgAntitone, "first-arg-antitone"},
};

bool thresholded(Axiom a) { return a == Axiom::RV || a == Axiom::RI || a == Axiom::RIUnguarded; }

// For thresholded axioms an instance fails at δ exactly when lo < δ <= hi.
// Returns nothing when the set-level premises are not met.
std::optional<std::pair<Rational, Rational>> threshold_gap(const InclusionFn& k, Axiom ax, Mask a, Mask b, Mask c) {
  switch (ax) {
    case Axiom::RV:
      if (!is_subset(c, a) || !is_subset(a, b)) return std::nullopt;
      return std::pair{k(a, c), k(b, c)};
    case Axiom::RI:
      if (!is_subset(c, a & b)) return std::nullopt;
      return std::pair{k(a & b, c), std::min(k(a, c), k(b, c))};
    case Axiom::RIUnguarded:
      return std::pair{k(a & b, c), std::min(k(a, c), k(b, c))};
    default:
      return std::nullopt;
  }
}

bool plain_instance(const InclusionFn& k, Axiom ax, Mask a, Mask b, Mask c, Mask top) {
  const Rational one(1);
  const Rational zero(0);
  switch (ax) {
    case Axiom::U1:
      return k(a, a) == one;
    case Axiom::R0:
      return !is_subset(a, b) || k(a, b) == one;
    case Axiom::IR0:
      return k(a, b) != one || is_subset(a, b);
    case Axiom::R1:
      return (k(a, b) == one) == is_subset(a, b);
    case Axiom::R2:
      return k(b, c) != one || k(a, b) <= k(a, c);
    case Axiom::R3:
      return !is_subset(b, c) || k(a, b) <= k(a, c);
    case Axiom::R4:
      return k(a, b) != zero || (a & b) == 0;
    case Axiom::IR4:
      return (a & b) != 0 || a == 0 || k(a, b) == zero;
    case Axiom::R5:
      return a == 0 || ((k(a, b) == zero) == ((a & b) == 0));
    case Axiom::RB:
      return a == 0 || k(a, 0) == zero;
    case Axiom::R6:
      return a == 0 || (b | c) != top || k(a, b) + k(a, c) == one;
    case Axiom::FirstArgAntitone:
      return !is_subset(a, b) || k(b, c) <= k(a, c);
    default:
      return true;
  }
}

}  // namespace

std::string to_string(Axiom a) {
  for (const auto& n : kNames) {
    if (n.axiom == a) return n.name;
  }
  return "?";
}

int arity(Axiom a) {
  switch (a) {
    case Axiom::U1:
    case Axiom::RB:
      return 1;
    case Axiom::R0:
    case Axiom::IR0:
    case Axiom::R1:
    case Axiom::R4:
    case Axiom::IR4:
    case Axiom::R5:
      return 2;
    default:
      return 3;
  }
}

const std::vector<std::string>& axiom_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& n : kNames) v.emplace_back(n.name);
    return v;
  }();
  return names;
}

bool AxiomId::takes_delta() const { return thresholded(axiom); }

std::string AxiomId::name() const {
  std::string s = to_string(axiom);
  if (delta) s += "@" + delta->to_string();
  return s;
}

AxiomId AxiomId::parse(const std::string& text) {
  const auto at = text.find('@');
  const std::string head = text.substr(0, at);
  for (const auto& n : kNames) {
    if (head != n.name) continue;
    AxiomId id{n.axiom, std::nullopt};
    if (at != std::string::npos) {
      if (!id.takes_delta()) throw ParameterError("axiom " + head + " takes no threshold");
      id.delta = Rational::parse(text.substr(at + 1));
      if (*id.delta < Rational(0) || *id.delta > Rational(1)) {
        throw ParameterError("threshold for " + head + " must lie in [0, 1]");
      }
    }
    return id;
  }
  std::string valid;
  for (const auto& n : axiom_names()) valid += (valid.empty() ? "" : ", ") + n;
  throw ParameterError("unknown axiom '" + text + "'; valid identifiers: " + valid);
}

std::vector<Rational> delta_sweep(const InclusionFn& kappa) {
  std::set<Rational> values;
  for (int i = 0; i <= 10; ++i) values.insert(Rational(i, 10));
  const auto n = static_cast<std::int64_t>(kappa.universe().size());
  for (std::int64_t q = 1; q <= n; ++q) {
    for (std::int64_t p = 0; p <= q; ++p) values.insert(Rational(p, q));
  }
  if (n <= 10) {
    const Mask total = Mask{1} << n;
    for (Mask a = 0; a < total; ++a) {
      for (Mask b = 0; b < total; ++b) {
        const Rational v = kappa(a, b);
        if (v >= Rational(0) && v <= Rational(1)) values.insert(v);
      }
    }
  }
  return {values.begin(), values.end()};
}

bool axiom_instance_holds(const InclusionFn& kappa, const AxiomId& axiom, Mask a, Mask b, Mask c) {
  if (!thresholded(axiom.axiom)) return plain_instance(kappa, axiom.axiom, a, b, c, kappa.universe().full());
  if (!axiom.delta) throw ParameterError(to_string(axiom.axiom) + " needs a threshold");
  const auto gap = threshold_gap(kappa, axiom.axiom, a, b, c);
  return !gap || !(gap->first < *axiom.delta && *axiom.delta <= gap->second);
}

CheckReport check_axiom(const InclusionFn& kappa_in, const AxiomId& axiom, const CheckOptions& opts) {
  const InclusionFn kappa = kappa_in.tabulated();
  const std::size_t n = kappa.universe().size();
  const Mask top = kappa.universe().full();
  const Axiom ax = axiom.axiom;
  const std::string name = to_string(ax);
  CheckReport report;

  if (!thresholded(ax)) {
    auto pred = [&](Mask a, Mask b, Mask c) { return plain_instance(kappa, ax, a, b, c, top); };
    switch (arity(ax)) {
      case 1:
        report = check_forall<1>(name, n, {"a"}, [&](Mask a) { return pred(a, 0, 0); }, opts);
        break;
      case 2:
        report = check_forall<2>(name, n, {"a", "b"}, [&](Mask a, Mask b) { return pred(a, b, 0); }, opts);
        break;
      default:
        report = check_forall<3>(name, n, {"a", "b", "c"}, pred, opts);
    }
  } else if (axiom.delta) {
    report = check_forall<3>(
        name, n, {"a", "b", "c"}, [&](Mask a, Mask b, Mask c) { return axiom_instance_holds(kappa, axiom, a, b, c); },
        opts);
    report.parameters["delta"] = axiom.delta->to_string();
  } else {
    const std::vector<Rational> sweep = delta_sweep(kappa);
    // Smallest swept δ violated by the tuple, if any.
    auto first_violation = [&](Mask a, Mask b, Mask c) -> std::optional<Rational> {
      const auto gap = threshold_gap(kappa, ax, a, b, c);
      if (!gap) return std::nullopt;
      const auto it = std::upper_bound(sweep.begin(), sweep.end(), gap->first);
      if (it == sweep.end() || !(*it <= gap->second)) return std::nullopt;
      return *it;
    };
    report = check_forall<3>(
        name, n, {"a", "b", "c"}, [&](Mask a, Mask b, Mask c) { return !first_violation(a, b, c); }, opts);
    for (auto& w : report.witnesses) {
      const auto d =
          first_violation(std::get<Mask>(w[0].value), std::get<Mask>(w[1].value), std::get<Mask>(w[2].value));
      w.push_back(Binding{"delta", *d});
    }
    report.parameters["delta"] = "sweep(" + std::to_string(sweep.size()) + ")";
  }
  report.parameters["kappa"] = kappa.name();
  return report;
}

std::vector<std::string> RifClassification::tags() const {
  std::vector<std::string> out;
  if (grif) out.emplace_back("gRIF");
  if (qrif) out.emplace_back("qRIF");
  if (wqrif) out.emplace_back("wqRIF");
  if (prif) out.emplace_back("pRIF");
  return out;
}

RifClassification classify_rif(const InclusionFn& kappa_in, const CheckOptions& opts) {
  const InclusionFn kappa = kappa_in.tabulated();
  RifClassification c;
  for (Axiom a : {Axiom::R0, Axiom::R1, Axiom::R2, Axiom::R3, Axiom::RV}) {
    c.evidence.push_back(check_axiom(kappa, AxiomId{a, std::nullopt}, opts));
  }
  const bool r0 = c.evidence[0].holds;
  const bool r1 = c.evidence[1].holds;
  const bool r2 = c.evidence[2].holds;
  const bool r3 = c.evidence[3].holds;
  const bool rv = c.evidence[4].holds;
  c.grif = r1 && r2;
  c.qrif = r0 && r2;
  c.wqrif = r0 && r3;
  c.prif = r0 && rv;
  return c;
}

std::vector<CheckReport> check_prif_implications(const std::vector<InclusionFn>& family, const CheckOptions& opts) {
  using Verdicts = std::map<Axiom, bool>;
  struct Implication {
    const char* name;
    std::function<bool(const Verdicts&)> premise;
    std::function<bool(const Verdicts&)> conclusion;
  };
  auto v = [](Axiom a) { return [a](const Verdicts& m) { return m.at(a); }; };
  const std::vector<Implication> implications = {
      {"prif1", v(Axiom::R1), [](const Verdicts& m) { return m.at(Axiom::R2) == m.at(Axiom::R3); }},
      {"prif2.forward", v(Axiom::R1), [](const Verdicts& m) { return m.at(Axiom::R0) && m.at(Axiom::IR0); }},
      {"prif2.backward", [](const Verdicts& m) { return m.at(Axiom::R0) && m.at(Axiom::IR0); }, v(Axiom::R1)},
      {"prif3", [](const Verdicts& m) { return m.at(Axiom::R0) && m.at(Axiom::R2); }, v(Axiom::R3)},
      {"prif4", [](const Verdicts& m) { return m.at(Axiom::IR0) && m.at(Axiom::R3); }, v(Axiom::R2)},
      {"prif5", v(Axiom::IR4), v(Axiom::RB)},
      {"prif6.forward", [](const Verdicts& m) { return m.at(Axiom::IR4) && m.at(Axiom::R4); }, v(Axiom::R5)},
      {"prif6.backward", v(Axiom::R5), [](const Verdicts& m) { return m.at(Axiom::IR4) && m.at(Axiom::R4); }},
      {"prif7", [](const Verdicts& m) { return m.at(Axiom::R0) && m.at(Axiom::R6); }, v(Axiom::IR4)},
      {"prif8", [](const Verdicts& m) { return m.at(Axiom::IR0) && m.at(Axiom::R6); }, v(Axiom::R4)},
      {"prif9", [](const Verdicts& m) { return m.at(Axiom::R1) && m.at(Axiom::R6); }, v(Axiom::R5)},
      {"R1->U1", v(Axiom::R1), v(Axiom::U1)},
      {"R0->U1", v(Axiom::R0), v(Axiom::U1)},
  };

  std::vector<Verdicts> verdicts;
  for (const auto& k : family) {
    const InclusionFn kt = k.tabulated();
    Verdicts m;
    for (Axiom a : {Axiom::U1, Axiom::R0, Axiom::IR0, Axiom::R1, Axiom::R2, Axiom::R3, Axiom::R4, Axiom::IR4, Axiom::R5,
                    Axiom::RB, Axiom::R6}) {
      m[a] = check_axiom(kt, AxiomId{a, std::nullopt}, opts).holds;
    }
    verdicts.push_back(std::move(m));
  }

  std::vector<CheckReport> out;
  for (const auto& imp : implications) {
    CheckReport r;
    r.name = imp.name;
    std::string engaged;
    for (std::size_t i = 0; i < family.size(); ++i) {
      r.universe_size = std::max(r.universe_size, family[i].universe().size());
      if (!imp.premise(verdicts[i])) continue;
      engaged += (engaged.empty() ? "" : ",") + family[i].name();
      if (!imp.conclusion(verdicts[i])) r.add_violation({Binding{"kappa", family[i].name()}}, opts.max_witnesses);
    }
    r.note = engaged.empty() ? "vacuous: premise fails for every kappa" : "premise holds for " + engaged;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace granrough
