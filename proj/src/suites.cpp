#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "granrough/approx.hpp"
#include "granrough/correspond.hpp"
#include "granrough/error.hpp"
#include "granrough/ggs.hpp"
#include "granrough/parallel.hpp"
#include "granrough/parthood.hpp"
#include "granrough/quantify.hpp"
#include "granrough/rational_approx.hpp"
#include "granrough/rif_axioms.hpp"
#include "granrough/verify.hpp"

namespace granrough {

namespace {

const std::string kK0 = "K0";
const std::string kKst = "Kst(1/5,4/5,K0)";

InclusionFn make_kappa(const std::string& name, const Universe& u) {
  const InclusionFn k0 = InclusionFn::k0(u);
  if (name == kK0) return k0;
  return InclusionFn::kst(Rational(1, 5), Rational(4, 5), k0);
}

Universe numbered(std::size_t n, const std::string& prefix = "e") {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(prefix + std::to_string(i));
  return Universe(labels, ElementOrder::AsGiven);
}

CheckOptions inner(const SuiteOptions& so) { return CheckOptions{{}, 1, so.max_witnesses}; }

CheckReport blank(const std::string& name, Severity sev = Severity::Hard) {
  CheckReport r;
  r.name = name;
  r.severity = sev;
  return r;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep = ",") {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : sep) + x;
  return out;
}

std::string join_rationals(const std::vector<Rational>& xs) {
  std::vector<std::string> s;
  for (const auto& x : xs) s.push_back(x.to_string());
  return join(s);
}

/// Masks become formatted strings so that witnesses from different universes can share a report.
void describe(CheckReport& r, const Universe& u, const Witness& prefix) {
  for (auto& w : r.witnesses) {
    Witness out = prefix;
    for (auto& b : w) {
      if (const Mask* m = std::get_if<Mask>(&b.value)) {
        out.push_back({b.name, u.format(*m)});
      } else {
        out.push_back(b);
      }
    }
    w = std::move(out);
  }
  if (r.universe_size == 0) r.universe_size = u.size();
}

/// Merges per-instance reports by name, keeping first-appearance order.
class Aggregator {
 public:
  explicit Aggregator(std::size_t cap) : cap_(cap) {}

  CheckReport& add(const CheckReport& part, const std::map<std::string, std::string>& params = {}) {
    auto it = std::find_if(out_.begin(), out_.end(), [&](const CheckReport& r) { return r.name == part.name; });
    if (it == out_.end()) {
      CheckReport fresh = blank(part.name, part.severity);
      fresh.parameters = params;
      fresh.note = part.note;
      out_.push_back(std::move(fresh));
      instances_.push_back(0);
      it = out_.end() - 1;
    }
    const auto idx = static_cast<std::size_t>(it - out_.begin());
    ++instances_[idx];
    it->universe_size = std::max(it->universe_size, part.universe_size);
    if (part.applicable) it->absorb(part, cap_);
    return *it;
  }

  std::vector<CheckReport> finish() {
    for (std::size_t i = 0; i < out_.size(); ++i) out_[i].parameters["instances"] = std::to_string(instances_[i]);
    return std::move(out_);
  }

 private:
  std::size_t cap_;
  std::vector<CheckReport> out_;
  std::vector<std::size_t> instances_;
};

// ---------------------------------------------------------------------------
// VPRS theorem grids

struct Hypotheses {
  bool wqrif = false;
  bool prif = false;
  bool r0 = false;
  bool rv = false;
  bool ri = false;
};

Hypotheses compute_hypotheses(const InclusionFn& kappa, const CheckOptions& o) {
  const auto c = classify_rif(kappa, o);
  Hypotheses h;
  h.wqrif = c.wqrif;
  h.prif = c.prif;
  h.r0 = c.evidence.at(0).holds;
  h.rv = c.evidence.at(4).holds;
  h.ri = check_axiom(kappa, AxiomId{Axiom::RI, std::nullopt}, o).holds;
  return h;
}

using HypKey = std::pair<std::size_t, std::string>;

std::map<HypKey, Hypotheses> hypotheses_for(const std::vector<BatteryCase>& cases,
                                            const std::vector<std::string>& kappas, const SuiteOptions& so) {
  std::vector<HypKey> keys;
  for (const auto& c : cases)
    for (const auto& k : kappas) {
      const HypKey key{c.granulation.universe().size(), k};
      if (std::find(keys.begin(), keys.end(), key) == keys.end()) keys.push_back(key);
    }
  const auto hs = parallel_map<Hypotheses>(keys.size(), so.threads, [&](std::size_t i) {
    return compute_hypotheses(make_kappa(keys[i].second, numbered(keys[i].first)), inner(so));
  });
  std::map<HypKey, Hypotheses> out;
  for (std::size_t i = 0; i < keys.size(); ++i) out[keys[i]] = hs[i];
  return out;
}

using GridEval = std::function<std::vector<CheckReport>(const Granulation&, const InclusionFn&, const Rational&,
                                                        const CheckOptions&)>;

struct GridSpec {
  std::vector<std::string> kappas = {kK0, kKst};
  std::vector<Rational> alphas = {Rational(1, 10), Rational(1, 5), Rational(3, 10), Rational(2, 5)};
  std::string hypothesis;
  std::function<bool(const Hypotheses&)> gate;
  GridEval eval;
};

/// Evaluates every (granulation, κ, α) instance and aggregates per (clause, κ).
/// Instances whose κ misses the hypotheses are aggregated separately as soft.
std::vector<CheckReport> run_grid(const std::vector<BatteryCase>& cases, const GridSpec& spec, const SuiteOptions& so) {
  const auto hyps = hypotheses_for(cases, spec.kappas, so);
  struct Inst {
    std::size_t c;
    std::size_t k;
    std::size_t a;
  };
  std::vector<Inst> insts;
  for (std::size_t c = 0; c < cases.size(); ++c)
    for (std::size_t k = 0; k < spec.kappas.size(); ++k)
      for (std::size_t a = 0; a < spec.alphas.size(); ++a) insts.push_back({c, k, a});

  const auto parts = parallel_map<std::vector<CheckReport>>(insts.size(), so.threads, [&](std::size_t i) {
    const auto& in = insts[i];
    const Granulation& g = cases[in.c].granulation;
    const InclusionFn kappa = make_kappa(spec.kappas[in.k], g.universe()).tabulated();
    auto reports = spec.eval(g, kappa, spec.alphas[in.a], inner(so));
    const Witness prefix = {
        {"granulation", cases[in.c].name}, {"kappa", spec.kappas[in.k]}, {"alpha", spec.alphas[in.a]}};
    for (auto& r : reports) describe(r, g.universe(), prefix);
    return reports;
  });

  std::vector<CheckReport> out;
  for (std::size_t k = 0; k < spec.kappas.size(); ++k) {
    for (const bool met : {true, false}) {
      Aggregator agg(so.max_witnesses);
      for (std::size_t i = 0; i < insts.size(); ++i) {
        if (insts[i].k != k) continue;
        const auto key = HypKey{cases[insts[i].c].granulation.universe().size(), spec.kappas[k]};
        if (spec.gate(hyps.at(key)) != met) continue;
        for (auto r : parts[i]) {
          r.severity = met ? Severity::Hard : Severity::Soft;
          agg.add(r, {{"kappa", spec.kappas[k]},
                      {"alphas", join_rationals(spec.alphas)},
                      {"hypothesis", spec.hypothesis + (met ? " (met)" : " (not met)")}});
        }
      }
      for (auto& r : agg.finish()) {
        if (!met) r.note = "hypothesis not met for this kappa; reported for information";
        out.push_back(std::move(r));
      }
    }
  }
  return out;
}

std::vector<CheckReport> eval_alpha(const Granulation& g, const InclusionFn& kappa, const Rational& alpha,
                                    const CheckOptions& o) {
  const ApproxSpec spec{ApproxFamily::Vprs, kappa, alpha};
  const SetOperator l = make_operator("l_alpha", spec, g).tabulated();
  const SetOperator u = make_operator("u_alpha", spec, g).tabulated();
  const std::size_t n = g.universe().size();
  std::vector<CheckReport> out;
  out.push_back(check_forall<2>(
      "lA-cmo", n, {"a", "b"},
      [&](Mask a, Mask b) { return !(is_subset(l(a), b) && is_subset(b, a)) || is_subset(l(a), l(b)); }, o));
  out.push_back(check_forall<2>(
      "uA-cmo", n, {"a", "b"},
      [&](Mask a, Mask b) { return !(is_subset(a, b) && is_subset(b, u(a))) || is_subset(u(a), u(b)); }, o));
  out.push_back(
      check_forall<2>("lA-capc", n, {"a", "b"}, [&](Mask a, Mask b) { return is_subset(l(a) & l(b), l(a & b)); }, o));
  out.push_back(check_forall<1>("lA-idem", n, {"a"}, [&](Mask a) { return l(a) == l(l(a)) && is_subset(l(a), a); }, o));
  out.push_back(check_forall<1>("luA", n, {"a"}, [&](Mask a) { return is_subset(l(a), u(a)); }, o));
  out.push_back(check_forall<1>("li", n, {"a"}, [&](Mask a) { return is_subset(l(a), a); }, o));
  return out;
}

std::vector<CheckReport> eval_ast(const Granulation& g, const InclusionFn& kappa, const Rational& alpha,
                                  const CheckOptions& o) {
  const ApproxSpec spec{ApproxFamily::Vprs, kappa, alpha};
  const SetOperator l = make_operator("l_alpha", spec, g).tabulated();
  const SetOperator u = make_operator("u_alpha", spec, g).tabulated();
  const SetOperator ls = make_operator("l_alpha*", spec, g).tabulated();
  const SetOperator us = make_operator("u_alpha*", spec, g).tabulated();
  const std::size_t n = g.universe().size();
  std::vector<CheckReport> out;
  out.push_back(check_forall<2>(
      "lA-cmo*", n, {"a", "b"},
      [&](Mask a, Mask b) { return !(is_subset(ls(a), b) && is_subset(b, a)) || is_subset(ls(a), ls(b)); }, o));
  out.push_back(check_forall<2>(
      "uA-cmo*", n, {"a", "b"},
      [&](Mask a, Mask b) { return !(is_subset(a, b) && is_subset(b, us(a))) || is_subset(us(a), us(b)); }, o));
  out.push_back(check_forall<1>("luA*", n, {"a"}, [&](Mask a) { return is_subset(ls(a), us(a)); }, o));
  out.push_back(
      check_forall<1>("luAA", n, {"a"}, [&](Mask a) { return is_subset(l(a), ls(a)) && is_subset(u(a), us(a)); }, o));
  return out;
}

std::vector<CheckReport> eval_riprop(const Granulation& g, const InclusionFn& kappa, const Rational& alpha,
                                     const CheckOptions& o) {
  const SetOperator l = make_operator("l_alpha", ApproxSpec{ApproxFamily::Vprs, kappa, alpha}, g).tabulated();
  return {check_forall<2>(
      "lARI-cap", g.universe().size(), {"a", "b"}, [&](Mask a, Mask b) { return is_subset(l(a) & l(b), l(a & b)); },
      o)};
}

std::vector<BatteryCase> theorem_battery(const Fixture& fx, const SuiteOptions& so) {
  return make_battery(&fx, so.seed, so.random_granulations, 3, 6);
}

SuiteResult suite_alpha(const Fixture& fx, const SuiteOptions& so) {
  GridSpec spec;
  spec.hypothesis = "wqRIF and RV";
  spec.gate = [](const Hypotheses& h) { return h.wqrif && h.rv; };
  spec.eval = eval_alpha;
  return {"vprs-theorem-alpha", run_grid(theorem_battery(fx, so), spec, so), std::nullopt};
}

SuiteResult suite_ast(const Fixture& fx, const SuiteOptions& so) {
  GridSpec spec;
  spec.hypothesis = "R0 and RV";
  spec.gate = [](const Hypotheses& h) { return h.r0 && h.rv; };
  spec.eval = eval_ast;
  return {"vprs-theorem-ast", run_grid(theorem_battery(fx, so), spec, so), std::nullopt};
}

SuiteResult suite_riprop(const Fixture& fx, const SuiteOptions& so) {
  GridSpec spec;
  spec.hypothesis = "R0 and RI";
  spec.gate = [](const Hypotheses& h) { return h.r0 && h.ri; };
  spec.eval = eval_riprop;
  return {"riprop", run_grid(theorem_battery(fx, so), spec, so), std::nullopt};
}

// ---------------------------------------------------------------------------
// Granular inclusion functions

SuiteResult suite_grif(const Fixture& fx, const SuiteOptions& so) {
  const auto cases = theorem_battery(fx, so);
  const auto parts = parallel_map<std::vector<CheckReport>>(cases.size(), so.threads, [&](std::size_t i) {
    const Granulation& g = cases[i].granulation;
    const std::size_t n = g.universe().size();
    const CheckOptions o = inner(so);
    const auto ops = make_operators(ApproxSpec{ApproxFamily::Classical}, g);
    const SetOperator l = ops.lower.tabulated();
    const SetOperator u = ops.upper.tabulated();
    using S = ApproxSide;
    const std::vector<std::pair<std::string, InclusionFn>> nus = {
        {"ll", InclusionFn::bgrif(S::Lower, S::Lower, l, u).tabulated()},
        {"lu", InclusionFn::bgrif(S::Lower, S::Upper, l, u).tabulated()},
        {"ul", InclusionFn::bgrif(S::Upper, S::Lower, l, u).tabulated()},
        {"uu", InclusionFn::bgrif(S::Upper, S::Upper, l, u).tabulated()}};
    const auto& ll = nus[0].second;
    const auto& lu = nus[1].second;
    const auto& ul = nus[2].second;
    const auto& uu = nus[3].second;
    const Mask top = g.universe().full();
    const Rational one(1);

    std::vector<CheckReport> out;
    out.push_back(check_forall<2>("ulu2", n, {"A", "B"}, [&](Mask a, Mask b) { return ul(a, b) <= uu(a, b); }, o));
    out.push_back(check_forall<2>("llu2", n, {"A", "B"}, [&](Mask a, Mask b) { return ll(a, b) <= lu(a, b); }, o));
    for (const auto& [tag, nu] : nus) {
      const InclusionFn& f = nu;
      out.push_back(check_forall<3>(
          "mo[" + tag + "]", n, {"A", "B", "E"},
          [&](Mask a, Mask b, Mask e) { return !is_proper_subset(b, e) || f(a, b) <= f(a, e); }, o));
    }
    out.push_back(check_forall<1>(
        "refl", n, {"A"}, [&](Mask a) { return lu(a, a) <= ll(a, a) && ll(a, a) == one && uu(a, a) == one; }, o));
    out.push_back(check_forall<1>(
        "bot", n, {"A"},
        [&](Mask a) {
          return std::all_of(nus.begin(), nus.end(), [&](const auto& p) { return p.second(0, a) == one; });
        },
        o));
    const bool top_fixed = l(top) == top && u(top) == top;
    out.push_back(check_forall<1>(
        "top", n, {"A"},
        [&](Mask a) {
          return !top_fixed ||
                 std::all_of(nus.begin(), nus.end(), [&](const auto& p) { return p.second(a, top) == one; });
        },
        o));
    out.push_back(check_forall<2>(
        "range", n, {"A", "B"},
        [&](Mask a, Mask b) {
          return std::all_of(nus.begin(), nus.end(), [&](const auto& p) {
            const Rational v = p.second(a, b);
            return Rational(0) <= v && v <= one;
          });
        },
        o));
    for (auto& r : out) describe(r, g.universe(), {{"granulation", cases[i].name}});
    return out;
  });
  Aggregator agg(so.max_witnesses);
  for (const auto& ps : parts)
    for (const auto& r : ps) agg.add(r, {{"operators", "classical l/u"}});
  return {"grif-theorem", agg.finish(), std::nullopt};
}

// ---------------------------------------------------------------------------
// Table diff

SuiteResult suite_table_diff(const Fixture& fx, const SuiteOptions&) {
  DiffReport d = diff_tables(fx);
  std::vector<CheckReport> reports;
  for (const auto& c : d.columns) {
    CheckReport r = blank(c.table + "/" + c.column + "/" + c.op, c.primary ? Severity::Hard : Severity::Soft);
    r.universe_size = fx.universe().size();
    r.parameters["operator"] = c.op;
    r.parameters["role"] = c.primary ? "primary" : "alternate";
    std::vector<std::string> known;
    for (const auto& cell : c.cells) {
      const bool counted = c.primary ? (!cell.match && !cell.known) || (cell.match && cell.known) : !cell.match;
      if (counted) {
        r.add_violation({{"row", cell.row},
                         {"engine", fx.universe().format(cell.engine)},
                         {"listed", fx.universe().format(cell.expected)},
                         {"status", cell.match ? std::string("stale-known") : std::string("mismatch")}},
                        fx.rows.size());
      }
      if (cell.known && !cell.match) known.push_back(cell.row);
    }
    r.note = std::to_string(c.matches) + "/" + std::to_string(c.cells.size()) + " cells match";
    if (!known.empty()) r.note += "; known transcription discrepancies at " + join(known);
    reports.push_back(std::move(r));
  }
  return {"table-diff", std::move(reports), std::move(d)};
}

// ---------------------------------------------------------------------------
// RIF axioms

SuiteResult suite_rif_axioms(const Fixture& fx, const SuiteOptions& so) {
  std::vector<CheckReport> reports;
  const CheckOptions o = inner(so);

  for (const Axiom ax : {Axiom::RV, Axiom::RI}) {
    const AxiomId id{ax, std::nullopt};
    const auto parts = parallel_map<CheckReport>(6, so.threads, [&](std::size_t i) {
      const Universe u = numbered(i + 1);
      CheckReport r = check_axiom(InclusionFn::k0(u), id, o);
      describe(r, u, {{"n", std::to_string(i + 1)}});
      return r;
    });
    CheckReport agg = blank("K0 " + id.name() + " (all swept delta, n=1..6)");
    agg.parameters["kappa"] = kK0;
    for (const auto& p : parts) {
      agg.absorb(p, so.max_witnesses);
      agg.universe_size = std::max(agg.universe_size, p.universe_size);
    }
    reports.push_back(std::move(agg));
  }

  {
    const Universe u = numbered(9, "");
    const InclusionFn k0 = InclusionFn::k0(u);
    const Mask a = u.mask_of({"1", "2", "3", "6"});
    const Mask b = u.mask_of({"3", "5", "7", "8", "9"});
    const Mask c = u.mask_of({"2", "5", "6"});
    const AxiomId id{Axiom::RIUnguarded, Rational(1, 5)};
    CheckReport r = blank("RI without premise: counterexample reproduces");
    r.universe_size = u.size();
    r.parameters["kappa"] = kK0;
    r.parameters["delta"] = "1/5";
    const bool violated = !axiom_instance_holds(k0, id, a, b, c);
    const bool guarded_ok = axiom_instance_holds(k0, AxiomId{Axiom::RI, Rational(1, 5)}, a, b, c);
    if (!violated || !guarded_ok) {
      r.add_violation({{"a", u.format(a)}, {"b", u.format(b)}, {"c", u.format(c)}}, so.max_witnesses);
    }
    r.note = "kappa(a,c)=" + k0(a, c).to_string() + ", kappa(b,c)=" + k0(b, c).to_string() +
             ", kappa(a∩b,c)=" + k0(a & b, c).to_string();
    reports.push_back(std::move(r));
  }

  {
    const Universe u = numbered(4);
    const InclusionFn k0 = InclusionFn::k0(u);
    for (const Rational& s : {Rational(0), Rational(1, 5), Rational(2, 5)}) {
      for (const Rational& t : {Rational(3, 5), Rational(4, 5), Rational(1)}) {
        const InclusionFn kst = InclusionFn::kst(s, t, k0);
        const auto c = classify_rif(kst, o);
        const bool want_q = t == Rational(1);
        CheckReport r = blank(std::string("classification of Kst(") + s.to_string() + "," + t.to_string() + ",K0)");
        r.universe_size = u.size();
        r.parameters["expected"] = want_q ? "qRIF" : "wqRIF";
        r.parameters["tags"] = join(c.tags());
        if (want_q ? !c.qrif : !c.wqrif) r.add_violation({{"tags", join(c.tags())}}, so.max_witnesses);
        reports.push_back(std::move(r));
      }
    }
  }

  {
    const Granulation& g = fx.granulation;
    const Universe& u = g.universe();
    const InclusionFn k0 = InclusionFn::k0(u);
    const auto ops = make_operators(ApproxSpec{ApproxFamily::Classical}, g);
    using S = ApproxSide;
    std::vector<InclusionFn> family = {k0,
                                       InclusionFn::k1(u),
                                       InclusionFn::k2(u),
                                       InclusionFn::kst(Rational(1, 5), Rational(4, 5), k0),
                                       InclusionFn::kst(Rational(1, 5), Rational(1), k0),
                                       InclusionFn::kst(Rational(0), Rational(1, 2), k0)};
    for (const S sigma : {S::Lower, S::Upper})
      for (const S pi : {S::Lower, S::Upper}) family.push_back(InclusionFn::bgrif(sigma, pi, ops.lower, ops.upper));
    CheckOptions po = o;
    po.threads = so.threads;
    for (auto r : check_prif_implications(family, po)) {
      describe(r, u, {});
      reports.push_back(std::move(r));
    }
  }
  return {"rif-axioms", std::move(reports), std::nullopt};
}

// ---------------------------------------------------------------------------
// Parthood

struct TagClaims {
  ParthoodTag tag;
  enum class Param { Alpha, K, T } param;
  std::vector<std::string> asserted;
  std::vector<std::string> fails_in_general;
  bool reflexive_iff_k = false;
};

const std::vector<TagClaims>& tag_claims() {
  using P = TagClaims::Param;
  static const std::vector<TagClaims> claims = {
      {ParthoodTag::S3,
       P::K,
       {"transitive", "antisymmetric", "sub2", "sub3", "sub4", "sub5", "sub6", "Asy-antisym"},
       {},
       true},
      {ParthoodTag::S5,
       P::Alpha,
       {"reflexive", "transitive", "sub1", "sub2", "sub3"},
       {"antisymmetric", "symmetric", "sub4", "sub5", "sub6"},
       false},
      {ParthoodTag::S6, P::K, {"transitive", "antisymmetric", "sub1", "sub2", "sub3", "sub4", "sub6"}, {"sub5"}, true},
      {ParthoodTag::S7, P::Alpha, {"sub1", "sub3"}, {"sub2", "sub4", "sub5", "sub6"}, false},
      {ParthoodTag::S9, P::Alpha, {"sub1", "sub3"}, {"sub2", "sub4", "sub5", "sub6"}, false},
      {ParthoodTag::S0l,
       P::Alpha,
       {"reflexive", "sub1", "sub3"},
       {"transitive", "antisymmetric", "symmetric", "sub2", "sub4", "sub5", "sub6"},
       false},
      {ParthoodTag::S0u, P::Alpha, {"reflexive", "sub1", "sub3"}, {"sub2", "sub4", "sub5", "sub6"}, false},
      {ParthoodTag::SStar, P::K, {}, {"transitive", "antisymmetric", "symmetric"}, true},
      {ParthoodTag::St, P::T, {"transitive", "antisymmetric"}, {}, false},
  };
  return claims;
}

const std::vector<Rational> kParthoodAlphas = {Rational(1, 5), Rational(3, 10)};
const std::vector<int> kParthoodKs = {1, 2};

struct ParthoodInstance {
  std::size_t c;
  std::size_t tag;
  std::size_t param;
};

/// Per-instance reports. Names "<tag>:<property>"; search reports carry the raw
/// property outcome and are inverted after aggregation.
std::vector<std::pair<bool, CheckReport>> eval_parthood(const BatteryCase& bc, const TagClaims& tc, std::size_t param,
                                                        const SuiteOptions& so) {
  const Granulation& g = bc.granulation;
  const Universe& u = g.universe();
  const std::size_t n = u.size();
  const CheckOptions o = inner(so);
  ParthoodParams pp;
  Witness prefix = {{"granulation", bc.name}};
  switch (tc.param) {
    case TagClaims::Param::Alpha:
      pp.kappa = InclusionFn::k0(u).tabulated();
      pp.alpha = kParthoodAlphas[param];
      prefix.push_back({"alpha", kParthoodAlphas[param]});
      break;
    case TagClaims::Param::K:
      pp.k = kParthoodKs[param];
      prefix.push_back({"k", std::to_string(kParthoodKs[param])});
      break;
    case TagClaims::Param::T:
      for (std::size_t i = 0; i < std::min<std::size_t>(2, g.size()); ++i) pp.t.push_back(g.granules()[i]);
      break;
  }
  const ParthoodRelation r = build_parthood(tc.tag, g, pp);
  const std::string tag = to_string(tc.tag);
  const auto props = property_reports(r, o);
  auto find = [&](const std::string& name) -> CheckReport {
    for (const auto& p : props)
      if (p.name == name) return p;
    throw Error("no property report named " + name);
  };

  std::vector<std::pair<bool, CheckReport>> out;
  for (const auto& name : tc.asserted) {
    CheckReport p = find(name);
    p.name = tag + ":" + name;
    p.severity = Severity::Hard;
    out.emplace_back(false, std::move(p));
  }
  for (const auto& name : tc.fails_in_general) {
    CheckReport p = find(name);
    p.name = tag + ":" + name;
    out.emplace_back(true, std::move(p));
  }
  if (tc.reflexive_iff_k) {
    const int k = *pp.k;
    out.emplace_back(
        false, check_forall<1>(
                   tag + ":reflexive iff #a > k", n, {"a"}, [&](Mask a) { return r.holds(a, a) == (card(a) > k); }, o));
  }
  if (tc.tag == ParthoodTag::S0u) {
    const SetOperator up = make_operator("u_alpha", ApproxSpec{ApproxFamily::Vprs, pp.kappa, pp.alpha}, g).tabulated();
    out.emplace_back(false,
                     check_forall<2>(
                         tag + ":weak antisymmetry", n, {"a", "b"},
                         [&](Mask a, Mask b) { return !(r.holds(a, b) && r.holds(b, a)) || up(a) == up(b); }, o));
    out.emplace_back(false, check_forall<1>(tag + ":bottom", n, {"b"}, [&](Mask b) { return r.holds(0, b); }, o));
  }
  if (tc.tag == ParthoodTag::S5) {
    ParthoodParams p7 = pp;
    const ParthoodRelation s7 = build_parthood(ParthoodTag::S7, g, p7);
    out.emplace_back(false, check_forall<2>(
                                "s5 = s7 (extensional)", n, {"a", "b"},
                                [&](Mask a, Mask b) { return r.holds(a, b) == s7.holds(a, b); }, o));
  }
  for (auto& [search, rep] : out) describe(rep, u, prefix);
  return out;
}

CheckReport invert_search(const CheckReport& agg) {
  CheckReport r = blank(agg.name + " fails somewhere", Severity::Soft);
  r.parameters = agg.parameters;
  r.universe_size = agg.universe_size;
  r.holds = !agg.holds;
  r.violation_count = agg.violation_count;
  r.witnesses = agg.witnesses;
  r.note = agg.holds ? "no counterexample found in the battery" : "counterexample found";
  return r;
}

SuiteResult suite_parthood(const Fixture& fx, const SuiteOptions& so) {
  const auto cases = make_battery(&fx, so.seed, std::min<std::size_t>(so.random_granulations, 10), 3, 5);
  const auto& claims = tag_claims();
  std::vector<ParthoodInstance> insts;
  for (std::size_t c = 0; c < cases.size(); ++c) {
    for (std::size_t t = 0; t < claims.size(); ++t) {
      const std::size_t count = claims[t].param == TagClaims::Param::Alpha ? kParthoodAlphas.size()
                                : claims[t].param == TagClaims::Param::K   ? kParthoodKs.size()
                                                                           : 1;
      for (std::size_t p = 0; p < count; ++p) insts.push_back({c, t, p});
    }
  }
  const auto parts = parallel_map<std::vector<std::pair<bool, CheckReport>>>(
      insts.size(), so.threads,
      [&](std::size_t i) { return eval_parthood(cases[insts[i].c], claims[insts[i].tag], insts[i].param, so); });

  Aggregator asserted(so.max_witnesses);
  Aggregator searched(so.max_witnesses);
  const std::map<std::string, std::string> params = {
      {"kappa", kK0}, {"alphas", join_rationals(kParthoodAlphas)}, {"ks", "1,2"}};
  for (const auto& ps : parts)
    for (const auto& [search, r] : ps) (search ? searched : asserted).add(r, params);

  std::vector<CheckReport> reports = asserted.finish();
  for (const auto& r : searched.finish()) reports.push_back(invert_search(r));

  const Universe& u = fx.universe();
  const std::size_t n = u.size();
  const CheckOptions o = inner(so);

  if (!fx.s3_pairs.empty()) {
    const auto s3 =
        build_parthood(ParthoodTag::S3, fx.granulation, ParthoodParams{std::nullopt, std::nullopt, fx.s3_k, {}});
    const auto got = s3.pairs();
    const std::set<std::pair<Mask, Mask>> engine(got.begin(), got.end());
    const std::set<std::pair<Mask, Mask>> listed(fx.s3_pairs.begin(), fx.s3_pairs.end());
    CheckReport r = blank("s3 listing (k=" + std::to_string(fx.s3_k) + ")");
    r.universe_size = n;
    for (const auto& p : engine)
      if (!listed.count(p)) r.add_violation({{"extra", fx.label_of(p.first) + "," + fx.label_of(p.second)}}, 64);
    for (const auto& p : listed)
      if (!engine.count(p)) r.add_violation({{"missing", fx.label_of(p.first) + "," + fx.label_of(p.second)}}, 64);
    r.note = std::to_string(engine.size()) + " engine pairs, " + std::to_string(listed.size()) + " listed";
    reports.push_back(std::move(r));
  }

  if (!fx.pu_classes.empty()) {
    const auto pu = build_pu(fx.granulation, fx.kappa, fx.alpha);
    std::set<std::set<Mask>> engine;
    std::set<std::set<Mask>> listed;
    for (const auto& c : pu.classes) engine.emplace(c.begin(), c.end());
    for (const auto& c : fx.pu_classes) listed.emplace(c.begin(), c.end());
    auto labels = [&](const std::set<Mask>& c) {
      std::vector<std::string> ls;
      for (Mask m : c) ls.push_back(fx.label_of(m));
      return "{" + join(ls) + "}";
    };
    CheckReport cls = blank("pu classes");
    cls.universe_size = n;
    for (const auto& c : engine)
      if (!listed.count(c)) cls.add_violation({{"engine-class", labels(c)}}, 16);
    for (const auto& c : listed)
      if (!engine.count(c)) cls.add_violation({{"listed-class", labels(c)}}, 16);
    reports.push_back(std::move(cls));

    const auto& h = fx.pu_classes;
    auto rule = [&](const std::string& name, const std::vector<Mask>& from, const std::vector<Mask>& to) {
      CheckReport r = blank("pu rule " + name);
      r.universe_size = n;
      for (Mask a : from)
        for (Mask b : to)
          if (!pu.relation.holds(a, b)) r.add_violation({{"a", fx.label_of(a)}, {"b", fx.label_of(b)}}, 8);
      reports.push_back(std::move(r));
    };
    std::vector<Mask> all_rows;
    for (const auto& c : h) all_rows.insert(all_rows.end(), c.begin(), c.end());
    CheckReport within = blank("pu rule 1pu");
    within.universe_size = n;
    for (const auto& c : h)
      for (Mask a : c)
        for (Mask b : c)
          if (!pu.relation.holds(a, b)) within.add_violation({{"a", fx.label_of(a)}, {"b", fx.label_of(b)}}, 8);
    reports.push_back(std::move(within));
    if (h.size() >= 4) {
      rule("2pu", h[0], all_rows);
      std::vector<Mask> h23 = h[1];
      h23.insert(h23.end(), h[2].begin(), h[2].end());
      rule("3pu", h23, h[3]);
    }
  }

  {
    const Universe big({"1", "2", "3", "4", "5", "6", "7", "8", "9", "12", "15", "20", "30"}, ElementOrder::AsGiven);
    const Granulation g(big, {big.full()});
    const auto ss = build_parthood(ParthoodTag::SStar, g, ParthoodParams{std::nullopt, std::nullopt, 4, {}});
    const Mask a = big.mask_of({"1", "2", "3", "4", "5", "6", "7", "8", "9"});
    const Mask b = big.mask_of({"20", "15", "1", "2", "3", "4", "5"});
    const Mask c = big.mask_of({"20", "12", "1", "2", "3", "30"});
    const Mask h = big.mask_of({"1", "2", "3", "4", "5"});
    CheckReport triple = blank("s* transitivity counterexample (k=4)");
    triple.universe_size = big.size();
    const bool ab = ss.holds(a, b);
    const bool bc = ss.holds(b, c);
    const bool ac = ss.holds(a, c);
    if (!(ab && bc && !ac)) {
      triple.add_violation({{"a", big.format(a)},
                            {"b", big.format(b)},
                            {"c", big.format(c)},
                            {"s*ab", std::string(ab ? "true" : "false")},
                            {"s*bc", std::string(bc ? "true" : "false")},
                            {"s*ac", std::string(ac ? "true" : "false")}},
                           so.max_witnesses);
    }
    triple.note = "#(a∩b)=" + std::to_string(card(a & b)) + ", #(b∩c)=" + std::to_string(card(b & c)) +
                  ", #(a∩c)=" + std::to_string(card(a & c));
    reports.push_back(std::move(triple));

    CheckReport asym = blank("s* asymmetry example: s*ah and not s*ha", Severity::Soft);
    asym.universe_size = big.size();
    const bool ah = ss.holds(a, h);
    const bool ha = ss.holds(h, a);
    if (!(ah && !ha)) {
      asym.add_violation({{"s*ah", std::string(ah ? "true" : "false")}, {"s*ha", std::string(ha ? "true" : "false")}},
                         so.max_witnesses);
    }
    asym.note = ah != ha ? "the pair is asymmetric, with the orientation " + std::string(ah ? "s*ah" : "s*ha")
                         : "the pair is not asymmetric";
    reports.push_back(std::move(asym));
  }

  {
    const auto ss =
        build_parthood(ParthoodTag::SStar, fx.granulation, ParthoodParams{std::nullopt, std::nullopt, 1, {}});
    bool star_not_subset = false;
    bool subset_not_star = false;
    for (Mask x = 0; x < (Mask{1} << n); ++x) {
      for (Mask y = 0; y < (Mask{1} << n); ++y) {
        star_not_subset |= ss.holds(x, y) && !is_subset(x, y);
        subset_not_star |= is_subset(x, y) && !ss.holds(x, y);
      }
    }
    CheckReport r = blank("s* (k=1) and inclusion are incomparable");
    r.universe_size = n;
    if (!star_not_subset) r.add_violation({{"missing", std::string("pair in s* but not in ⊆")}}, 2);
    if (!subset_not_star) r.add_violation({{"missing", std::string("pair in ⊆ but not in s*")}}, 2);
    reports.push_back(std::move(r));
  }
  (void)o;
  return {"parthood", std::move(reports), std::nullopt};
}

// ---------------------------------------------------------------------------
// Rational approximations

std::string upper_of(const std::string& lower_id) {
  std::string up = lower_id;
  if (!up.empty() && up[0] == 'l') up[0] = 'u';
  if (up == "u_k-strict") up = "u_k";
  return up;
}

SuiteResult suite_rational(const Fixture& fx, const SuiteOptions& so) {
  std::vector<CheckReport> reports;
  const Universe& u = fx.universe();
  const std::size_t n = u.size();
  const CheckOptions o = inner(so);
  const ApproxSpec spec{ApproxFamily::Vprs, fx.kappa, fx.alpha, fx.k};

  if (fx.rational) {
    const auto& rl = *fx.rational;
    ParthoodParams pp{fx.kappa, fx.alpha, fx.k, rl.t};
    const RationalSetting s(make_operator(rl.lower, spec, fx.granulation),
                            make_operator(upper_of(rl.lower), spec, fx.granulation),
                            build_parthood(parse_parthood_tag(rl.parthood), fx.granulation, pp));
    std::set<std::pair<Mask, Mask>> got;
    CheckReport reval = blank("rational revalidation on the worked example");
    reval.universe_size = n;
    for (Mask a : enumerate_subsets(n)) {
      for (const auto strategy : {RationalLowerStrategy::SelfWitness, RationalLowerStrategy::MaximalSearch}) {
        const auto r = rational_lower(a, s, strategy);
        if (strategy == RationalLowerStrategy::SelfWitness && r.defined) got.emplace(a, *r.value);
        if (!revalidate_lower(a, r, s, strategy)) {
          reval.add_violation({{"a", u.format(a)}, {"strategy", to_string(strategy)}}, so.max_witnesses);
        }
      }
      if (!revalidate_upper(a, rational_upper(a, s), s)) {
        reval.add_violation({{"a", u.format(a)}, {"side", std::string("upper")}}, so.max_witnesses);
      }
    }
    const std::set<std::pair<Mask, Mask>> listed(rl.defined.begin(), rl.defined.end());
    CheckReport listing = blank("rational lower listing (self-witness)");
    listing.universe_size = n;
    listing.parameters = {{"lower", rl.lower}, {"parthood", rl.parthood}};
    for (const auto& p : got)
      if (!listed.count(p)) listing.add_violation({{"extra", fx.label_of(p.first) + "->" + fx.label_of(p.second)}}, 16);
    for (const auto& p : listed)
      if (!got.count(p)) listing.add_violation({{"missing", fx.label_of(p.first) + "->" + fx.label_of(p.second)}}, 16);
    reports.push_back(std::move(listing));

    CheckReport clause = blank("listed values satisfy the lower definition's clause", Severity::Soft);
    clause.universe_size = n;
    for (const auto& [a, v] : rl.defined) {
      const auto r = rational_lower(a, s, RationalLowerStrategy::SelfWitness);
      if (!lower_clause_holds(a, r.witness.value_or(a), s)) {
        clause.add_violation({{"a", fx.label_of(a)}, {"value", fx.label_of(v)}}, 16);
      }
    }
    clause.note = "a listed value taken with b = a fails when a contains a definite set that is not a substantial part";
    reports.push_back(std::move(clause));
    reports.push_back(std::move(reval));

    for (const auto strategy : {RationalLowerStrategy::SelfWitness, RationalLowerStrategy::MaximalSearch}) {
      for (auto r : check_rational_proposition(s, strategy, o)) {
        describe(r, u, {});
        r.name = "proposition " + r.name + " [" + to_string(strategy) + "]";
        reports.push_back(std::move(r));
      }
    }
  }

  const auto cases = make_battery(&fx, so.seed, std::min<std::size_t>(so.random_granulations, 20), 3, 5);
  const auto parts = parallel_map<CheckReport>(cases.size(), so.threads, [&](std::size_t i) {
    const Granulation& g = cases[i].granulation;
    const Universe& cu = g.universe();
    const InclusionFn k0 = InclusionFn::k0(cu).tabulated();
    const ApproxSpec vs{ApproxFamily::Vprs, k0, Rational(3, 10)};
    ParthoodParams pp;
    for (std::size_t j = 0; j < std::min<std::size_t>(2, g.size()); ++j) pp.t.push_back(g.granules()[j]);
    const RationalSetting s(make_operator("l_alpha", vs, g), make_operator("u_alpha", vs, g),
                            build_parthood(ParthoodTag::St, g, pp));
    CheckReport r = blank("rational results revalidate");
    r.universe_size = cu.size();
    for (Mask a : enumerate_subsets(cu.size())) {
      for (const auto strategy : {RationalLowerStrategy::SelfWitness, RationalLowerStrategy::MaximalSearch}) {
        if (!revalidate_lower(a, rational_lower(a, s, strategy), s, strategy)) {
          r.add_violation({{"granulation", cases[i].name}, {"a", cu.format(a)}, {"strategy", to_string(strategy)}},
                          so.max_witnesses);
        }
      }
      if (!revalidate_upper(a, rational_upper(a, s), s)) {
        r.add_violation({{"granulation", cases[i].name}, {"a", cu.format(a)}, {"side", std::string("upper")}},
                        so.max_witnesses);
      }
    }
    return r;
  });
  Aggregator agg(so.max_witnesses);
  for (const auto& p : parts)
    agg.add(p, {{"lower", "l_alpha"}, {"upper", "u_alpha"}, {"parthood", "st"}, {"alpha", "3/10"}});
  for (auto& r : agg.finish()) reports.push_back(std::move(r));
  return {"rational", std::move(reports), std::nullopt};
}

// ---------------------------------------------------------------------------
// Correspondence

SuiteResult suite_correspond(const Fixture& fx, const SuiteOptions& so) {
  const auto cases = make_battery(&fx, so.seed, 20, 3, 6);
  const std::vector<Rational> alphas = {Rational(1, 5), Rational(3, 10), Rational(2, 5)};
  const auto parts =
      parallel_map<std::vector<CheckReport>>(cases.size() * alphas.size(), so.threads, [&](std::size_t i) {
        const auto& bc = cases[i / alphas.size()];
        const Rational& alpha = alphas[i % alphas.size()];
        const CheckOptions o = inner(so);
        auto up = build_upper_correspondence(bc.granulation, alpha, o);
        auto lo = build_lower_correspondence(bc.granulation, alpha, o);
        std::vector<CheckReport> out = {std::move(up.verification), std::move(lo.verification),
                                        std::move(lo.literal_agreement)};
        for (auto& r : out) {
          r.parameters.clear();
          describe(r, bc.granulation.universe(), {{"granulation", bc.name}, {"alpha", alpha}});
        }
        return out;
      });
  Aggregator agg(so.max_witnesses);
  for (const auto& ps : parts)
    for (const auto& r : ps) agg.add(r, {{"alphas", join_rationals(alphas)}, {"kappa", kK0}});
  std::vector<CheckReport> reports = agg.finish();

  const std::size_t n = fx.universe().size();
  CheckOptions all = inner(so);
  all.max_witnesses = std::size_t{1} << n;
  CheckReport nr = check_nonrepresentability(fx.granulation, 1, all);
  CheckReport singles = blank("singletons are non-representable (k=1)");
  singles.universe_size = n;
  for (std::size_t i = 0; i < n; ++i) {
    const Mask x = Mask{1} << i;
    const bool listed = std::any_of(nr.witnesses.begin(), nr.witnesses.end(),
                                    [&](const Witness& w) { return std::get<Mask>(w[0].value) == x; });
    if (!listed) singles.add_violation({{"x", fx.universe().format(x)}}, so.max_witnesses);
  }
  reports.push_back(std::move(singles));
  if (nr.witnesses.size() > so.max_witnesses) nr.witnesses.resize(so.max_witnesses);
  describe(nr, fx.universe(), {});
  reports.push_back(std::move(nr));
  return {"correspond", std::move(reports), std::nullopt};
}

// ---------------------------------------------------------------------------
// GGS axioms

SuiteResult suite_ggs(const Fixture& fx, const SuiteOptions& so) {
  const auto cases = make_battery(&fx, so.seed, std::min<std::size_t>(so.random_granulations, 10), 3, 5);
  const auto parts = parallel_map<std::vector<CheckReport>>(cases.size(), so.threads, [&](std::size_t i) {
    const Granulation& g = cases[i].granulation;
    const CheckOptions o = inner(so);
    std::vector<CheckReport> out;
    const auto classical = make_operators(ApproxSpec{ApproxFamily::Classical}, g);
    for (auto r : check_ggs_axioms(g, classical.lower.tabulated(), classical.upper.tabulated(), o)) {
      const bool hard = r.name.rfind("UL1", 0) == 0;
      r.severity = hard ? Severity::Hard : Severity::Soft;
      r.name = "classical " + r.name;
      out.push_back(std::move(r));
    }
    for (auto r : check_admissibility(g, classical.lower, classical.upper, o)) {
      r.severity = Severity::Soft;
      r.name = "classical " + r.name;
      out.push_back(std::move(r));
    }
    const auto vprs = make_operators(ApproxSpec{ApproxFamily::Vprs, InclusionFn::k0(g.universe()), Rational(3, 10)}, g);
    for (auto r : check_ggs_axioms(g, vprs.lower.tabulated(), vprs.upper.tabulated(), o)) {
      r.severity = r.name == "UL1.contract" ? Severity::Hard : Severity::Soft;
      r.name = "vprs(3/10) " + r.name;
      out.push_back(std::move(r));
    }
    for (auto& r : out) describe(r, g.universe(), {{"granulation", cases[i].name}});
    return out;
  });
  Aggregator agg(so.max_witnesses);
  for (const auto& ps : parts)
    for (const auto& r : ps) agg.add(r);
  return {"ggs", agg.finish(), std::nullopt};
}

using SuiteFn = SuiteResult (*)(const Fixture&, const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {{"vprs-theorem-alpha", suite_alpha},
                                                                 {"vprs-theorem-ast", suite_ast},
                                                                 {"riprop", suite_riprop},
                                                                 {"grif-theorem", suite_grif},
                                                                 {"table-diff", suite_table_diff},
                                                                 {"rif-axioms", suite_rif_axioms},
                                                                 {"parthood", suite_parthood},
                                                                 {"rational", suite_rational},
                                                                 {"correspond", suite_correspond},
                                                                 {"ggs", suite_ggs}};
  return r;
}

}  // namespace

bool SuiteResult::passed() const {
  const bool reports_ok =
      std::none_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.failed_hard(); });
  return reports_ok && (!diff || diff->ok());
}

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, fn] : registry()) out.push_back(id);
    return out;
  }();
  return ids;
}

std::vector<SuiteResult> run_suites(const std::string& id, const Fixture& fx, const SuiteOptions& opts) {
  std::vector<SuiteResult> out;
  for (const auto& [name, fn] : registry()) {
    if (id == "all" || id == name) out.push_back(fn(fx, opts));
  }
  if (out.empty()) throw ParameterError("unknown suite '" + id + "'; valid suites: all, " + join(suite_ids(), ", "));
  return out;
}

}  // namespace granrough
