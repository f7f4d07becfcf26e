#include "granrough/spec_io.hpp"

#include <algorithm>
#include <fstream>

#include "granrough/approx.hpp"
#include "granrough/rif_axioms.hpp"

namespace granrough {

namespace {

std::string where(const JsonPointer& at) { return at.empty() ? std::string("/") : at.to_string(); }

[[noreturn]] void fail(const JsonPointer& at, const std::string& msg) { throw SpecError(where(at), msg); }

std::string expect_string(const Json& v, const JsonPointer& at) {
  if (!v.is_string()) fail(at, "expected a string");
  return v.get<std::string>();
}

ApproxSide parse_side(const Json& v, const JsonPointer& at) {
  const std::string s = expect_string(v, at);
  if (s == "l") return ApproxSide::Lower;
  if (s == "u") return ApproxSide::Upper;
  fail(at, "expected \"l\" or \"u\", got \"" + s + "\"");
}

}  // namespace

void require_known_keys(const Json& obj, const JsonPointer& at, const std::vector<std::string>& allowed) {
  if (!obj.is_object()) fail(at, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      std::string list;
      for (const auto& a : allowed) list += (list.empty() ? "" : ", ") + a;
      fail(at / key, "unknown field (allowed: " + list + ")");
    }
  }
}

const Json& require_field(const Json& obj, const JsonPointer& at, const std::string& key) {
  if (!obj.is_object()) fail(at, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) fail(at / key, "missing required field");
  return *it;
}

Rational parse_rational(const Json& v, const JsonPointer& at) {
  try {
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    if (v.is_number_float()) return Rational::from_double(v.get<double>());
    if (v.is_string()) return Rational::parse(v.get<std::string>());
  } catch (const Error& e) {
    fail(at, e.what());
  }
  fail(at, "expected a number or a fraction string such as \"3/10\"");
}

int parse_int(const Json& v, const JsonPointer& at) {
  if (!v.is_number_integer()) fail(at, "expected an integer");
  const auto x = v.get<std::int64_t>();
  if (x < 0 || x > 1'000'000) fail(at, "integer out of range");
  return static_cast<int>(x);
}

Universe parse_universe(const Json& v, const JsonPointer& at) {
  if (!v.is_array()) fail(at, "expected an array of element labels");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < v.size(); ++i) labels.push_back(expect_string(v[i], at / i));
  try {
    return Universe(labels, ElementOrder::AsGiven);
  } catch (const Error& e) {
    fail(at, e.what());
  }
}

Mask parse_set(const Json& v, const Universe& u, const JsonPointer& at) {
  if (!v.is_array()) fail(at, "expected an array of element labels");
  Mask m = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string l = expect_string(v[i], at / i);
    const auto idx = u.find(l);
    if (!idx) fail(at / i, "'" + l + "' is not an element of the universe");
    m |= Mask{1} << *idx;
  }
  return m;
}

Granulation parse_granulation(const Json& spec, const Universe& u, const JsonPointer& at) {
  require_known_keys(spec, at, {"granules", "relation"});
  const bool has_g = spec.contains("granules");
  const bool has_r = spec.contains("relation");
  if (has_g == has_r) fail(at, "give exactly one of \"granules\" or \"relation\"");
  if (has_g) {
    const Json& gs = spec["granules"];
    const auto gat = at / "granules";
    if (!gs.is_array()) fail(gat, "expected an array of granules");
    std::vector<Mask> masks;
    for (std::size_t i = 0; i < gs.size(); ++i) masks.push_back(parse_set(gs[i], u, gat / i));
    try {
      return Granulation(u, masks);
    } catch (const Error& e) {
      fail(gat, e.what());
    }
  }
  const Json& r = spec["relation"];
  const auto rat = at / "relation";
  require_known_keys(r, rat, {"pairs", "closure", "neighborhoods"});
  RelationSpec rs;
  const Json& pairs = require_field(r, rat, "pairs");
  if (!pairs.is_array()) fail(rat / "pairs", "expected an array of [a, b] pairs");
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto pat = rat / "pairs" / i;
    if (!pairs[i].is_array() || pairs[i].size() != 2) fail(pat, "expected a pair [a, b]");
    const std::string a = expect_string(pairs[i][0], pat / 0);
    const std::string b = expect_string(pairs[i][1], pat / 1);
    if (!u.find(a)) fail(pat / 0, "'" + a + "' is not an element of the universe");
    if (!u.find(b)) fail(pat / 1, "'" + b + "' is not an element of the universe");
    rs.pairs.emplace_back(a, b);
  }
  if (r.contains("closure")) {
    try {
      rs.closure = parse_closure(expect_string(r["closure"], rat / "closure"));
    } catch (const SpecError&) {
      throw;
    } catch (const Error& e) {
      fail(rat / "closure", e.what());
    }
  }
  NeighborhoodMode mode = NeighborhoodMode::Predecessor;
  if (r.contains("neighborhoods")) {
    const std::string m = expect_string(r["neighborhoods"], rat / "neighborhoods");
    if (m == "successor") {
      mode = NeighborhoodMode::Successor;
    } else if (m != "predecessor") {
      fail(rat / "neighborhoods", "expected \"predecessor\" or \"successor\"");
    }
  }
  return build_neighborhood_granulation(u, rs, mode);
}

InclusionFn parse_kappa(const Json& v, const Granulation& g, const JsonPointer& at) {
  const Universe& u = g.universe();
  std::string tag;
  if (v.is_string()) {
    tag = v.get<std::string>();
    if (tag != "K0" && tag != "K1" && tag != "K2") fail(at, "unknown kappa \"" + tag + "\" (K0, K1, K2, or an object)");
  } else {
    if (!v.is_object()) fail(at, "expected a kappa name or descriptor object");
    tag = expect_string(require_field(v, at, "tag"), at / "tag");
  }
  if (tag == "K0" || tag == "K1" || tag == "K2") {
    if (v.is_object()) require_known_keys(v, at, {"tag"});
    return tag == "K0" ? InclusionFn::k0(u) : tag == "K1" ? InclusionFn::k1(u) : InclusionFn::k2(u);
  }
  if (tag == "Kst") {
    require_known_keys(v, at, {"tag", "s", "t", "base"});
    const Rational s = parse_rational(require_field(v, at, "s"), at / "s");
    const Rational t = parse_rational(require_field(v, at, "t"), at / "t");
    const InclusionFn base = v.contains("base") ? parse_kappa(v["base"], g, at / "base") : InclusionFn::k0(u);
    try {
      return InclusionFn::kst(s, t, base);
    } catch (const Error& e) {
      fail(at, e.what());
    }
  }
  if (tag == "bGRIF" || tag == "cGRIF") {
    require_known_keys(v, at, {"tag", "sigma", "pi"});
    const ApproxSide sigma = parse_side(require_field(v, at, "sigma"), at / "sigma");
    const ApproxSide pi = parse_side(require_field(v, at, "pi"), at / "pi");
    const auto ops = make_operators(ApproxSpec{ApproxFamily::Classical}, g);
    return tag == "bGRIF" ? InclusionFn::bgrif(sigma, pi, ops.lower, ops.upper)
                          : InclusionFn::cgrif(sigma, pi, ops.lower, ops.upper);
  }
  fail(at / "tag", "unknown kappa tag \"" + tag + "\" (K0, K1, K2, Kst, bGRIF, cGRIF)");
}

Json set_to_json(const Universe& u, Mask m) { return Json(u.labels_of(m)); }

namespace {

std::vector<std::string> string_list(const Json& v, const JsonPointer& at) {
  if (!v.is_array()) throw SpecError(at.to_string(), "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_string()) throw SpecError((at / i).to_string(), "expected a string");
    out.push_back(v[i].get<std::string>());
  }
  return out;
}

template <typename F>
void rethrow_at(const JsonPointer& at, F&& f) {
  try {
    f();
  } catch (const SpecError&) {
    throw;
  } catch (const Error& e) {
    throw SpecError(at.empty() ? "/" : at.to_string(), e.what());
  }
}

}  // namespace

ProblemSpec parse_problem(const Json& doc) {
  const JsonPointer root;
  require_known_keys(doc, root,
                     {"name", "description", "universe", "granulation", "kappa", "alpha", "k", "parthood", "operators",
                      "axioms", "rational", "subsets"});
  const Universe u = parse_universe(require_field(doc, root, "universe"), root / "universe");
  const Granulation g = parse_granulation(require_field(doc, root, "granulation"), u, root / "granulation");
  const InclusionFn kappa = doc.contains("kappa") ? parse_kappa(doc["kappa"], g, root / "kappa") : InclusionFn::k0(u);
  std::optional<Rational> alpha;
  if (doc.contains("alpha")) {
    alpha = parse_rational(doc["alpha"], root / "alpha");
    rethrow_at(root / "alpha", [&] { require_alpha(*alpha); });
  }
  std::optional<int> k;
  if (doc.contains("k")) k = parse_int(doc["k"], root / "k");

  ProblemSpec spec{doc.contains("name") ? expect_string(doc["name"], root / "name") : std::string(),
                   g,
                   kappa,
                   alpha,
                   k,
                   std::nullopt,
                   {},
                   {},
                   std::nullopt,
                   {}};

  if (doc.contains("parthood")) {
    const auto at = root / "parthood";
    const Json& p = doc["parthood"];
    require_known_keys(p, at, {"tag", "kappa", "alpha", "k", "t"});
    ParthoodSpec ps;
    rethrow_at(at / "tag",
               [&] { ps.tag = parse_parthood_tag(expect_string(require_field(p, at, "tag"), at / "tag")); });
    ps.params.kappa = p.contains("kappa") ? parse_kappa(p["kappa"], g, at / "kappa") : kappa;
    ps.params.alpha = p.contains("alpha") ? std::optional<Rational>(parse_rational(p["alpha"], at / "alpha")) : alpha;
    ps.params.k = p.contains("k") ? std::optional<int>(parse_int(p["k"], at / "k")) : k;
    if (p.contains("t")) {
      if (!p["t"].is_array()) throw SpecError((at / "t").to_string(), "expected an array of granules");
      for (std::size_t i = 0; i < p["t"].size(); ++i) ps.params.t.push_back(parse_set(p["t"][i], u, at / "t" / i));
    }
    rethrow_at(at, [&] { (void)build_parthood(ps.tag, g, ps.params); });
    spec.parthood = std::move(ps);
  }

  const ApproxSpec params{ApproxFamily::Classical, kappa, alpha, k, std::nullopt};
  if (doc.contains("operators")) {
    spec.operators = string_list(doc["operators"], root / "operators");
    for (std::size_t i = 0; i < spec.operators.size(); ++i) {
      rethrow_at(root / "operators" / i, [&] { (void)make_operator(spec.operators[i], params, g); });
    }
  }
  if (doc.contains("axioms")) {
    spec.axioms = string_list(doc["axioms"], root / "axioms");
    for (std::size_t i = 0; i < spec.axioms.size(); ++i) {
      rethrow_at(root / "axioms" / i, [&] { (void)AxiomId::parse(spec.axioms[i]); });
    }
  }
  if (doc.contains("rational")) {
    const auto at = root / "rational";
    const Json& r = doc["rational"];
    require_known_keys(r, at, {"lower", "upper", "strategy"});
    RationalSpec rs;
    if (r.contains("lower")) rs.lower = expect_string(r["lower"], at / "lower");
    if (r.contains("upper")) rs.upper = expect_string(r["upper"], at / "upper");
    if (r.contains("strategy")) rs.strategy = expect_string(r["strategy"], at / "strategy");
    rethrow_at(at / "lower", [&] { (void)make_operator(rs.lower, params, g); });
    rethrow_at(at / "upper", [&] { (void)make_operator(rs.upper, params, g); });
    if (rs.strategy != "maximal-search" && rs.strategy != "self-witness") {
      fail(at / "strategy", "expected \"maximal-search\" or \"self-witness\"");
    }
    if (!spec.parthood) fail(at, "a rational approximation needs a \"parthood\" entry");
    spec.rational = rs;
  }
  if (doc.contains("subsets")) {
    const auto at = root / "subsets";
    const Json& ss = doc["subsets"];
    if (!ss.is_array()) fail(at, "expected an array of sets");
    for (std::size_t i = 0; i < ss.size(); ++i) {
      if (ss[i].is_object()) {
        require_known_keys(ss[i], at / i, {"label", "set"});
        const Mask m = parse_set(require_field(ss[i], at / i, "set"), u, at / i / "set");
        spec.subsets.push_back({expect_string(require_field(ss[i], at / i, "label"), at / i / "label"), m});
      } else {
        const Mask m = parse_set(ss[i], u, at / i);
        spec.subsets.push_back({u.format(m), m});
      }
    }
  }
  return spec;
}

ProblemSpec load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("/", "cannot open spec file '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SpecError("/", std::string("invalid JSON: ") + e.what());
  }
  return parse_problem(doc);
}

std::vector<NamedSet> subsets_of_interest(const ProblemSpec& spec) {
  if (!spec.subsets.empty()) return spec.subsets;
  const Universe& u = spec.universe();
  if (u.size() > kMaxEnumeratedUniverse) {
    throw SizeLimitError("the universe has " + std::to_string(u.size()) + " elements; the full powerset is only " +
                         "enumerated up to " + std::to_string(kMaxEnumeratedUniverse) +
                         ", so list the sets to evaluate under \"subsets\"");
  }
  std::vector<NamedSet> out;
  if (u.size() == 0) return out;
  for (Mask m : enumerate_subsets(u.size())) out.push_back({u.format(m), m});
  return out;
}

}  // namespace granrough
