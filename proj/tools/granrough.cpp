#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "granrough/approx.hpp"
#include "granrough/correspond.hpp"
#include "granrough/error.hpp"
#include "granrough/parthood.hpp"
#include "granrough/rational_approx.hpp"
#include "granrough/rif_axioms.hpp"
#include "granrough/spec_io.hpp"
#include "granrough/verify.hpp"

using namespace granrough;
using OJson = nlohmann::ordered_json;

namespace {

enum class Format { Csv, Json, Md };

struct Globals {
  std::string spec;
  std::string out;
  Format format = Format::Json;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

/// Raised when a computed result contains a failed hard assertion.
struct AssertionFailure {
  std::string text;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string md_cell(const std::string& s) {
  std::string out;
  for (char c : s) out += c == '|' ? std::string("\\|") : std::string(1, c);
  return out;
}

OJson labels(const Universe& u, Mask m) { return OJson(u.labels_of(m)); }

std::string witness_text(const Witness& w, const Universe& u) {
  std::string out;
  for (const auto& b : w) out += (out.empty() ? "" : ", ") + b.name + "=" + format_binding(b, u);
  return out;
}

OJson witness_json(const Witness& w, const Universe& u) {
  OJson j = OJson::array();
  for (const auto& b : w) j.push_back(OJson::array({b.name, format_binding(b, u)}));
  return j;
}

OJson report_json(const CheckReport& r, const Universe& u) {
  OJson j;
  j["name"] = r.name;
  j["holds"] = r.holds;
  j["applicable"] = r.applicable;
  j["severity"] = r.severity == Severity::Hard ? "hard" : "soft";
  j["violation_count"] = r.violation_count;
  if (!r.note.empty()) j["note"] = r.note;
  OJson ws = OJson::array();
  for (const auto& w : r.witnesses) ws.push_back(witness_json(w, u));
  j["witnesses"] = ws;
  return j;
}

std::string dump(const OJson& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------

std::string cmd_approx(const ProblemSpec& spec, std::vector<std::string> ops, Format fmt) {
  if (ops.empty()) ops = spec.operators;
  if (ops.empty()) ops = {"l", "u"};
  const ApproxSpec params{ApproxFamily::Classical, spec.kappa, spec.alpha, spec.k, std::nullopt};
  std::vector<SetOperator> fns;
  for (const auto& id : ops) fns.push_back(make_operator(id, params, spec.granulation));
  const auto rows = subsets_of_interest(spec);
  const Universe& u = spec.universe();

  std::ostringstream os;
  if (fmt == Format::Json) {
    OJson j;
    j["columns"] = ops;
    OJson jr = OJson::array();
    for (const auto& r : rows) {
      OJson row;
      row["label"] = r.label;
      row["set"] = labels(u, r.set);
      OJson vals;
      for (std::size_t i = 0; i < ops.size(); ++i) vals[ops[i]] = labels(u, fns[i](r.set));
      row["values"] = vals;
      jr.push_back(row);
    }
    j["rows"] = jr;
    return dump(j);
  }
  if (fmt == Format::Csv) {
    os << "set";
    for (const auto& id : ops) os << "," << csv_field(id);
    os << "\n";
    for (const auto& r : rows) {
      os << csv_field(r.label);
      for (const auto& f : fns) os << "," << csv_field(u.format(f(r.set)));
      os << "\n";
    }
    return os.str();
  }
  os << "| Set |";
  for (const auto& id : ops) os << " a^" << md_cell(id) << " |";
  os << "\n|---|";
  for (std::size_t i = 0; i < ops.size(); ++i) os << "---|";
  os << "\n";
  for (const auto& r : rows) {
    os << "| " << md_cell(r.label) << " |";
    for (const auto& f : fns) os << " " << md_cell(u.format(f(r.set))) << " |";
    os << "\n";
  }
  return os.str();
}

std::string cmd_axioms(const ProblemSpec& spec, std::vector<std::string> names, Format fmt, unsigned threads) {
  if (names.empty()) names = spec.axioms;
  if (names.empty()) names = axiom_names();
  std::vector<AxiomId> ids;
  for (const auto& n : names) ids.push_back(AxiomId::parse(n));
  const CheckOptions opts{{}, threads, 8};
  const InclusionFn kappa = spec.kappa.tabulated();
  std::vector<CheckReport> reports;
  for (const auto& id : ids) reports.push_back(check_axiom(kappa, id, opts));
  const auto cls = classify_rif(kappa, opts);
  const Universe& u = spec.universe();

  if (fmt == Format::Json) {
    OJson j;
    j["kappa"] = kappa.name();
    j["universe_size"] = u.size();
    j["classification"] = cls.tags();
    OJson rs = OJson::array();
    for (const auto& r : reports) rs.push_back(report_json(r, u));
    j["axioms"] = rs;
    return dump(j);
  }
  std::ostringstream os;
  if (fmt == Format::Csv) {
    os << "axiom,holds,violations,first_witness\n";
    for (const auto& r : reports) {
      os << csv_field(r.name) << "," << (r.holds ? "true" : "false") << "," << r.violation_count << ","
         << csv_field(r.witnesses.empty() ? "" : witness_text(r.witnesses.front(), u)) << "\n";
    }
    return os.str();
  }
  os << "kappa: " << kappa.name() << "; classification: ";
  const auto tags = cls.tags();
  for (std::size_t i = 0; i < tags.size(); ++i) os << (i ? ", " : "") << tags[i];
  os << (tags.empty() ? "none" : "") << "\n\n| axiom | holds | violations | first witness |\n|---|---|---|---|\n";
  for (const auto& r : reports) {
    os << "| " << md_cell(r.name) << " | " << (r.holds ? "yes" : "no") << " | " << r.violation_count << " | "
       << md_cell(r.witnesses.empty() ? "" : witness_text(r.witnesses.front(), u)) << " |\n";
  }
  return os.str();
}

ParthoodRelation spec_parthood(const ProblemSpec& spec) {
  if (!spec.parthood) throw SpecError("/parthood", "missing required field");
  return build_parthood(spec.parthood->tag, spec.granulation, spec.parthood->params);
}

std::string cmd_parthood(const ProblemSpec& spec, Format fmt, unsigned threads) {
  const ParthoodRelation r = spec_parthood(spec);
  const Universe& u = spec.universe();
  if (u.size() > kMaxEnumeratedUniverse) {
    throw SizeLimitError("parthood extensions are enumerated up to " + std::to_string(kMaxEnumeratedUniverse) +
                         " elements");
  }
  const auto pairs = r.pairs();
  if (fmt == Format::Csv) {
    std::ostringstream os;
    os << "a,b\n";
    for (const auto& [a, b] : pairs) os << csv_field(u.format(a)) << "," << csv_field(u.format(b)) << "\n";
    return os.str();
  }
  const auto profile = analyze_properties(r, CheckOptions{{}, threads, 8});
  std::optional<PuResult> pu;
  if (r.tag() == ParthoodTag::Pu) {
    pu = build_pu(spec.granulation, *spec.parthood->params.kappa, *spec.parthood->params.alpha);
  }
  if (fmt == Format::Json) {
    OJson j;
    j["parthood"] = r.name();
    j["count"] = pairs.size();
    OJson jp = OJson::array();
    for (const auto& [a, b] : pairs) jp.push_back(OJson::array({labels(u, a), labels(u, b)}));
    j["pairs"] = jp;
    OJson prof = OJson::array();
    for (const auto& [name, v] : profile.entries) {
      OJson e;
      e["property"] = name;
      e["state"] = to_string(v.state);
      if (!v.condition.empty()) e["condition"] = v.condition;
      e["violations"] = v.violations;
      if (!v.witness.empty()) e["witness"] = witness_json(v.witness, u);
      prof.push_back(e);
    }
    j["profile"] = prof;
    if (pu) {
      OJson cls = OJson::array();
      for (const auto& c : pu->classes) {
        OJson jc = OJson::array();
        for (Mask m : c) jc.push_back(labels(u, m));
        cls.push_back(jc);
      }
      j["classes"] = cls;
    }
    return dump(j);
  }
  std::ostringstream os;
  os << "parthood: " << r.name() << "; " << pairs.size() << " related pairs\n\n";
  os << "| property | verdict | violations | witness |\n|---|---|---|---|\n";
  for (const auto& [name, v] : profile.entries) {
    std::string verdict = to_string(v.state);
    if (!v.condition.empty()) verdict += " (" + v.condition + ")";
    os << "| " << name << " | " << md_cell(verdict) << " | " << v.violations << " | "
       << md_cell(witness_text(v.witness, u)) << " |\n";
  }
  if (pu) {
    os << "\nclasses:\n";
    for (const auto& c : pu->classes) {
      os << "-";
      for (Mask m : c) os << " " << u.format(m);
      os << "\n";
    }
  }
  return os.str();
}

std::string cmd_rational(const ProblemSpec& spec, Format fmt) {
  const RationalSpec rs = spec.rational.value_or(RationalSpec{});
  const ApproxSpec params{ApproxFamily::Classical, spec.kappa, spec.alpha, spec.k, std::nullopt};
  const RationalSetting s(make_operator(rs.lower, params, spec.granulation),
                          make_operator(rs.upper, params, spec.granulation), spec_parthood(spec));
  const auto strategy =
      rs.strategy == "self-witness" ? RationalLowerStrategy::SelfWitness : RationalLowerStrategy::MaximalSearch;
  const Universe& u = spec.universe();
  const auto rows = subsets_of_interest(spec);
  struct Row {
    NamedSet set;
    RationalResult lower;
    RationalResult upper;
  };
  std::vector<Row> out;
  for (const auto& r : rows) out.push_back({r, rational_lower(r.set, s, strategy), rational_upper(r.set, s)});

  auto opt = [&](const std::optional<Mask>& m) { return m ? u.format(*m) : std::string("undefined"); };
  if (fmt == Format::Json) {
    OJson j;
    j["lower"] = rs.lower;
    j["upper"] = rs.upper;
    j["parthood"] = s.parthood().name();
    j["strategy"] = to_string(strategy);
    OJson jr = OJson::array();
    auto side = [&](const RationalResult& r) {
      OJson o;
      o["defined"] = r.defined;
      o["value"] = r.value ? labels(u, *r.value) : OJson();
      o["witness"] = r.witness ? labels(u, *r.witness) : OJson();
      OJson alts = OJson::array();
      for (Mask m : r.alternatives) alts.push_back(labels(u, m));
      o["alternatives"] = alts;
      return o;
    };
    for (const auto& r : out) {
      OJson row;
      row["label"] = r.set.label;
      row["set"] = labels(u, r.set.set);
      row["rational_lower"] = side(r.lower);
      row["rational_upper"] = side(r.upper);
      jr.push_back(row);
    }
    j["rows"] = jr;
    return dump(j);
  }
  std::ostringstream os;
  if (fmt == Format::Csv) {
    os << "set,lower,lower_witness,upper,upper_witness,upper_alternatives\n";
    for (const auto& r : out) {
      os << csv_field(r.set.label) << "," << csv_field(opt(r.lower.value)) << "," << csv_field(opt(r.lower.witness))
         << "," << csv_field(opt(r.upper.value)) << "," << csv_field(opt(r.upper.witness)) << ","
         << r.upper.alternatives.size() << "\n";
    }
    return os.str();
  }
  os << "| Set | rational lower | witness | rational upper | witness |\n|---|---|---|---|---|\n";
  for (const auto& r : out) {
    os << "| " << md_cell(r.set.label) << " | " << md_cell(opt(r.lower.value)) << " | " << md_cell(opt(r.lower.witness))
       << " | " << md_cell(opt(r.upper.value)) << " | " << md_cell(opt(r.upper.witness)) << " |\n";
  }
  return os.str();
}

std::string cmd_correspond(const ProblemSpec& spec, const std::string& side, std::optional<int> nonrep, Format fmt,
                           unsigned threads) {
  if (!spec.alpha) throw SpecError("/alpha", "missing required field");
  const CheckOptions opts{{}, threads, 8};
  std::vector<GradePartition> parts;
  if (side != "lower") parts.push_back(build_upper_correspondence(spec.granulation, *spec.alpha, opts));
  if (side != "upper") parts.push_back(build_lower_correspondence(spec.granulation, *spec.alpha, opts));
  std::optional<CheckReport> nr;
  if (nonrep) nr = check_nonrepresentability(spec.granulation, *nonrep, opts);
  const Universe& u = spec.universe();

  std::string failures;
  for (const auto& p : parts)
    if (!p.verification.holds) failures += to_string(p.side) + " correspondence verification failed; ";

  std::string text;
  if (fmt == Format::Json) {
    OJson j;
    j["alpha"] = spec.alpha->to_string();
    OJson jp = OJson::array();
    for (const auto& p : parts) {
      OJson o;
      o["side"] = to_string(p.side);
      o["comparison_note"] = p.comparison_note;
      OJson blocks;
      for (const auto& [grade, xs] : p.blocks) {
        OJson sets = OJson::array();
        for (Mask x : xs) sets.push_back(labels(u, x));
        blocks[std::to_string(grade)] = sets;
      }
      o["blocks"] = blocks;
      OJson empty = OJson::array();
      for (Mask x : p.empty_block) empty.push_back(labels(u, x));
      o["empty_block"] = empty;
      o["verification"] = report_json(p.verification, u);
      if (p.literal_agreement.applicable) o["literal_agreement"] = report_json(p.literal_agreement, u);
      jp.push_back(o);
    }
    j["partitions"] = jp;
    if (nr) j["nonrepresentability"] = report_json(*nr, u);
    text = dump(j);
  } else if (fmt == Format::Csv) {
    std::ostringstream os;
    os << "side,grade,set\n";
    for (const auto& p : parts) {
      for (Mask x : p.empty_block) os << to_string(p.side) << ",empty," << csv_field(u.format(x)) << "\n";
      for (const auto& [grade, xs] : p.blocks)
        for (Mask x : xs) os << to_string(p.side) << "," << grade << "," << csv_field(u.format(x)) << "\n";
    }
    text = os.str();
  } else {
    std::ostringstream os;
    for (const auto& p : parts) {
      os << "## " << to_string(p.side) << " correspondence, alpha = " << p.alpha.to_string() << "\n\n"
         << p.comparison_note << "\n\n| grade | sets |\n|---|---|\n";
      std::string empty;
      for (Mask x : p.empty_block) empty += u.format(x);
      os << "| empty | " << empty << " |\n";
      for (const auto& [grade, xs] : p.blocks) {
        std::string sets;
        for (Mask x : xs) sets += (sets.empty() ? "" : " ") + u.format(x);
        os << "| " << grade << " | " << sets << " |\n";
      }
      os << "\nverification: " << (p.verification.holds ? "holds" : "FAILS") << "\n\n";
    }
    if (nr)
      os << "non-representability (k=" << *nonrep << "): " << nr->violation_count << " sets; " << nr->note << "\n";
    text = os.str();
  }
  if (!failures.empty()) throw AssertionFailure{failures + "\n" + text};
  return text;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Granular rough approximation engine and verifier"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  std::string format = "json";
  app.add_option("--spec", g.spec, "Problem spec (JSON)");
  app.add_option("--out", g.out, "Write output to this path instead of stdout");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json", "md"}));
  app.add_option("--seed", g.seed, "Seed for random granulations");
  app.add_option("--threads", g.threads, "Worker threads")->check(CLI::Range(1U, 256U));

  std::vector<std::string> ops;
  auto* approx = app.add_subcommand("approx", "Approximation table for the spec's subsets");
  approx->add_option("--ops", ops, "Operator ids (default: the spec's operators)")->delimiter(',');

  std::vector<std::string> axioms;
  auto* ax = app.add_subcommand("axioms", "Check inclusion-function axioms for the spec's kappa");
  ax->add_option("--axioms", axioms, "Axiom ids such as R1, RV, RV@3/10 (default: all)")->delimiter(',');

  auto* parthood = app.add_subcommand("parthood", "Parthood extension and property profile");
  auto* rational = app.add_subcommand("rational", "Rational lower and upper approximations");

  std::string side = "both";
  std::optional<int> nonrep;
  auto* correspond = app.add_subcommand("correspond", "Grade partition linking VPRS-star and graded approximations");
  correspond->add_option("--side", side, "lower, upper or both")->check(CLI::IsMember({"lower", "upper", "both"}));
  correspond->add_option("--nonrep", nonrep, "Also check non-representability at this grade");

  std::string suite = "all";
  std::string fixture_path;
  std::string markdown;
  std::size_t random = 50;
  std::size_t max_witnesses = 8;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", suite, "Suite id or 'all'");
  verify->add_option("--fixture", fixture_path, "Fixture file (default: shipped worked example)");
  verify->add_option("--random", random, "Random granulations per theorem battery");
  verify->add_option("--max-witnesses", max_witnesses, "Witnesses kept per check")->check(CLI::Range(1, 1000));
  verify->add_option("--markdown", markdown, "Also write a markdown summary to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  g.format = format == "csv" ? Format::Csv : format == "md" ? Format::Md : Format::Json;

  try {
    std::string text;
    int code = 0;
    if (verify->parsed()) {
      if (std::find(suite_ids().begin(), suite_ids().end(), suite) == suite_ids().end() && suite != "all") {
        throw ParameterError("unknown suite '" + suite + "'");
      }
      if (g.format == Format::Csv) throw ParameterError("verify writes json or md");
      const Fixture fx = load_fixture(fixture_path.empty() ? default_fixture_path() : fixture_path);
      const SuiteOptions so{g.seed, random, g.threads, max_witnesses};
      const auto results = run_suites(suite, fx, so);
      text = g.format == Format::Md ? suites_to_markdown(results, so) : suites_to_json(results, so);
      if (!markdown.empty()) emit(suites_to_markdown(results, so), markdown);
      for (const auto& r : results) code = r.passed() ? code : 1;
    } else {
      if (g.spec.empty()) throw ParameterError("--spec is required for this command");
      const ProblemSpec spec = load_problem(g.spec);
      if (approx->parsed()) text = cmd_approx(spec, ops, g.format);
      if (ax->parsed()) text = cmd_axioms(spec, axioms, g.format, g.threads);
      if (parthood->parsed()) text = cmd_parthood(spec, g.format, g.threads);
      if (rational->parsed()) text = cmd_rational(spec, g.format);
      if (correspond->parsed()) text = cmd_correspond(spec, side, nonrep, g.format, g.threads);
    }
    emit(text, g.out);
    return code;
  } catch (const AssertionFailure& f) {
    emit(f.text, g.out);
    return 1;
  } catch (const SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
