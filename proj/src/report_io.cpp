#include <sstream>

#include <json.hpp>

#include "granrough/verify.hpp"

namespace granrough {

namespace {

using OJson = nlohmann::ordered_json;

std::string severity_name(Severity s) { return s == Severity::Hard ? "hard" : "soft"; }

std::string status(const CheckReport& r) {
  if (!r.applicable) return "n/a";
  if (r.holds) return "holds";
  return r.severity == Severity::Hard ? "FAILS" : "fails (soft)";
}

OJson report_json(const CheckReport& r) {
  OJson j;
  j["name"] = r.name;
  j["severity"] = severity_name(r.severity);
  j["applicable"] = r.applicable;
  j["holds"] = r.holds;
  j["violation_count"] = r.violation_count;
  j["universe_size"] = r.universe_size;
  OJson params = OJson::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  j["parameters"] = params;
  if (!r.note.empty()) j["note"] = r.note;
  OJson ws = OJson::array();
  for (const auto& w : r.witnesses) {
    OJson jw = OJson::array();
    for (const auto& b : w) jw.push_back(OJson::array({b.name, format_binding(b, Universe())}));
    ws.push_back(jw);
  }
  j["witnesses"] = ws;
  return j;
}

OJson diff_json(const DiffReport& d) {
  OJson j;
  j["fixture"] = d.fixture;
  j["ok"] = d.ok();
  OJson cols = OJson::array();
  for (const auto& c : d.columns) {
    OJson jc;
    jc["table"] = c.table;
    jc["column"] = c.column;
    jc["operator"] = c.op;
    jc["role"] = c.primary ? "primary" : "alternate";
    jc["ok"] = c.ok();
    jc["matches"] = c.matches;
    jc["known_mismatches"] = c.known_mismatches;
    jc["unexpected_mismatches"] = c.unexpected_mismatches;
    jc["stale_known"] = c.stale_known;
    OJson cells = OJson::array();
    for (const auto& cell : c.cells) {
      OJson jcell;
      jcell["row"] = cell.row;
      jcell["engine"] = d.universe.labels_of(cell.engine);
      jcell["expected"] = d.universe.labels_of(cell.expected);
      jcell["status"] =
          cell.match ? (cell.known ? "stale-known" : "match") : (cell.known ? "known-mismatch" : "mismatch");
      if (!cell.reason.empty()) jcell["reason"] = cell.reason;
      cells.push_back(jcell);
    }
    jc["cells"] = cells;
    cols.push_back(jc);
  }
  j["columns"] = cols;
  return j;
}

struct Totals {
  std::size_t hard = 0;
  std::size_t hard_failed = 0;
  std::size_t soft = 0;
  std::size_t soft_negative = 0;
};

Totals totals(const std::vector<SuiteResult>& results) {
  Totals t;
  for (const auto& s : results) {
    for (const auto& r : s.reports) {
      if (!r.applicable) continue;
      if (r.severity == Severity::Hard) {
        ++t.hard;
        t.hard_failed += r.holds ? 0 : 1;
      } else {
        ++t.soft;
        t.soft_negative += r.holds ? 0 : 1;
      }
    }
  }
  return t;
}

bool all_passed(const std::vector<SuiteResult>& results) {
  for (const auto& s : results)
    if (!s.passed()) return false;
  return true;
}

std::string md_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|')
      out += "\\|";
    else if (c == '\n')
      out += ' ';
    else
      out += c;
  }
  return out;
}

std::string witness_text(const Witness& w) {
  std::string out;
  for (const auto& b : w) out += (out.empty() ? "" : ", ") + b.name + "=" + format_binding(b, Universe());
  return out;
}

}  // namespace

std::string format_binding(const Binding& b, const Universe& u) {
  if (const auto* s = std::get_if<std::string>(&b.value)) return *s;
  if (const auto* r = std::get_if<Rational>(&b.value)) return r->to_string();
  const Mask m = std::get<Mask>(b.value);
  if (u.size() > 0) return u.format(m);
  std::ostringstream os;
  os << "mask:" << m;
  return os.str();
}

std::string suites_to_json(const std::vector<SuiteResult>& results, const SuiteOptions& opts) {
  const Totals t = totals(results);
  OJson j;
  j["report"] = "granrough verify";
  j["seed"] = opts.seed;
  j["random_granulations"] = opts.random_granulations;
  j["max_witnesses"] = opts.max_witnesses;
  j["passed"] = all_passed(results);
  j["summary"] = {{"hard_checks", t.hard},
                  {"hard_failures", t.hard_failed},
                  {"soft_checks", t.soft},
                  {"soft_negative", t.soft_negative}};
  OJson suites = OJson::array();
  for (const auto& s : results) {
    OJson js;
    js["suite"] = s.suite;
    js["passed"] = s.passed();
    OJson reps = OJson::array();
    for (const auto& r : s.reports) reps.push_back(report_json(r));
    js["reports"] = reps;
    if (s.diff) js["diff"] = diff_json(*s.diff);
    suites.push_back(js);
  }
  j["suites"] = suites;
  return j.dump(2) + "\n";
}

std::string suites_to_markdown(const std::vector<SuiteResult>& results, const SuiteOptions& opts) {
  const Totals t = totals(results);
  std::ostringstream md;
  md << "# Verification report\n\n";
  md << "- seed: " << opts.seed << "\n";
  md << "- random granulations: " << opts.random_granulations << "\n";
  md << "- overall: " << (all_passed(results) ? "PASS" : "FAIL") << "\n";
  md << "- hard checks: " << t.hard << " (" << t.hard_failed << " failing)\n";
  md << "- soft checks: " << t.soft << " (" << t.soft_negative << " negative)\n\n";
  for (const auto& s : results) {
    md << "## " << s.suite << ": " << (s.passed() ? "PASS" : "FAIL") << "\n\n";
    md << "| check | severity | result | violations | parameters | note |\n";
    md << "|---|---|---|---|---|---|\n";
    for (const auto& r : s.reports) {
      std::string params;
      for (const auto& [k, v] : r.parameters) params += (params.empty() ? "" : "; ") + k + "=" + v;
      md << "| " << md_escape(r.name) << " | " << severity_name(r.severity) << " | " << status(r) << " | "
         << r.violation_count << " | " << md_escape(params) << " | " << md_escape(r.note) << " |\n";
    }
    bool any = false;
    for (const auto& r : s.reports) {
      if (r.holds || r.witnesses.empty()) continue;
      if (!any) md << "\nFirst witnesses:\n\n";
      any = true;
      md << "- " << md_escape(r.name) << ": " << md_escape(witness_text(r.witnesses.front())) << "\n";
    }
    if (s.diff) {
      md << "\n| table | column | operator | role | matches | known | unexpected | stale |\n";
      md << "|---|---|---|---|---|---|---|---|\n";
      for (const auto& c : s.diff->columns) {
        md << "| " << c.table << " | " << md_escape(c.column) << " | " << c.op << " | "
           << (c.primary ? "primary" : "alternate") << " | " << c.matches << "/" << c.cells.size() << " | "
           << c.known_mismatches << " | " << c.unexpected_mismatches << " | " << c.stale_known << " |\n";
      }
      md << "\nMismatching cells:\n\n";
      for (const auto& c : s.diff->columns) {
        for (const auto& cell : c.cells) {
          if (cell.match) continue;
          md << "- " << c.table << " " << c.column << " [" << c.op << "] " << cell.row << ": engine "
             << s.diff->universe.format(cell.engine) << ", listed " << s.diff->universe.format(cell.expected)
             << (cell.known ? " (known: " + cell.reason + ")" : "") << "\n";
        }
      }
    }
    md << "\n";
  }
  return md.str();
}

}  // namespace granrough
