#include "overconv/report.hpp"

#include <sstream>

namespace overconv::report {

using analysis::CheckCase;
using analysis::CheckReport;
using analysis::Params;
using nlohmann::ordered_json;

namespace {

ordered_json params_json(const Params& params) {
  ordered_json j = ordered_json::object();
  for (const auto& [k, v] : params) j[k] = v;
  return j;
}

std::string params_text(const Params& params) {
  std::string out;
  for (const auto& [k, v] : params) {
    if (!out.empty()) out += "; ";
    out += k + "=" + v;
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string md_cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

ordered_json check_to_json(const CheckReport& r) {
  ordered_json j;
  j["name"] = r.name;
  j["params"] = params_json(r.params);
  ordered_json cases = ordered_json::array();
  for (const CheckCase& c : r.cases) {
    ordered_json cj;
    cj["inputs"] = params_json(c.inputs);
    cj["measured"] = c.measured;
    cj["relation"] = c.relation;
    cj["bound"] = c.bound;
    if (c.paper_bound) cj["paper_bound"] = *c.paper_bound;
    cj["pass"] = c.pass;
    cases.push_back(std::move(cj));
  }
  j["cases"] = std::move(cases);
  j["pass"] = r.pass();
  return j;
}

ordered_json to_json(const RunInfo& info, const std::vector<CheckReport>& checks) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["p"] = info.p;
  j["m"] = info.m;
  j["q"] = info.q;
  j["order"] = info.order;
  j["precision"] = overconv::to_string(info.precision);
  j["seed"] = info.seed;
  ordered_json arr = ordered_json::array();
  for (const auto& r : checks) arr.push_back(check_to_json(r));
  j["checks"] = std::move(arr);
  return j;
}

std::string render_json(const RunInfo& info, const std::vector<CheckReport>& checks) {
  return to_json(info, checks).dump(2) + "\n";
}

std::string render_csv(const RunInfo& info, const std::vector<CheckReport>& checks) {
  std::ostringstream out;
  out << "check,p,m,q,inputs,measured,relation,bound,paper_bound,pass\n";
  for (const auto& r : checks) {
    for (const auto& c : r.cases) {
      out << csv_field(r.name) << ',' << info.p << ',' << info.m << ',' << info.q << ','
          << csv_field(params_text(c.inputs)) << ',' << csv_field(c.measured) << ',' << csv_field(c.relation) << ','
          << csv_field(c.bound) << ',' << csv_field(c.paper_bound.value_or("")) << ',' << (c.pass ? "true" : "false")
          << '\n';
    }
  }
  return out.str();
}

std::string render_markdown(const RunInfo& info, const std::vector<CheckReport>& checks) {
  std::ostringstream out;
  out << "# Verification report\n\n"
      << "p = " << info.p << ", m = " << info.m << ", q = " << info.q << ", order = " << info.order
      << ", precision = " << overconv::to_string(info.precision) << ", seed = " << info.seed << "\n";
  for (const auto& r : checks) {
    out << "\n## " << r.name << " (" << (r.pass() ? "pass" : "FAIL") << ")\n\n";
    if (!r.params.empty()) out << "Parameters: " << md_cell(params_text(r.params)) << "\n\n";
    out << "| inputs | measured | relation | bound | printed bound | pass |\n"
        << "|---|---|---|---|---|---|\n";
    for (const auto& c : r.cases) {
      out << "| " << md_cell(params_text(c.inputs)) << " | " << md_cell(c.measured) << " | " << md_cell(c.relation)
          << " | " << md_cell(c.bound) << " | " << md_cell(c.paper_bound.value_or("")) << " | "
          << (c.pass ? "yes" : "no") << " |\n";
    }
  }
  return out.str();
}

}  // namespace overconv::report
