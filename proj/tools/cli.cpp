#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <unistd.h>

#include "overconv/analysis.hpp"
#include "overconv/carlitz.hpp"
#include "overconv/errors.hpp"
#include "overconv/report.hpp"
#include "overconv/special.hpp"

namespace overconv::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

struct RunConfig {
  std::uint32_t p = 3;
  std::uint32_t m = 1;
  int order = 8;
  std::string precision = "200";
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string output;
  unsigned jobs = 1;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::map<std::string, std::string>& verify_targets() {
  static const std::map<std::string, std::string> targets{
      {"prop1", "prop1"},           {"prop2", "prop2"},         {"prop3", "prop3"},
      {"prop4", "identity_24"},     {"exp-ode", "identity_18"}, {"polylog-ode", "polylog_odes"},
      {"pochhammer", "identity_23"}};
  return targets;
}

fs::path output_path(const std::string& output) {
  fs::path path(output);
  if (const char* dir = std::getenv("OVERCONV_OUTPUT_DIR"); dir != nullptr && *dir != '\0') {
    path = fs::path(dir) / path.filename();
  }
  return path;
}

void write_atomic(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    f << text;
    f.flush();
    if (!f) throw std::runtime_error("write to " + tmp.string() + " failed");
  }
  fs::rename(tmp, path);
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output.empty()) {
    out << text;
  } else {
    write_atomic(output_path(cfg.output), text);
  }
}

report::RunInfo run_info(const RunConfig& cfg, const ff::Field& field, const Rational& precision) {
  return {field.p(), field.m(), field.q(), cfg.order, precision, cfg.seed};
}

std::string render(const RunConfig& cfg, const report::RunInfo& info, const std::vector<analysis::CheckReport>& checks) {
  if (cfg.format == "csv") return report::render_csv(info, checks);
  if (cfg.format == "md") return report::render_markdown(info, checks);
  return report::render_json(info, checks);
}

ordered_json header(const report::RunInfo& info) {
  ordered_json j;
  j["schema_version"] = report::kSchemaVersion;
  j["p"] = info.p;
  j["m"] = info.m;
  j["q"] = info.q;
  j["order"] = info.order;
  j["precision"] = overconv::to_string(info.precision);
  j["seed"] = info.seed;
  return j;
}

std::string factorial_output(const RunConfig& cfg, const ff::FieldPtr& field, int n) {
  const series::GenSeries d = carlitz::carlitz_factorial(field, n);
  const std::string valuation = d.valuation_info().to_string();
  if (cfg.format == "csv") {
    std::ostringstream out;
    out << "exponent,coefficient\n";
    for (const auto& t : d.terms()) out << overconv::to_string(t.exponent) << ',' << field->to_string(t.coeff) << '\n';
    return out.str();
  }
  if (cfg.format == "md") {
    std::ostringstream out;
    out << "D_" << n << " = " << d.to_string() << "\n\nvaluation: " << valuation << "\n";
    return out.str();
  }
  ordered_json j;
  j["p"] = field->p();
  j["m"] = field->m();
  j["q"] = field->q();
  j["n"] = n;
  ordered_json terms = ordered_json::array();
  for (const auto& t : d.terms()) terms.push_back({overconv::to_string(t.exponent), field->to_string(t.coeff)});
  j["terms"] = std::move(terms);
  j["display"] = d.to_string();
  j["valuation"] = valuation;
  return j.dump(2) + "\n";
}

struct RadiusSeries {
  carlitz::QLinearSeries series;
  int tail_start;
};

RadiusSeries radius_series(const std::string& name, const ff::FieldPtr& field, const RunConfig& cfg,
                           const Rational& precision) {
  const int order = cfg.order;
  if (name == "ec") return {carlitz::carlitz_exp(field, order, precision), 1};
  if (name == "dwork") return {analysis::resolved_dwork_carlitz(field, order, precision), 2};
  if (name.rfind("polylog=", 0) == 0) {
    int n = 0;
    try {
      n = std::stoi(name.substr(8));
    } catch (const std::exception&) {
      throw UsageError("polylog index must be an integer: " + name);
    }
    if (n < 1) throw UsageError("polylog index must be >= 1");
    // Resolve each coefficient of L_n past its valuation.
    const std::uint32_t q = field->q();
    Rational prec = precision;
    const Rational needed = Rational(ipow(q, static_cast<unsigned>(std::max(order - 1, 0)))) * n + 1;
    if (prec < needed) prec = needed;
    return {special::overconvergent_polylog(field, n, order, prec), 2};
  }
  if (name == "hypergeom" || name == "rhs24") {
    const auto triples = analysis::sample_unit_triples(field, 1, cfg.seed, precision, order);
    const auto& t = triples.front();
    carlitz::QLinearSeries f = special::hypergeom({t.a, t.b, t.c}, order, precision * Rational(field->q()));
    if (name == "hypergeom") return {std::move(f), 1};
    return {carlitz::scale_argument(f, series::GenSeries::from_x_power(field, Rational(1))), 1};
  }
  throw UsageError("unknown series '" + name + "' (expected ec, dwork, polylog=<n>, hypergeom or rhs24)");
}

std::string radius_output(const RunConfig& cfg, const report::RunInfo& info, const std::string& name,
                          const analysis::ValuationProfile& profile, const analysis::RadiusEstimate& r) {
  if (cfg.format == "csv" || cfg.format == "md") {
    std::ostringstream out;
    if (cfg.format == "csv") {
      out << "index,valuation,slope\n";
      for (const auto& e : profile.entries) {
        out << e.index << ',' << e.valuation.to_string() << ',' << overconv::to_string(*e.slope) << '\n';
      }
    } else {
      out << "# Radius profile: " << name << "\n\n| k | v(c_k) | v(c_k)/q^k |\n|---|---|---|\n";
      for (const auto& e : profile.entries) {
        out << "| " << e.index << " | " << e.valuation.to_string() << " | " << overconv::to_string(*e.slope) << " |\n";
      }
      out << "\nexponent " << overconv::to_string(r.exponent) << " (" << analysis::to_string(r.direction)
          << " tail from k = " << r.tail_start << ")\n";
    }
    return out.str();
  }
  ordered_json j = header(info);
  j["series"] = name;
  ordered_json entries = ordered_json::array();
  for (const auto& e : profile.entries) {
    ordered_json ej;
    ej["index"] = e.index;
    ej["valuation"] = e.valuation.to_string();
    ej["slope"] = overconv::to_string(*e.slope);
    entries.push_back(std::move(ej));
  }
  j["profile"] = std::move(entries);
  ordered_json est;
  est["exponent"] = overconv::to_string(r.exponent);
  est["tail_min"] = overconv::to_string(r.tail_min);
  est["last_slope"] = overconv::to_string(r.last_slope);
  est["tail_start"] = r.tail_start;
  est["last_index"] = r.last_index;
  est["direction"] = analysis::to_string(r.direction);
  est["monotone_tail"] = r.monotone_tail;
  est["certified_lower_bound"] = r.certified_lower_bound;
  j["estimate"] = std::move(est);
  return j.dump(2) + "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of Carlitz-type special functions over F_q((x))", "overconv"};
  app.fallthrough();
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--p", cfg.p, "Characteristic (prime)")->capture_default_str();
  app.add_option("--m", cfg.m, "Extension degree, q = p^m")->capture_default_str();
  app.add_option("--order", cfg.order, "Series order N")->capture_default_str();
  app.add_option("--precision", cfg.precision, "Base precision P (rational)")->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for sampled parameters")->capture_default_str();
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "md"}))
      ->capture_default_str();
  app.add_option("--output", cfg.output, "Output file (default: standard output)");
  app.add_option("--jobs", cfg.jobs, "Worker threads for report --all (0: hardware concurrency)")
      ->capture_default_str();

  int factorial_n = 0;
  auto* factorial = app.add_subcommand("factorial", "Print the Carlitz factorial D_n");
  factorial->add_option("-n", factorial_n, "Index n")->required()->check(CLI::NonNegativeNumber);

  std::string verify_name;
  auto* verify = app.add_subcommand("verify", "Run one check");
  verify->add_option("check", verify_name, "prop1|prop2|prop3|prop4|exp-ode|polylog-ode|pochhammer")
      ->required()
      ->check(CLI::IsMember(verify_targets(), CLI::ignore_case));

  std::string series_name;
  auto* radius = app.add_subcommand("radius", "Valuation profile and radius estimate of a series");
  radius->add_option("--series", series_name, "ec|dwork|polylog=<n>|hypergeom|rhs24")->required();

  bool all = false;
  auto* rep = app.add_subcommand("report", "Run every check");
  rep->add_flag("--all", all, "Run all checks")->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cfg.order < 1) throw UsageError("--order must be >= 1");
    Rational precision;
    try {
      precision = parse_rational(cfg.precision);
    } catch (const ParseError&) {
      throw UsageError("--precision must be a rational number, got '" + cfg.precision + "'");
    }
    if (precision <= 0) throw UsageError("--precision must be positive");
    ff::FieldPtr field;
    try {
      field = ff::Field::create(cfg.p, cfg.m);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    const report::RunInfo info = run_info(cfg, *field, precision);
    const analysis::CheckSettings settings{cfg.order, precision, cfg.seed};
    const unsigned jobs = cfg.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : cfg.jobs;

    if (*factorial) {
      emit(cfg, factorial_output(cfg, field, factorial_n), out);
      return kExitOk;
    }
    if (*radius) {
      const RadiusSeries rs = radius_series(series_name, field, cfg, precision);
      const analysis::ValuationProfile profile = analysis::valuation_profile(rs.series);
      const analysis::RadiusEstimate r = analysis::radius_estimate(profile, rs.tail_start);
      emit(cfg, radius_output(cfg, info, series_name, profile, r), out);
      return kExitOk;
    }

    std::vector<std::string> names;
    if (*verify) {
      names.push_back(verify_targets().at(verify_name));
    } else {
      names = analysis::check_names();
    }
    const auto reports = analysis::run_checks(names, field, settings, jobs);
    emit(cfg, render(cfg, info, reports), out);
    for (const auto& r : reports) {
      if (!r.pass()) return kExitFail;
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "overconv: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "overconv: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace overconv::cli
