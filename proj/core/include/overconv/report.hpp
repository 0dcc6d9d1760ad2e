#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "overconv/analysis.hpp"

namespace overconv::report {

inline constexpr int kSchemaVersion = 1;

/// Run configuration echoed at the top of every report.
struct RunInfo {
  std::uint32_t p = 0;
  std::uint32_t m = 0;
  std::uint32_t q = 0;
  int order = 0;
  Rational precision = 0;
  std::uint64_t seed = 0;
};

nlohmann::ordered_json check_to_json(const analysis::CheckReport& r);

/// {schema_version, p, m, q, order, precision, seed, checks: [...]}. Every
/// number is written as an exact integer or "num/den" string.
nlohmann::ordered_json to_json(const RunInfo& info, const std::vector<analysis::CheckReport>& checks);

/// Two-space indented JSON with a trailing newline.
std::string render_json(const RunInfo& info, const std::vector<analysis::CheckReport>& checks);

/// One row per case: check,p,m,q,inputs,measured,relation,bound,paper_bound,pass.
std::string render_csv(const RunInfo& info, const std::vector<analysis::CheckReport>& checks);

/// A heading per check followed by a table of its cases.
std::string render_markdown(const RunInfo& info, const std::vector<analysis::CheckReport>& checks);

}  // namespace overconv::report
