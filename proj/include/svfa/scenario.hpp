#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "svfa/serialize.hpp"

namespace svfa {

inline constexpr std::string_view kScenarioVersion = "svfa-scenario/1";
inline constexpr std::string_view kReportVersion = "svfa-report/1";

struct RunOptions {
  bool parallel = false;
  bool timing = true;
  /// Override the seed / trial count of theorem-suite tasks.
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials;
};

struct RunReport {
  Json json;
  bool passed = false;
};

/// Validates the whole scenario first (ParseError, UnknownCommand), then runs
/// tasks in declaration order. A task that throws is reported as an error and
/// fails the run; it does not stop later tasks.
RunReport run_scenario(const Json& scenario, const RunOptions& opts = {});
/// Reads and parses the file; ParseError on unreadable or malformed JSON.
RunReport run_scenario_file(const std::filesystem::path& path, const RunOptions& opts = {});

/// One line per task plus a summary line.
std::string render_text(const RunReport& report);

/// Tab-separated rows: element, payload, kind (trajectory or delta), and one
/// interval per row as lo, lo_closed, hi, hi_closed. Elements in universe order.
std::string plot_table(const Svf& f, const FiniteSet& target);

/// Builds an SVF or sequence object from its scenario description and
/// resolves a target description against a universe. Exposed for the CLI.
Svf svf_object(const Json& spec);
FiniteSet target_set(const UniversePtr& universe, const Json& spec);

}  // namespace svfa
