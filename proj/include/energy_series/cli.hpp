#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "energy_series/potential.hpp"
#include "energy_series/report.hpp"

namespace energy_series::cli {

enum class Command { Coeffs, Ground, Shanks, Levels, Expect, PT, Oracle, OracleF, Reproduce };

std::string to_string(Command command);

struct RunConfig {
  Command command = Command::Ground;
  std::optional<PotentialSpec> spec;
  std::size_t order = 6;
  std::size_t pade_order = 4;
  GridConfig grid;
  Format format = Format::Pretty;
  std::string output;  ///< empty for stdout
  std::string input;   ///< CSV for `shanks`
  std::string column;  ///< CSV column for `shanks`; empty for the last one
  double exponent = 3.0;
  std::size_t level = 0;
  double energy = 0.0;
  std::string target;
};

/// Thrown by parse_args for --help; `text` is the usage screen.
struct HelpRequested {
  std::string text;
};

inline constexpr const char* kGridOverrideVariable = "ENERGY_SERIES_GRID_OVERRIDE";

/// Arguments exclude the program name. Throws Error(Usage) on bad input.
/// `grid_override` is a JSON object of GridConfig fields applied before the
/// command-line grid flags.
RunConfig parse_args(const std::vector<std::string>& args, const std::string& grid_override);
/// Same, reading the override from the environment.
RunConfig parse_args(const std::vector<std::string>& args);

GridConfig apply_grid_override(GridConfig grid, const std::string& json_text);

Report make_report(const RunConfig& config);

/// Exit codes: 0 success, 1 usage, 2 numerical failure, 3 tolerance breach.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace energy_series::cli
