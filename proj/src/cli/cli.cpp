#include "energy_series/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "energy_series/accel.hpp"
#include "energy_series/eigensolve.hpp"
#include "energy_series/errors.hpp"
#include "energy_series/oracles.hpp"
#include "energy_series/ptsym.hpp"
#include "energy_series/reproduce.hpp"
#include "energy_series/series.hpp"
#include "energy_series/variational.hpp"
#include "json.hpp"

#ifndef ENERGY_SERIES_VERSION
#define ENERGY_SERIES_VERSION "unknown"
#endif

namespace energy_series::cli {

namespace {

struct CommandInfo {
  Command command;
  const char* name;
  const char* help;
};

constexpr CommandInfo kCommands[] = {
    {Command::Coeffs, "coeffs", "series coefficients a_k of f(E)"},
    {Command::Ground, "ground", "truncated-series roots E_n"},
    {Command::Shanks, "shanks", "Shanks transform of E_n or of a CSV column"},
    {Command::Levels, "levels", "levels from diagonal Pade approximants"},
    {Command::Expect, "expect", "expectation values <H>_n"},
    {Command::PT, "pt", "truncated roots and <H>_n for -(ix)^N"},
    {Command::Oracle, "oracle", "reference level by shooting (and WKB for N=4)"},
    {Command::OracleF, "oracle-f", "closed-form f(E)"},
    {Command::Reproduce, "reproduce", "recompute a reference table and compare"},
};

struct RawOptions {
  std::string potential;
  long order = 6;
  long pade_order = 4;
  std::string format = "pretty";
  std::string output;
  std::string input;
  std::string column;
  std::optional<double> xmax_cap;
  std::optional<double> tail_tol;
  std::optional<double> base_step;
  double exponent = 3.0;
  long level = 0;
  std::optional<double> energy;
  std::string target;
};

bool needs_potential(Command c) {
  return c == Command::Coeffs || c == Command::Ground || c == Command::Levels || c == Command::Expect ||
         c == Command::Oracle || c == Command::OracleF;
}

void add_common(CLI::App* sub, RawOptions& raw) {
  sub->add_option("--format", raw.format, "csv, json or pretty");
  sub->add_option("--output", raw.output, "write to this file instead of stdout");
  sub->add_option("--xmax-cap", raw.xmax_cap, "largest allowed truncation point");
  sub->add_option("--tail-tol", raw.tail_tol, "tail mass tolerance beyond x_max");
  sub->add_option("--base-step", raw.base_step, "uniform mesh spacing near the origin");
}

void add_options(Command c, CLI::App* sub, RawOptions& raw) {
  add_common(sub, raw);
  if (needs_potential(c) || c == Command::Shanks) {
    sub->add_option("--potential", raw.potential, "power:N, square-well or ptpower:N");
  }
  if (c == Command::Coeffs || c == Command::Ground || c == Command::Expect || c == Command::PT ||
      c == Command::Shanks) {
    sub->add_option("--order", raw.order, "series order n");
  }
  if (c == Command::Levels) sub->add_option("--pade-order", raw.pade_order, "largest diagonal order");
  if (c == Command::Shanks) {
    sub->add_option("--input", raw.input, "CSV file with a header row");
    sub->add_option("--column", raw.column, "column name (default: last)");
  }
  if (c == Command::PT) sub->add_option("--N", raw.exponent, "exponent N >= 2");
  if (c == Command::Oracle) sub->add_option("--level", raw.level, "level index, 0 for the ground state");
  if (c == Command::OracleF) sub->add_option("--E", raw.energy, "energy")->required();
  if (c == Command::Reproduce) {
    sub->add_option("target", raw.target, "target id or 'all'")->required();
  }
}

std::size_t positive_order(long value, const char* flag) {
  if (value < 1) throw Error(ErrorCode::Usage, std::string(flag) + " must be >= 1");
  return static_cast<std::size_t>(value);
}

double grid_value(const nlohmann::json& j, const std::string& key) {
  if (!j.is_number()) throw Error(ErrorCode::Usage, "grid override field '" + key + "' must be a number");
  return j.get<double>();
}

void validate_grid(const GridConfig& g) {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(g.base_step) || !positive(g.tail_tol) || !positive(g.xmax_cap) || !(g.growth >= 1.0) ||
      !(g.max_step_factor >= 1.0) || !positive(g.solver_tol) || !positive(g.coefficient_tol)) {
    throw Error(ErrorCode::Usage, "grid settings must be positive (growth and max_step_factor >= 1)");
  }
}

}  // namespace

std::string to_string(Command command) {
  for (const auto& info : kCommands) {
    if (info.command == command) return info.name;
  }
  return "?";
}

GridConfig apply_grid_override(GridConfig grid, const std::string& json_text) {
  if (json_text.empty()) return grid;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Usage, std::string(kGridOverrideVariable) + " is not valid JSON: " + e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::Usage, std::string(kGridOverrideVariable) + " must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key == "base_step") grid.base_step = grid_value(value, key);
    else if (key == "tail_tol") grid.tail_tol = grid_value(value, key);
    else if (key == "xmax_cap") grid.xmax_cap = grid_value(value, key);
    else if (key == "growth") grid.growth = grid_value(value, key);
    else if (key == "max_step_factor") grid.max_step_factor = grid_value(value, key);
    else if (key == "solver_tol") grid.solver_tol = grid_value(value, key);
    else if (key == "coefficient_tol") grid.coefficient_tol = grid_value(value, key);
    else throw Error(ErrorCode::Usage, "unknown grid override field '" + key + "'");
  }
  validate_grid(grid);
  return grid;
}

RunConfig parse_args(const std::vector<std::string>& args) {
  const char* env = std::getenv(kGridOverrideVariable);
  return parse_args(args, env ? env : "");
}

RunConfig parse_args(const std::vector<std::string>& args, const std::string& grid_override) {
  CLI::App app{"Energy-expansion eigenvalue estimates for one-dimensional potentials", "energy-series"};
  app.require_subcommand(1);
  app.set_version_flag("--version", ENERGY_SERIES_VERSION);
  RawOptions raw;
  std::vector<std::pair<Command, CLI::App*>> subs;
  for (const auto& info : kCommands) {
    CLI::App* sub = app.add_subcommand(info.name, info.help);
    add_options(info.command, sub, raw);
    subs.emplace_back(info.command, sub);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::CallForVersion&) {
    throw HelpRequested{std::string(ENERGY_SERIES_VERSION) + "\n"};
  } catch (const CLI::ParseError& e) {
    throw Error(ErrorCode::Usage, e.what());
  }

  RunConfig config;
  for (const auto& [command, sub] : subs) {
    if (sub->parsed()) config.command = command;
  }

  if (!raw.potential.empty()) {
    try {
      config.spec = PotentialSpec::parse(raw.potential);
    } catch (const Error& e) {
      throw Error(ErrorCode::Usage, e.what());
    }
  } else if (needs_potential(config.command)) {
    throw Error(ErrorCode::Usage, to_string(config.command) + " needs --potential");
  }
  if (config.command == Command::Shanks && raw.input.empty() && !config.spec) {
    throw Error(ErrorCode::Usage, "shanks needs --input or --potential");
  }
  if (config.spec && config.spec->kind() == PotentialKind::PTPower && config.command != Command::Oracle) {
    throw Error(ErrorCode::Usage, "ptpower potentials are handled by the pt command");
  }

  config.order = positive_order(raw.order, "--order");
  config.pade_order = positive_order(raw.pade_order, "--pade-order");
  config.format = parse_format(raw.format);
  config.output = raw.output;
  config.input = raw.input;
  config.column = raw.column;
  config.exponent = raw.exponent;
  if (config.command == Command::PT && !(raw.exponent >= 2.0 && std::isfinite(raw.exponent))) {
    throw Error(ErrorCode::Usage, "--N must be a finite number >= 2");
  }
  if (raw.level < 0) throw Error(ErrorCode::Usage, "--level must be >= 0");
  config.level = static_cast<std::size_t>(raw.level);
  if (raw.energy) config.energy = *raw.energy;
  config.target = raw.target;

  config.grid = apply_grid_override(GridConfig{}, grid_override);
  if (raw.xmax_cap) config.grid.xmax_cap = *raw.xmax_cap;
  if (raw.tail_tol) config.grid.tail_tol = *raw.tail_tol;
  if (raw.base_step) config.grid.base_step = *raw.base_step;
  validate_grid(config.grid);
  return config;
}

namespace {

void add_meta(Report& r, const RunConfig& c) {
  r.meta["command"] = cell(to_string(c.command));
  if (c.spec) r.meta["potential"] = cell(c.spec->to_string());
  r.meta["grid.base_step"] = cell(c.grid.base_step);
  r.meta["grid.tail_tol"] = cell(c.grid.tail_tol);
  r.meta["grid.xmax_cap"] = cell(c.grid.xmax_cap);
  r.meta["grid.growth"] = cell(c.grid.growth);
  r.meta["grid.max_step_factor"] = cell(c.grid.max_step_factor);
  r.meta["version"] = cell(std::string(ENERGY_SERIES_VERSION));
}

double exact_ground(const PotentialSpec& spec) {
  if (spec.kind() == PotentialKind::SquareWell) return std::numbers::pi * std::numbers::pi / 4.0;
  if (spec.kind() == PotentialKind::PowerLaw && spec.exponent() == 2.0) return 1.0;
  return oracles::shooting_level(spec, 0).value;
}

Report coeffs_report(const RunConfig& c) {
  const EnergySeries s = build_series(*c.spec, c.order, c.grid);
  Report r;
  r.title = "coefficients of f(E) for " + c.spec->to_string();
  r.columns = {"k", "a_k", "error_estimate"};
  for (std::size_t k = 1; k <= s.order(); ++k) {
    r.add_row({cell(static_cast<double>(k)), cell(s.coefficient(k)), cell(s.error_estimates()[k - 1])});
  }
  const ZeroEnergyProfile& p = s.profile();
  r.meta["profile.x_max"] = cell(p.x_max);
  r.meta["profile.tail_mass"] = cell(p.tail_mass);
  r.meta["profile.max_residual"] = cell(p.max_residual);
  r.meta["profile.slope_at_origin"] = cell(p.slope_at_origin);
  return r;
}

Report ground_report(const RunConfig& c) {
  const EnergySeries s = build_series(*c.spec, c.order, c.grid);
  const auto roots = truncated_roots(s, c.order);
  const double exact = exact_ground(*c.spec);
  Report r;
  r.title = "truncated roots for " + c.spec->to_string();
  r.columns = {"n", "E_n", "error_estimate", "E_n/E_exact"};
  for (const auto& e : roots) {
    r.add_row({cell(static_cast<double>(e.order)), cell(e.value), cell(e.error_estimate), cell(e.value / exact)});
  }
  r.meta["E_exact"] = cell(exact);
  if (s.order() >= 3) r.meta["radius_estimate"] = cell(radius_estimate(s));
  if (roots.size() >= 3) {
    try {
      const ErrorModel m = error_model(s, roots);
      r.meta["error_model.r"] = cell(m.r);
      r.meta["error_model.theoretical_r"] = cell(m.theoretical_r);
      r.meta["error_model.limit"] = cell(m.limit);
    } catch (const Error& e) {
      r.notes.push_back(std::string("error model unavailable: ") + e.what());
    }
  }
  return r;
}

std::vector<double> read_csv_column(const std::string& path, const std::string& column) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Usage, "cannot read '" + path + "'");
  auto split = [](const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
  };
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::Usage, "'" + path + "' is empty");
  const auto header = split(line);
  std::size_t index = header.size() - 1;
  if (!column.empty()) {
    const auto it = std::find(header.begin(), header.end(), column);
    if (it == header.end()) throw Error(ErrorCode::Usage, "no column '" + column + "' in '" + path + "'");
    index = static_cast<std::size_t>(it - header.begin());
  }
  std::vector<double> values;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split(line);
    if (index >= fields.size()) throw Error(ErrorCode::Usage, "short row in '" + path + "': " + line);
    try {
      std::size_t used = 0;
      values.push_back(std::stod(fields[index], &used));
    } catch (const std::exception&) {
      throw Error(ErrorCode::Usage, "non-numeric value '" + fields[index] + "' in '" + path + "'");
    }
  }
  return values;
}

Report shanks_report(const RunConfig& c) {
  std::vector<double> input;
  Report r;
  if (!c.input.empty()) {
    input = read_csv_column(c.input, c.column);
    r.title = "Shanks transform of " + c.input;
    r.meta["input"] = cell(c.input);
  } else {
    const EnergySeries s = build_series(*c.spec, c.order, c.grid);
    for (const auto& e : truncated_roots(s, c.order)) input.push_back(e.value);
    r.title = "Shanks transform of E_n for " + c.spec->to_string();
  }
  const auto out = shanks(input);
  r.columns = {"index", "input", "shanks"};
  for (std::size_t i = 0; i < input.size(); ++i) {
    ReportCell value = cell();
    if (i >= 1 && i - 1 < out.size() && out[i - 1].value) value = cell(*out[i - 1].value);
    r.add_row({cell(static_cast<double>(i + 1)), cell(input[i]), value});
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].degenerate()) r.notes.push_back("degenerate denominator at index " + std::to_string(i + 2));
  }
  return r;
}

Report levels_report(const RunConfig& c) {
  const EnergySeries s = build_series(*c.spec, 2 * c.pade_order, c.grid);
  const LevelTable table = level_table(s, c.pade_order);
  Report r;
  r.title = "diagonal Pade levels for " + c.spec->to_string();
  r.columns = {"pade_order", "index", "parity", "value", "error_estimate"};
  for (const auto& e : table.entries) {
    r.add_row({cell(static_cast<double>(e.pade_order)), cell(static_cast<double>(e.index)), cell(std::string(to_string(e.parity))),
               cell(e.value), cell(e.error_estimate)});
  }
  r.notes = table.notes;
  return r;
}

Report expect_report(const RunConfig& c) {
  const EnergySeries s = build_series(*c.spec, c.order, c.grid);
  const double exact = exact_ground(*c.spec);
  Report r;
  r.title = "expectation values for " + c.spec->to_string();
  r.columns = {"n", "E_n", "<H>_n", "E_n/E_exact", "<H>_n/E_exact"};
  for (std::size_t n = 1; n <= c.order; ++n) {
    const double e = truncated_root(s, n).value;
    const double h = expectation(s, n).value;
    r.add_row({cell(static_cast<double>(n)), cell(e), cell(h), cell(e / exact), cell(h / exact)});
  }
  r.meta["E_exact"] = cell(exact);
  return r;
}

Report pt_report(const RunConfig& c) {
  const PotentialSpec base = PotentialSpec::power_law(c.exponent);
  const PTSeries pt = pt_series(build_series(base, c.order, c.grid), c.exponent);
  const double e0 = oracles::pt_ground_energy(c.exponent);
  Report r;
  std::ostringstream title;
  title << "PT-symmetric -(ix)^N, N = " << c.exponent;
  r.title = title.str();
  r.columns = {"n", "weight", "a_k^PT", "E_n", "E_n/E0", "<H>_n/E0"};
  for (std::size_t n = 1; n <= c.order; ++n) {
    ReportCell e = cell(), ratio = cell(), h = cell();
    try {
      const double value = pt_root(pt, n).value;
      e = cell(value);
      ratio = cell(value / e0);
      h = cell(pt_expectation(pt, n).value / e0);
    } catch (const Error& err) {
      if (err.code() != ErrorCode::NoRealRoot) throw;
      r.notes.push_back("order " + std::to_string(n) + ": " + err.what());
    }
    r.add_row({cell(static_cast<double>(n)), cell(pt.weights[n - 1]), cell(pt.weighted[n - 1]), e, ratio, h});
  }
  r.meta["E0"] = cell(e0);
  r.meta["theta"] = cell(pt.theta);
  return r;
}

Report oracle_report(const RunConfig& c) {
  Report r;
  r.title = "reference level " + std::to_string(c.level) + " for " + c.spec->to_string();
  r.columns = {"level", "value", "kind", "warning"};
  auto add = [&](const oracles::OracleResult& o, const char* kind) {
    r.add_row({cell(static_cast<double>(c.level)), cell(o.value), cell(kind), cell(o.warning)});
  };
  if (c.spec->kind() == PotentialKind::PTPower) {
    if (c.level != 0) throw Error(ErrorCode::Usage, "only the ground state of ptpower:N is available");
    r.add_row({cell(0.0), cell(oracles::pt_ground_energy(c.spec->exponent())), cell("shooting"), cell("")});
    return r;
  }
  add(oracles::shooting_level(*c.spec, c.level), "shooting");
  if (c.spec->kind() == PotentialKind::PowerLaw && c.spec->exponent() == 4.0) {
    add(oracles::wkb_quartic_level(c.level), "wkb");
  }
  return r;
}

Report oracle_f_report(const RunConfig& c) {
  Report r;
  r.title = "closed-form f(E) for " + c.spec->to_string();
  r.columns = {"E", "f(E)"};
  r.add_row({cell(c.energy), cell(oracles::closed_form_f(*c.spec, c.energy).value)});
  return r;
}

Report reproduce_report(const RunConfig& c) {
  if (c.target != "all") return reproduce(c.target, c.grid);
  Report r;
  r.title = "all reproduction targets";
  r.columns = {"target", "key", "value", "reference", "abs_error", "tolerance", "status"};
  for (const auto& t : reproduction_manifest()) {
    const Report one = reproduce(t.id, c.grid);
    for (const auto& row : one.rows) {
      std::vector<ReportCell> line{cell(t.id)};
      line.insert(line.end(), row.begin(), row.end());
      r.add_row(std::move(line));
    }
    r.tolerance_breach = r.tolerance_breach || one.tolerance_breach;
  }
  return r;
}

}  // namespace

Report make_report(const RunConfig& config) {
  Report r;
  switch (config.command) {
    case Command::Coeffs: r = coeffs_report(config); break;
    case Command::Ground: r = ground_report(config); break;
    case Command::Shanks: r = shanks_report(config); break;
    case Command::Levels: r = levels_report(config); break;
    case Command::Expect: r = expect_report(config); break;
    case Command::PT: r = pt_report(config); break;
    case Command::Oracle: r = oracle_report(config); break;
    case Command::OracleF: r = oracle_f_report(config); break;
    case Command::Reproduce: r = reproduce_report(config); break;
  }
  add_meta(r, config);
  return r;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config = parse_args(args);
  } catch (const HelpRequested& help) {
    out << help.text;
    return 0;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 1;
  }

  Report report;
  try {
    report = make_report(config);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return e.code() == ErrorCode::Usage ? 1 : 2;
  }

  if (config.output.empty()) {
    write(out, report, config.format);
  } else {
    std::ofstream file(config.output);
    if (!file) {
      err << "UsageError: cannot write '" << config.output << "'\n";
      return 1;
    }
    write(file, report, config.format);
  }
  if (report.tolerance_breach) {
    err << "tolerance breach in " << report.title << "\n";
    return 3;
  }
  return 0;
}

}  // namespace energy_series::cli
