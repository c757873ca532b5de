#include "energy_series/potential.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "energy_series/errors.hpp"

namespace energy_series {
namespace {

constexpr std::string_view kGrammar = "expected one of: power:N (N > 0), square-well, ptpower:N (N >= 2)";

double parse_number(std::string_view text, std::string_view whole) {
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || !std::isfinite(value)) {
    throw Error(ErrorCode::InvalidSpec,
                "cannot read exponent in '" + std::string(whole) + "'; " + std::string(kGrammar));
  }
  return value;
}

// Leading terms of the large-argument expansion of K_mu(z), without the
// common sqrt(pi/2z) exp(-z) factor.
double bessel_k_asymptotic_sum(double mu, double z) {
  const double m4 = 4.0 * mu * mu;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k <= 8; ++k) {
    const double odd = 2.0 * k - 1.0;
    const double next = term * (m4 - odd * odd) / (k * 8.0 * z);
    if (std::abs(next) > std::abs(term)) break;
    term = next;
    sum += term;
  }
  return sum;
}

using State = std::array<double, 2>;

State rk4_step(const PotentialSpec& spec, double x, const State& y, double h) {
  auto rhs = [&](double t, const State& s) -> State { return {s[1], spec.value(t) * s[0]}; };
  const State k1 = rhs(x, y);
  const State k2 = rhs(x + 0.5 * h, {y[0] + 0.5 * h * k1[0], y[1] + 0.5 * h * k1[1]});
  const State k3 = rhs(x + 0.5 * h, {y[0] + 0.5 * h * k2[0], y[1] + 0.5 * h * k2[1]});
  const State k4 = rhs(x + h, {y[0] + h * k3[0], y[1] + h * k3[1]});
  return {y[0] + h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]),
          y[1] + h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1])};
}

// WKB action int_0^x sqrt(V) for V = x^N.
double wkb_action(double exponent, double x) {
  const double q = 1.0 + 0.5 * exponent;
  return std::pow(x, q) / q;
}

std::vector<double> graded_grid(double exponent, const GridConfig& config, double x_end) {
  const double h0 = config.base_step;
  const double h_max = config.max_step_factor * h0;
  // Uniform until psi0^2 ~ exp(-2S) has fallen to ~1e-6.
  const double switch_action = 0.5 * std::log(1e6);
  std::vector<double> grid{0.0};
  double h = h0;
  double x = 0.0;
  while (x < x_end) {
    if (wkb_action(exponent, x) > switch_action) h = std::min(h * config.growth, h_max);
    x = std::min(x + h, x_end);
    if (x_end - x < 0.25 * h) x = x_end;
    grid.push_back(x);
  }
  return grid;
}

double initial_truncation(double exponent, const GridConfig& config) {
  // First x where exp(-2S)/(2 sqrt V) drops below the tail tolerance.
  const double dx = 0.01;
  for (double x = dx; x < config.xmax_cap; x += dx) {
    const double tail = std::exp(-2.0 * wkb_action(exponent, x)) / (2.0 * std::sqrt(std::pow(x, exponent)));
    if (tail < config.tail_tol) return x;
  }
  return config.xmax_cap;
}

void compute_residual(ZeroEnergyProfile& profile) {
  const auto& spec = profile.spec;
  double worst = 0.0;
  for (std::size_t i = 0; i + 1 < profile.size(); ++i) {
    const double a = profile.grid[i];
    const double b = profile.grid[i + 1];
    const double dva = spec.derivative(a);
    if (!std::isfinite(dva)) continue;
    const double h = b - a;
    const double ga = spec.value(a) * profile.psi0[i];
    const double gb = spec.value(b) * profile.psi0[i + 1];
    const double dga = dva * profile.psi0[i] + spec.value(a) * profile.dpsi0[i];
    const double dgb = spec.derivative(b) * profile.psi0[i + 1] + spec.value(b) * profile.dpsi0[i + 1];
    const double integral = 0.5 * h * (ga + gb) + h * h / 12.0 * (dga - dgb);
    worst = std::max(worst, std::abs(profile.dpsi0[i + 1] - profile.dpsi0[i] - integral) / h);
  }
  profile.max_residual = worst;
}

ZeroEnergyProfile square_well_profile(const PotentialSpec& spec, const GridConfig& config) {
  ZeroEnergyProfile profile{.spec = spec, .config = config, .grid = {}, .psi0 = {}, .dpsi0 = {}};
  const auto cells = static_cast<std::size_t>(std::max(2.0, std::round(1.0 / config.base_step)));
  profile.grid.resize(cells + 1);
  profile.psi0.resize(cells + 1);
  profile.dpsi0.assign(cells + 1, -1.0);
  for (std::size_t i = 0; i <= cells; ++i) {
    const double x = static_cast<double>(i) / static_cast<double>(cells);
    profile.grid[i] = x;
    profile.psi0[i] = 1.0 - x;
  }
  profile.grid.back() = 1.0;
  profile.psi0.back() = 0.0;
  profile.slope_at_origin = -1.0;
  profile.x_max = 1.0;
  profile.tail_mass = 0.0;
  profile.max_residual = 0.0;
  return profile;
}

ZeroEnergyProfile power_law_attempt(const PotentialSpec& spec, const GridConfig& config, double x_end) {
  const double n = spec.exponent();
  ZeroEnergyProfile profile{.spec = spec, .config = config, .grid = {}, .psi0 = {}, .dpsi0 = {}};
  profile.grid = graded_grid(n, config, x_end);
  const std::size_t size = profile.grid.size();
  profile.psi0.resize(size);
  profile.dpsi0.resize(size);

  // Seed with the decaying Bessel-K form x^{1/2} K_nu(z), z = x^q / q:
  // psi0'/psi0 = -x^{q-1} K_{1-nu}(z) / K_nu(z).
  const double x_last = profile.grid.back();
  const double q = 1.0 + 0.5 * n;
  const double nu = 1.0 / (n + 2.0);
  const double z = std::pow(x_last, q) / q;
  const double ratio = bessel_k_asymptotic_sum(1.0 - nu, z) / bessel_k_asymptotic_sum(nu, z);
  State y{1.0, -std::pow(x_last, q - 1.0) * ratio};
  profile.psi0.back() = y[0];
  profile.dpsi0.back() = y[1];

  const double h_sub_max = 0.25 * config.base_step;
  for (std::size_t i = size - 1; i > 0; --i) {
    const double b = profile.grid[i];
    const double a = profile.grid[i - 1];
    const double h = b - a;
    const double stiffness = std::sqrt(spec.value(b)) * h / 0.02;
    const auto substeps = static_cast<int>(std::ceil(std::max(h / h_sub_max, stiffness)));
    const double dh = -h / substeps;
    double x = b;
    for (int s = 0; s < substeps; ++s) {
      y = rk4_step(spec, x, y, dh);
      x += dh;
    }
    if (!(y[0] > 0.0) || !(y[1] < 0.0) || !std::isfinite(y[0])) {
      throw Error(ErrorCode::NonDecayingSolution,
                  "backward integration lost positivity/monotonicity at x = " + std::to_string(a));
    }
    profile.psi0[i - 1] = y[0];
    profile.dpsi0[i - 1] = y[1];
  }

  const double scale = profile.psi0.front();
  for (std::size_t i = 0; i < size; ++i) {
    profile.psi0[i] /= scale;
    profile.dpsi0[i] /= scale;
  }
  profile.psi0.front() = 1.0;
  profile.slope_at_origin = profile.dpsi0.front();
  profile.x_max = x_last;
  const double kappa = -profile.dpsi0.back() / profile.psi0.back();
  profile.tail_mass = profile.psi0.back() * profile.psi0.back() / (2.0 * kappa);
  compute_residual(profile);
  return profile;
}

}  // namespace

PotentialSpec PotentialSpec::power_law(double exponent) {
  if (!(exponent > 0.0) || !std::isfinite(exponent)) {
    throw Error(ErrorCode::InvalidSpec, "power-law exponent must be a finite N > 0");
  }
  return {PotentialKind::PowerLaw, exponent};
}

PotentialSpec PotentialSpec::square_well() {
  return {PotentialKind::SquareWell, std::numeric_limits<double>::infinity()};
}

PotentialSpec PotentialSpec::pt_power(double exponent) {
  if (!(exponent >= 2.0) || !std::isfinite(exponent)) {
    throw Error(ErrorCode::InvalidSpec, "PT power requires a finite N >= 2 (unbroken regime)");
  }
  return {PotentialKind::PTPower, exponent};
}

PotentialSpec PotentialSpec::parse(std::string_view text) {
  if (text == "square-well") return square_well();
  constexpr std::string_view power = "power:";
  constexpr std::string_view ptpower = "ptpower:";
  if (text.starts_with(power)) return power_law(parse_number(text.substr(power.size()), text));
  if (text.starts_with(ptpower)) return pt_power(parse_number(text.substr(ptpower.size()), text));
  throw Error(ErrorCode::InvalidSpec, "unknown potential '" + std::string(text) + "'; " + std::string(kGrammar));
}

double pt_stokes_angle(double exponent) noexcept {
  return (exponent - 2.0) * std::numbers::pi / (2.0 * exponent + 4.0);
}

double PotentialSpec::theta() const noexcept {
  if (kind_ != PotentialKind::PTPower) return 0.0;
  return pt_stokes_angle(exponent_);
}

double PotentialSpec::value(double x) const noexcept {
  if (kind_ == PotentialKind::SquareWell) return 0.0;
  return std::pow(std::abs(x), exponent_);
}

double PotentialSpec::derivative(double x) const noexcept {
  if (kind_ == PotentialKind::SquareWell) return 0.0;
  if (x == 0.0) {
    if (exponent_ > 1.0) return 0.0;
    if (exponent_ == 1.0) return 1.0;
    return std::numeric_limits<double>::infinity();
  }
  return exponent_ * std::pow(x, exponent_ - 1.0);
}

std::string PotentialSpec::to_string() const {
  std::ostringstream out;
  out.precision(17);
  switch (kind_) {
    case PotentialKind::SquareWell: return "square-well";
    case PotentialKind::PowerLaw: out << "power:" << exponent_; break;
    case PotentialKind::PTPower: out << "ptpower:" << exponent_; break;
  }
  return out.str();
}

GridConfig GridConfig::refined() const {
  GridConfig out = *this;
  out.base_step *= 0.5;
  out.growth = std::sqrt(growth);
  return out;
}

GridConfig GridConfig::coarsened() const {
  GridConfig out = *this;
  out.base_step *= 2.0;
  out.growth = growth * growth;
  return out;
}

double ZeroEnergyProfile::tail_log_derivative() const noexcept {
  if (psi0.back() <= 0.0) return -std::numeric_limits<double>::infinity();
  return dpsi0.back() / psi0.back();
}

ZeroEnergyProfile zero_energy_profile(const PotentialSpec& spec, const GridConfig& config) {
  if (!(config.base_step > 0.0) || !(config.tail_tol > 0.0) || !(config.growth >= 1.0) ||
      !(config.max_step_factor >= 1.0) || !(config.xmax_cap > 0.0)) {
    throw Error(ErrorCode::InvalidSpec, "grid configuration out of range");
  }
  if (spec.hard_wall()) return square_well_profile(spec, config);

  double x_end = std::min(initial_truncation(spec.exponent(), config), config.xmax_cap);
  while (true) {
    ZeroEnergyProfile profile = power_law_attempt(spec, config, x_end);
    if (profile.tail_mass <= config.tail_tol) return profile;
    if (x_end >= config.xmax_cap) {
      throw Error(ErrorCode::TailToleranceUnmet,
                  "tail mass " + std::to_string(profile.tail_mass) + " above tolerance at x_max cap");
    }
    x_end = std::min(1.15 * x_end, config.xmax_cap);
  }
}

}  // namespace energy_series
