#include "energy_series/series.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "energy_series/errors.hpp"
#include "energy_series/quadrature.hpp"

namespace energy_series {
namespace quadrature {

double integrate(std::span<const double> grid, std::span<const double> f, std::span<const double> df) {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    total += hermite_cell(grid[i + 1] - grid[i], f[i], f[i + 1], df[i], df[i + 1]);
  }
  return total;
}

double integrate_product(std::span<const double> grid, std::span<const double> f, std::span<const double> df,
                         std::span<const double> g, std::span<const double> dg) {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const std::size_t j = i + 1;
    total += hermite_cell(grid[j] - grid[i], f[i] * g[i], f[j] * g[j], df[i] * g[i] + f[i] * dg[i],
                          df[j] * g[j] + f[j] * dg[j]);
  }
  return total;
}

}  // namespace quadrature

namespace {

// Below this psi0^2 the quotient T_k / psi0^2 is replaced by its leading
// asymptotic form phi_{k-1} / (2 kappa), kappa = -psi0'/psi0.
constexpr double kSquareFloor = 1e-280;

}  // namespace

EnergySeries::EnergySeries(std::shared_ptr<const ZeroEnergyProfile> profile) : profile_(std::move(profile)) {
  if (!profile_ || profile_->size() < 2) {
    throw Error(ErrorCode::InvalidSpec, "energy series needs a tabulated profile");
  }
  const std::size_t size = profile_->size();
  auto zeroth = std::make_shared<OrderGrid>();
  zeroth->phi.assign(size, 1.0);
  zeroth->dphi.assign(size, 0.0);
  zeroth->d2phi.assign(size, 0.0);
  orders_.push_back(std::move(zeroth));
}

double EnergySeries::coefficient(std::size_t k) const {
  if (k == 0 || k > order()) {
    throw Error(ErrorCode::InsufficientOrder, "coefficient a_" + std::to_string(k) + " not available");
  }
  return coefficients_[k - 1];
}

const OrderGrid& EnergySeries::grids(std::size_t k) const {
  if (k > order()) {
    throw Error(ErrorCode::InsufficientOrder, "phi_" + std::to_string(k) + " not available");
  }
  return *orders_[k];
}

EnergySeries EnergySeries::with_error_estimates(std::vector<double> errors) const {
  if (errors.size() != order()) {
    throw Error(ErrorCode::InsufficientOrder, "error estimate count does not match series order");
  }
  EnergySeries out = *this;
  out.errors_ = std::move(errors);
  return out;
}

EnergySeries advance_order(const EnergySeries& series) {
  const ZeroEnergyProfile& p = series.profile();
  const std::size_t size = p.size();
  const std::span<const double> x = p.grid;
  const std::span<const double> psi = p.psi0;
  const std::span<const double> dpsi = p.dpsi0;
  const OrderGrid& prev = *series.orders_.back();
  const std::size_t last = size - 1;

  // Integrand g = psi0^2 phi_{k-1} and its derivative.
  std::vector<double> g(size), dg(size);
  for (std::size_t i = 0; i < size; ++i) {
    g[i] = psi[i] * psi[i] * prev.phi[i];
    dg[i] = 2.0 * psi[i] * dpsi[i] * prev.phi[i] + psi[i] * psi[i] * prev.dphi[i];
  }

  // Backward pass: T(x_i) = int_{x_i}^inf g. Beyond a soft truncation point
  // the tail is taken at leading order, g / (2 kappa).
  std::vector<double> tail(size);
  if (p.spec.hard_wall()) {
    tail[last] = 0.0;
  } else {
    const double kappa = -p.tail_log_derivative();
    tail[last] = g[last] / (2.0 * kappa);
  }
  for (std::size_t i = last; i > 0; --i) {
    tail[i - 1] = tail[i] + quadrature::hermite_cell(x[i] - x[i - 1], g[i - 1], g[i], dg[i - 1], dg[i]);
  }

  auto next = std::make_shared<OrderGrid>();
  next->phi.resize(size);
  next->dphi.resize(size);
  next->d2phi.resize(size);
  for (std::size_t i = 0; i < size; ++i) {
    const double square = psi[i] * psi[i];
    if (psi[i] == 0.0 && p.spec.hard_wall() && i == last) {
      // T ~ phi_{k-1}(1) (1-x)^3 / 3 at the wall, so phi_k' -> 0 and
      // phi_k'' -> -phi_{k-1}(1) / 3.
      next->dphi[i] = 0.0;
      next->d2phi[i] = -prev.phi[i] / 3.0;
      continue;
    }
    if (!(psi[i] > 1e-300)) {
      throw Error(ErrorCode::ProfileSingularity,
                  "psi0 underflows at x = " + std::to_string(x[i]) + " while the tail integral does not");
    }
    const double log_slope = dpsi[i] / psi[i];
    next->dphi[i] = square >= kSquareFloor ? tail[i] / square : prev.phi[i] / (-2.0 * log_slope);
    next->d2phi[i] = -prev.phi[i] - 2.0 * log_slope * next->dphi[i];
  }

  // Forward pass: phi_k(0) = 0.
  next->phi[0] = 0.0;
  for (std::size_t i = 0; i < last; ++i) {
    next->phi[i + 1] = next->phi[i] + quadrature::hermite_cell(x[i + 1] - x[i], next->dphi[i], next->dphi[i + 1],
                                                               next->d2phi[i], next->d2phi[i + 1]);
  }

  EnergySeries out = series;
  out.coefficients_.push_back(-next->dphi[0] / p.slope_at_origin);
  out.errors_.push_back(std::numeric_limits<double>::quiet_NaN());
  out.orders_.push_back(std::move(next));
  return out;
}

EnergySeries build_series(const PotentialSpec& spec, std::size_t order, const GridConfig& config) {
  auto run = [&](const GridConfig& cfg) {
    EnergySeries series(std::make_shared<const ZeroEnergyProfile>(zero_energy_profile(spec, cfg)));
    for (std::size_t k = 0; k < order; ++k) series = advance_order(series);
    return series;
  };
  EnergySeries fine = run(config);
  const EnergySeries coarse = run(config.coarsened());
  std::vector<double> errors(order);
  for (std::size_t k = 0; k < order; ++k) {
    errors[k] = std::abs(fine.coefficients()[k] - coarse.coefficients()[k]);
  }
  return fine.with_error_estimates(std::move(errors));
}

double eval_f(std::span<const double> coefficients, double energy) noexcept {
  double sum = 0.0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) sum = (sum + *it) * energy;
  return sum;
}

double eval_f(const EnergySeries& series, double energy) noexcept {
  return eval_f(series.coefficients(), energy);
}

}  // namespace energy_series
