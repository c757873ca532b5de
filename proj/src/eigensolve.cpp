#include "energy_series/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "energy_series/errors.hpp"

namespace energy_series {

std::string_view to_string(Method method) noexcept {
  switch (method) {
    case Method::TruncatedRoot: return "TruncatedRoot";
    case Method::Shanks: return "Shanks";
    case Method::Pade: return "Pade";
    case Method::Expectation: return "Expectation";
    case Method::PTRoot: return "PTRoot";
  }
  return "Unknown";
}

std::string_view to_string(Parity parity) noexcept {
  return parity == Parity::Even ? "even" : "odd";
}

double positive_root(std::span<const double> coefficients) {
  if (coefficients.empty()) {
    throw Error(ErrorCode::InsufficientOrder, "truncated root needs at least one coefficient");
  }
  double upper = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    if (!(coefficients[k] > 0.0)) {
      throw Error(ErrorCode::NoPositiveCoefficients,
                  "a_" + std::to_string(k + 1) + " <= 0; use the PT root finder for sign-changing series");
    }
    upper = std::min(upper, std::pow(1.0 / coefficients[k], 1.0 / static_cast<double>(k + 1)));
  }
  double lo = 0.0;
  double hi = 2.0 * upper;
  // f_n is strictly increasing on E > 0, so plain bisection to roundoff.
  for (int i = 0; i < 2000; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (eval_f(coefficients, mid) < 1.0 ? lo : hi) = mid;
  }
  const double f_lo = eval_f(coefficients, lo);
  const double f_hi = eval_f(coefficients, hi);
  return std::abs(f_lo - 1.0) <= std::abs(f_hi - 1.0) ? lo : hi;
}

std::vector<EigenEstimate> truncated_roots(const EnergySeries& series, std::size_t n_max) {
  if (n_max == 0 || n_max > series.order()) {
    throw Error(ErrorCode::InsufficientOrder,
                "need " + std::to_string(n_max) + " coefficients, have " + std::to_string(series.order()));
  }
  std::vector<EigenEstimate> out;
  out.reserve(n_max);
  const auto all = series.coefficients();
  for (std::size_t n = 1; n <= n_max; ++n) {
    EigenEstimate estimate;
    estimate.order = n;
    estimate.value = positive_root(all.first(n));
    estimate.method = Method::TruncatedRoot;
    estimate.parity = Parity::Even;
    estimate.error_estimate = std::numeric_limits<double>::quiet_NaN();
    if (n >= 2) {
      const double step = std::abs(estimate.value - out.back().value);
      estimate.error_estimate = step;
      if (n >= 3) {
        const double previous = out[n - 2].value - out[n - 3].value;
        const double r = previous != 0.0 ? std::abs((estimate.value - out.back().value) / previous) : 0.0;
        if (r < 1.0) estimate.error_estimate = step * r / (1.0 - r);
      }
    }
    out.push_back(estimate);
  }
  return out;
}

EigenEstimate truncated_root(const EnergySeries& series, std::size_t n) {
  return truncated_roots(series, n).back();
}

double radius_estimate(std::span<const double> coefficients) {
  if (coefficients.size() < 3) {
    throw Error(ErrorCode::InsufficientOrder, "radius estimate needs at least 3 coefficients");
  }
  std::vector<double> ratios;
  for (std::size_t k = 0; k + 1 < coefficients.size(); ++k) {
    ratios.push_back(coefficients[k] / coefficients[k + 1]);
  }
  const std::size_t m = ratios.size();
  if (m < 3) return ratios.back();
  const double a0 = ratios[m - 3];
  const double a1 = ratios[m - 2];
  const double a2 = ratios[m - 1];
  const double denominator = a2 - 2.0 * a1 + a0;
  if (std::abs(denominator) <= 1e-14 * std::abs(a2)) return a2;
  return (a2 * a0 - a1 * a1) / denominator;
}

double radius_estimate(const EnergySeries& series) { return radius_estimate(series.coefficients()); }

ErrorModel error_model(const EnergySeries& series, std::span<const EigenEstimate> estimates) {
  if (estimates.size() < 3) {
    throw Error(ErrorCode::InsufficientOrder, "error model needs at least 3 estimates");
  }
  const std::size_t m = estimates.size();
  const double e0 = estimates[m - 3].value;
  const double e1 = estimates[m - 2].value;
  const double e2 = estimates[m - 1].value;
  const double d1 = e1 - e0;
  const double d2 = e2 - e1;
  const double floor = 1e-14 * std::max({std::abs(e0), std::abs(e1), std::abs(e2)});
  if (std::abs(d1) <= floor || std::abs(d2) <= floor) {
    throw Error(ErrorCode::DegenerateSequence, "successive differences vanish");
  }
  ErrorModel model;
  model.r = d2 / d1;
  model.limit = e2 - d2 * model.r / (1.0 - model.r);
  // E_n - limit = c r^n at the last order.
  const double n = static_cast<double>(estimates[m - 1].order);
  model.c = (e2 - model.limit) / std::pow(model.r, n);
  model.radius = radius_estimate(series);
  model.theoretical_r = model.limit / model.radius;
  return model;
}

}  // namespace energy_series
