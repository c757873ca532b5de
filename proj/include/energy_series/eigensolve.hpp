#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "energy_series/series.hpp"

namespace energy_series {

enum class Method { TruncatedRoot, Shanks, Pade, Expectation, PTRoot };
enum class Parity { Even, Odd };

std::string_view to_string(Method method) noexcept;
std::string_view to_string(Parity parity) noexcept;

struct EigenEstimate {
  std::size_t order = 0;
  double value = 0.0;
  Method method = Method::TruncatedRoot;
  /// NaN when no estimate is available (e.g. order 1).
  double error_estimate = 0.0;
  Parity parity = Parity::Even;
};

/// Positive root of sum_{k<=n} a_k E^k = 1 for positive a_k, by bisection on
/// [0, 2 min_k a_k^{-1/k}].
double positive_root(std::span<const double> coefficients);

/// E_n from the first n coefficients. The error estimate is
/// |E_n - E_{n-1}| r / (1 - r) with r fitted from E_{n-2}, E_{n-1}, E_n.
EigenEstimate truncated_root(const EnergySeries& series, std::size_t n);

/// E_1..E_{n_max}.
std::vector<EigenEstimate> truncated_roots(const EnergySeries& series, std::size_t n_max);

/// Aitken-accelerated limit of a_k / a_{k+1}: the radius of convergence of
/// f, i.e. the first odd level.
double radius_estimate(std::span<const double> coefficients);
double radius_estimate(const EnergySeries& series);

/// Geometric model E_n ~ limit + c r^n fitted to the last three estimates,
/// next to the prediction r = limit / R from the coefficient ratios.
struct ErrorModel {
  double r = 0.0;
  double c = 0.0;
  double limit = 0.0;
  double radius = 0.0;
  double theoretical_r = 0.0;
};

ErrorModel error_model(const EnergySeries& series, std::span<const EigenEstimate> estimates);

}  // namespace energy_series
