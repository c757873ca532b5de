#pragma once

#include <cstddef>
#include <span>

namespace energy_series::quadrature {

// Composite trapezoid with the endpoint-derivative correction. On each cell
// this is the exact integral of the cubic Hermite interpolant, so it is
// fourth order on arbitrary (graded) meshes.

inline double hermite_cell(double h, double fa, double fb, double dfa, double dfb) noexcept {
  return 0.5 * h * (fa + fb) + h * h / 12.0 * (dfa - dfb);
}

/// int over the whole grid of f, given f and f' at the nodes.
double integrate(std::span<const double> grid, std::span<const double> f, std::span<const double> df);

/// Integral of f * g, with f' and g' supplied for the product rule.
double integrate_product(std::span<const double> grid, std::span<const double> f, std::span<const double> df,
                         std::span<const double> g, std::span<const double> dg);

}  // namespace energy_series::quadrature
