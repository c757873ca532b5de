#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace energy_series {

enum class PotentialKind { PowerLaw, SquareWell, PTPower };

/// Ray angle theta = (N - 2) pi / (2N + 4) for -(ix)^N: with z = exp(-i theta) x,
/// -(iz)^N = x^N * exp(-2 i theta). Equal to pi/10 for N = 3, zero for N = 2.
double pt_stokes_angle(double exponent) noexcept;

/// Declarative description of an even potential.
///
///  - PowerLaw(N):  V(x) = |x|^N, N > 0.
///  - SquareWell:   V = 0 for |x| < 1, infinite walls at |x| = 1.
///  - PTPower(N):   V = -(ix)^N, N >= 2, posed on the ray z = exp(-i theta) x
///                  with theta = pt_stokes_angle(N). Along that ray the
///                  zero-energy problem is the Hermitian |x|^N one, so
///                  value() returns |x|^N.
class PotentialSpec {
 public:
  static PotentialSpec power_law(double exponent);
  static PotentialSpec square_well();
  static PotentialSpec pt_power(double exponent);

  /// Grammar: `power:N`, `square-well`, `ptpower:N`.
  static PotentialSpec parse(std::string_view text);

  PotentialKind kind() const noexcept { return kind_; }
  /// +inf for the square well.
  double exponent() const noexcept { return exponent_; }
  /// Stokes-ray angle; zero for the Hermitian kinds.
  double theta() const noexcept;
  bool hermitian() const noexcept { return kind_ != PotentialKind::PTPower; }
  bool hard_wall() const noexcept { return kind_ == PotentialKind::SquareWell; }

  /// Potential seen by the real-axis zero-energy problem at x >= 0.
  double value(double x) const noexcept;
  /// dV/dx at x >= 0; may be +inf at x = 0 for exponents below one.
  double derivative(double x) const noexcept;

  std::string to_string() const;

  friend bool operator==(const PotentialSpec&, const PotentialSpec&) = default;

 private:
  PotentialSpec(PotentialKind kind, double exponent) : kind_(kind), exponent_(exponent) {}

  PotentialKind kind_;
  double exponent_;
};

/// Mesh and tolerance controls for the zero-energy profile and the series
/// built on it.
///
/// The mesh is uniform with spacing `base_step` from the origin until the
/// WKB estimate of psi0^2 drops below 1e-6, then grows geometrically by
/// `growth` per cell up to `max_step_factor * base_step`. The truncation
/// point x_max is the first point where the estimated tail mass
/// int_{x_max}^inf psi0^2 is below `tail_tol`; it may not exceed `xmax_cap`.
struct GridConfig {
  double base_step = 1e-3;
  double tail_tol = 1e-14;
  double xmax_cap = 60.0;
  double growth = 1.002;
  double max_step_factor = 8.0;
  /// Bound on the integral-form residual of psi0'' = V psi0 per unit length.
  double solver_tol = 1e-10;
  /// Declared absolute accuracy of the series coefficients.
  double coefficient_tol = 1e-8;

  /// Same settings with the base step halved.
  GridConfig refined() const;
  /// Same settings with the base step doubled.
  GridConfig coarsened() const;

  friend bool operator==(const GridConfig&, const GridConfig&) = default;
};

/// psi0 with psi0'' = V psi0, psi0(0) = 1, psi0(inf) = 0, tabulated on the
/// half line [0, x_max].
struct ZeroEnergyProfile {
  PotentialSpec spec;
  GridConfig config;
  std::vector<double> grid;
  std::vector<double> psi0;
  std::vector<double> dpsi0;
  double slope_at_origin = 0.0;
  double x_max = 0.0;
  double tail_mass = 0.0;
  /// max over cells of |psi0'(b) - psi0'(a) - int_a^b V psi0| / (b - a).
  double max_residual = 0.0;

  std::size_t size() const noexcept { return grid.size(); }
  /// psi0'/psi0 at the last grid point; -inf for the hard wall.
  double tail_log_derivative() const noexcept;
};

ZeroEnergyProfile zero_energy_profile(const PotentialSpec& spec,
                                      const GridConfig& config = {});

}  // namespace energy_series
