#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <string>

#include "energy_series/potential.hpp"

// Reference values computed by routes that share no code with the series
// construction: closed forms, direct shooting, and the large-E WKB relation.
namespace energy_series::oracles {

enum class OracleKind { ClosedFormF, ShootingLevel, WKBLevel };

struct OracleResult {
  double value = 0.0;
  OracleKind kind = OracleKind::ClosedFormF;
  std::string context;
  std::size_t level = 0;
  /// Non-empty when the value is outside its regime of validity.
  std::string warning;
};

/// psi0 and psi0' for V = |x|^N from the closed Bessel-K form
/// psi0 = 2 (N+2)^{-nu} / Gamma(nu) x^{1/2} K_nu(x^q / q), nu = 1/(N+2),
/// q = 1 + N/2.
struct ProfileValue {
  double psi0;
  double dpsi0;
};
ProfileValue power_law_profile(double exponent, double x);

/// psi0'(0) = -(N+2)^{1-2nu} Gamma(1-nu) / Gamma(nu).
double power_law_slope(double exponent);

/// Closed forms of f(E):
///   square well   1 - sqrt(E) cot sqrt(E)
///   |x|^2         1 - G(1/4) G(3/4 - E/4) / (G(3/4) G(1/4 - E/4))
///   |x|^1         1 - Ai(0) Ai'(-E) / (Ai'(0) Ai(-E))
/// Throws PoleProximity when the denominator is below 1e-13 in magnitude,
/// InvalidSpec for other potentials.
OracleResult closed_form_f(const PotentialSpec& spec, double energy);

/// Same formulas continued to complex E (no pole check). Used to recover
/// Taylor coefficients by contour integration.
std::complex<double> closed_form_f(const PotentialSpec& spec, std::complex<double> energy);

/// index-th level (0 = ground) of a Hermitian potential by shooting with
/// parity conditions at the origin: nodes bracket the level, a Wronskian
/// match at the classical turning point refines it. 1e-8 absolute.
OracleResult shooting_level(const PotentialSpec& spec, std::size_t index);

/// Solves (n + 1/2) pi = sqrt(pi) E^{3/4} sum_{j=0}^{4} A_{2j} E^{-3j/2}
/// for V = x^4. Indices below 2 carry a warning.
OracleResult wkb_quartic_level(std::size_t index);

/// WKB coefficients A_0, A_2, A_4, A_6, A_8.
std::array<double, 5> wkb_quartic_coefficients();

/// Ground state of -(ix)^N by shooting along the Stokes ray, where the
/// problem is -psi'' + x^N psi = exp(-2 i theta) E psi, with the condition
/// Re(exp(i theta) psi'(0) / psi(0)) = 0.
double pt_ground_energy(double exponent);

}  // namespace energy_series::oracles
