#pragma once

#include <complex>

// Self-contained special functions used by the reference solvers. They do
// not share code with the series construction so the two can be compared.
namespace energy_series::special {

/// Lanczos (g = 7, n = 9) with reflection; about 1e-15 relative.
double gamma(double x);
std::complex<double> gamma(std::complex<double> z);

/// 1/Gamma, which is entire: exactly zero at the non-positive integers.
double reciprocal_gamma(double x);
std::complex<double> reciprocal_gamma(std::complex<double> z);

template <typename T>
struct AiryPair {
  T ai;
  T dai;
};

/// Ai and Ai' on the real line. Maclaurin series for x <= 1, the
/// K_{1/3}/K_{2/3} representation beyond. Accurate to ~1e-13 relative for
/// -6 <= x and to ~1e-14 relative for x > 1.
AiryPair<double> airy(double x);

/// Maclaurin series; intended for |z| <= 6.
AiryPair<std::complex<double>> airy(std::complex<double> z);

/// Modified Bessel K_nu(z) for real nu and z > 0, by the trapezoid rule on
/// K_nu(z) = int_0^inf exp(-z cosh t) cosh(nu t) dt.
double bessel_k(double nu, double z);

/// exp(z) * K_nu(z); avoids underflow for large z.
double bessel_k_scaled(double nu, double z);

/// Parabolic cylinder function D_{-1/2}(z) for z >= 0.
double parabolic_cylinder_d_mhalf(double z);

}  // namespace energy_series::special
