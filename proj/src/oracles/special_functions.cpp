#include "energy_series/special_functions.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace energy_series::special {
namespace {

constexpr double kPi = std::numbers::pi;

constexpr std::array<double, 9> kLanczos{
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
constexpr double kLanczosG = 7.0;

// Gamma(z) for Re(z) >= 0.5.
template <typename T>
T lanczos_gamma(T z) {
  z -= 1.0;
  T sum = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    sum += kLanczos[i] / (z + static_cast<double>(i));
  }
  const T t = z + kLanczosG + 0.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * sum;
}

constexpr double kAi0 = 0.355028053887817239260;
constexpr double kDai0 = -0.258819403792806798405;

template <typename T>
AiryPair<T> airy_maclaurin(T z) {
  // Ai = Ai(0) f - (-Ai'(0)) g with f, g the even/odd Airy series.
  const T z3 = z * z * z;
  T f_term = 1.0, f_sum = 1.0;
  T df_term = z * z / 2.0, df_sum = df_term;
  T g_term = z, g_sum = z;
  T dg_term = 1.0, dg_sum = 1.0;
  constexpr double eps = 1e-18;
  for (int k = 0; k < 200; ++k) {
    const double kk = 3.0 * k;
    f_term *= z3 / ((kk + 2.0) * (kk + 3.0));
    g_term *= z3 / ((kk + 3.0) * (kk + 4.0));
    dg_term *= z3 / ((kk + 1.0) * (kk + 3.0));
    if (k > 0) df_term *= z3 / (kk * (kk + 2.0));
    f_sum += f_term;
    g_sum += g_term;
    dg_sum += dg_term;
    if (k > 0) df_sum += df_term;
    const double scale = std::abs(f_sum) + std::abs(g_sum) + 1.0;
    if (k > 3 && std::abs(f_term) + std::abs(g_term) + std::abs(df_term) +
                         std::abs(dg_term) <
                     eps * scale) {
      break;
    }
  }
  return {kAi0 * f_sum + kDai0 * g_sum, kAi0 * df_sum + kDai0 * dg_sum};
}

}  // namespace

double gamma(double x) {
  if (x < 0.5) {
    const double s = std::sin(kPi * x);
    if (s == 0.0) return std::numeric_limits<double>::infinity();
    return kPi / (s * lanczos_gamma(1.0 - x));
  }
  return lanczos_gamma(x);
}

std::complex<double> gamma(std::complex<double> z) {
  if (z.real() < 0.5) {
    return kPi / (std::sin(kPi * z) * lanczos_gamma(1.0 - z));
  }
  return lanczos_gamma(z);
}

double reciprocal_gamma(double x) {
  if (x < 0.5) {
    // At the poles sin(pi x) is an exact zero only for integer x; snap so
    // 1/Gamma(0) is returned as 0 rather than ~1e-17.
    if (x == std::nearbyint(x)) return 0.0;
    return std::sin(kPi * x) * lanczos_gamma(1.0 - x) / kPi;
  }
  return 1.0 / lanczos_gamma(x);
}

std::complex<double> reciprocal_gamma(std::complex<double> z) {
  if (z.real() < 0.5) {
    return std::sin(kPi * z) * lanczos_gamma(1.0 - z) / kPi;
  }
  return 1.0 / lanczos_gamma(z);
}

double bessel_k_scaled(double nu, double z) {
  // Integrand exp(-z (cosh t - 1)) cosh(nu t) is entire and doubly
  // exponentially decaying, so the plain trapezoid rule converges
  // geometrically in 1/h.
  const double h = 0.25 * std::min(1.0, 1.0 / std::sqrt(z));
  double sum = 0.5;
  for (int j = 1; j < 100000; ++j) {
    const double t = j * h;
    const double term = std::exp(-z * (std::cosh(t) - 1.0)) * std::cosh(nu * t);
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return h * sum;
}

double bessel_k(double nu, double z) { return std::exp(-z) * bessel_k_scaled(nu, z); }

AiryPair<double> airy(double x) {
  if (x <= 1.0) return airy_maclaurin(x);
  const double zeta = 2.0 / 3.0 * x * std::sqrt(x);
  const double decay = std::exp(-zeta);
  const double ai = std::sqrt(x / 3.0) / kPi * bessel_k_scaled(1.0 / 3.0, zeta);
  const double dai = -x / (kPi * std::sqrt(3.0)) * bessel_k_scaled(2.0 / 3.0, zeta);
  return {ai * decay, dai * decay};
}

AiryPair<std::complex<double>> airy(std::complex<double> z) {
  return airy_maclaurin(z);
}

double parabolic_cylinder_d_mhalf(double z) {
  if (z == 0.0) {
    // D_nu(0) = 2^{nu/2} sqrt(pi) / Gamma((1 - nu)/2)
    return std::pow(2.0, -0.25) * std::sqrt(kPi) / gamma(0.75);
  }
  return std::sqrt(z / (2.0 * kPi)) * bessel_k(0.25, z * z / 4.0);
}

}  // namespace energy_series::special
