#include "energy_series/oracles.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "energy_series/errors.hpp"
#include "energy_series/special_functions.hpp"

namespace energy_series::oracles {
namespace {

constexpr double kPoleFloor = 1e-13;

bool is_exponent(const PotentialSpec& spec, double n) {
  return spec.kind() == PotentialKind::PowerLaw && spec.exponent() == n;
}

OracleResult closed(double value, const PotentialSpec& spec, double energy) {
  OracleResult result;
  result.value = value;
  result.kind = OracleKind::ClosedFormF;
  result.context = spec.to_string() + " f(" + std::to_string(energy) + ")";
  return result;
}

[[noreturn]] void pole(const PotentialSpec& spec, double energy) {
  throw Error(ErrorCode::PoleProximity,
              "f(E) for " + spec.to_string() + " is at a pole near E = " + std::to_string(energy));
}

}  // namespace

ProfileValue power_law_profile(double exponent, double x) {
  if (x == 0.0) return {1.0, power_law_slope(exponent)};
  const double nu = 1.0 / (exponent + 2.0);
  const double q = 1.0 + 0.5 * exponent;
  const double z = std::pow(x, q) / q;
  const double prefactor = 2.0 * std::pow(exponent + 2.0, -nu) / special::gamma(nu);
  return {prefactor * std::sqrt(x) * special::bessel_k(nu, z),
          -prefactor * std::pow(x, q - 0.5) * special::bessel_k(1.0 - nu, z)};
}

double power_law_slope(double exponent) {
  const double nu = 1.0 / (exponent + 2.0);
  return -std::pow(exponent + 2.0, 1.0 - 2.0 * nu) * special::gamma(1.0 - nu) / special::gamma(nu);
}

OracleResult closed_form_f(const PotentialSpec& spec, double energy) {
  if (spec.kind() == PotentialKind::SquareWell) {
    if (energy == 0.0) return closed(0.0, spec, energy);
    if (energy < 0.0) {
      const double s = std::sqrt(-energy);
      return closed(1.0 - s / std::tanh(s), spec, energy);
    }
    const double s = std::sqrt(energy);
    const double denominator = std::sin(s);
    if (std::abs(denominator) < kPoleFloor) pole(spec, energy);
    return closed(1.0 - s * std::cos(s) / denominator, spec, energy);
  }
  if (is_exponent(spec, 2.0)) {
    const double denominator = special::reciprocal_gamma(0.75 - 0.25 * energy);
    if (std::abs(denominator) < kPoleFloor) pole(spec, energy);
    const double ratio = special::gamma(0.25) / special::gamma(0.75);
    return closed(1.0 - ratio * special::reciprocal_gamma(0.25 - 0.25 * energy) / denominator, spec, energy);
  }
  if (is_exponent(spec, 1.0)) {
    const auto origin = special::airy(0.0);
    const auto shifted = special::airy(-energy);
    if (std::abs(shifted.ai) < kPoleFloor) pole(spec, energy);
    return closed(1.0 - origin.ai * shifted.dai / (origin.dai * shifted.ai), spec, energy);
  }
  throw Error(ErrorCode::InvalidSpec, "no closed-form f(E) for " + spec.to_string());
}

std::complex<double> closed_form_f(const PotentialSpec& spec, std::complex<double> energy) {
  if (spec.kind() == PotentialKind::SquareWell) {
    if (std::abs(energy) < 1e-300) return 0.0;
    const std::complex<double> s = std::sqrt(energy);
    return 1.0 - s * std::cos(s) / std::sin(s);
  }
  if (is_exponent(spec, 2.0)) {
    const double ratio = special::gamma(0.25) / special::gamma(0.75);
    return 1.0 - ratio * special::reciprocal_gamma(0.25 - 0.25 * energy) /
                     special::reciprocal_gamma(0.75 - 0.25 * energy);
  }
  if (is_exponent(spec, 1.0)) {
    const auto origin = special::airy(0.0);
    const auto shifted = special::airy(-energy);
    return 1.0 - origin.ai * shifted.dai / (origin.dai * shifted.ai);
  }
  throw Error(ErrorCode::InvalidSpec, "no closed-form f(E) for " + spec.to_string());
}

std::array<double, 5> wkb_quartic_coefficients() {
  const double r = special::gamma(0.25) / special::gamma(0.75);
  return {r / 3.0, -1.0 / (4.0 * r), 11.0 * r / 1536.0, 4697.0 / (30720.0 * r), -390065.0 * r / 3670016.0};
}

OracleResult wkb_quartic_level(std::size_t index) {
  const auto a = wkb_quartic_coefficients();
  const double target = (static_cast<double>(index) + 0.5) * std::numbers::pi;
  auto residual = [&](double energy) {
    double sum = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) sum += a[j] * std::pow(energy, -1.5 * static_cast<double>(j));
    return std::sqrt(std::numbers::pi) * std::pow(energy, 0.75) * sum - target;
  };

  // Bracket around the leading-order estimate; the truncated relation turns
  // over at small E, so search downward from above.
  const double leading = std::pow(target / (std::sqrt(std::numbers::pi) * a[0]), 4.0 / 3.0);
  double hi = 2.0 * leading + 1.0;
  double lo = hi;
  bool found = false;
  for (int i = 0; i < 400; ++i) {
    lo = hi * 0.97;
    if (residual(hi) > 0.0 && residual(lo) <= 0.0) {
      found = true;
      break;
    }
    hi = lo;
  }
  if (!found) {
    throw Error(ErrorCode::NoBracket, "truncated WKB relation has no root for index " + std::to_string(index));
  }
  for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (residual(mid) > 0.0 ? hi : lo) = mid;
  }

  OracleResult result;
  result.value = 0.5 * (lo + hi);
  result.kind = OracleKind::WKBLevel;
  result.level = index;
  result.context = "power:4 WKB level " + std::to_string(index);
  if (index < 2) result.warning = "WKB relation is asymptotic; index below 2 is outside its regime";
  return result;
}

}  // namespace energy_series::oracles
