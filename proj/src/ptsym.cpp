#include "energy_series/ptsym.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "energy_series/errors.hpp"
#include "energy_series/quadrature.hpp"

namespace energy_series {

namespace {

constexpr std::size_t kScanPoints = 4000;

double weighted_f(const PTSeries& pt, std::size_t n, double e) {
  return eval_f(std::span<const double>(pt.weighted).first(n), e);
}

double bisect_root(const PTSeries& pt, std::size_t n, double lo, double hi) {
  double g_lo = weighted_f(pt, n, lo) - 1.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double g_mid = weighted_f(pt, n, mid) - 1.0;
    if (g_mid == 0.0) return mid;
    if ((g_mid < 0.0) == (g_lo < 0.0)) {
      lo = mid;
      g_lo = g_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double scan_limit(const PTSeries& pt) {
  if (pt.base.order() >= 3) return 3.0 * radius_estimate(pt.base);
  return 3.0 * 4.0 / pt.base.coefficient(1);
}

}  // namespace

double pt_weight(std::size_t k, double exponent) {
  if (k == 0) throw Error(ErrorCode::InvalidSpec, "PT weights are indexed from k = 1");
  // (2k-1)(N-2) pi / (2N+4) = pi/2 (mod pi)  <=>  2p - q = 0 (mod 2q)
  if (std::floor(exponent) == exponent) {
    const long p = (2 * static_cast<long>(k) - 1) * (static_cast<long>(exponent) - 2);
    const long q = 2 * static_cast<long>(exponent) + 4;
    if ((2 * p - q) % (2 * q) == 0) return 0.0;
  }
  const double theta = pt_stokes_angle(exponent);
  return std::cos((2.0 * static_cast<double>(k) - 1.0) * theta) / std::cos(theta);
}

PTSeries pt_series(const EnergySeries& series, double exponent) {
  if (!(exponent >= 2.0)) {
    throw Error(ErrorCode::BrokenRegime, "PT symmetry is broken for N < 2 (got " + std::to_string(exponent) + ")");
  }
  const PotentialSpec& spec = series.profile().spec;
  const bool power = spec.kind() == PotentialKind::PowerLaw || spec.kind() == PotentialKind::PTPower;
  if (!power || spec.exponent() != exponent) {
    throw Error(ErrorCode::InvalidSpec, "PT series for N = " + std::to_string(exponent) +
                                            " needs the |x|^N series, got " + spec.to_string());
  }
  PTSeries out{series, exponent, pt_stokes_angle(exponent), {}, {}};
  for (std::size_t k = 1; k <= series.order(); ++k) {
    out.weights.push_back(pt_weight(k, exponent));
    out.weighted.push_back(out.weights.back() * series.coefficient(k));
  }
  return out;
}

std::vector<double> pt_roots(const PTSeries& pt, std::size_t n) {
  if (n == 0 || n > pt.weighted.size()) {
    throw Error(ErrorCode::InsufficientOrder, "PT root of order " + std::to_string(n) + " needs " +
                                                  std::to_string(n) + " coefficients");
  }
  const double limit = scan_limit(pt);
  std::vector<double> roots;
  double prev_e = 0.0;
  double prev_g = -1.0;
  for (std::size_t i = 1; i <= kScanPoints; ++i) {
    const double e = limit * static_cast<double>(i) / kScanPoints;
    const double g = weighted_f(pt, n, e) - 1.0;
    if (g == 0.0) {
      roots.push_back(e);
    } else if ((g < 0.0) != (prev_g < 0.0) && prev_g != 0.0) {
      roots.push_back(bisect_root(pt, n, prev_e, e));
    }
    prev_e = e;
    prev_g = g;
  }
  return roots;
}

EigenEstimate pt_root(const PTSeries& pt, std::size_t n) {
  const std::vector<double> roots = pt_roots(pt, n);
  if (roots.empty()) {
    throw Error(ErrorCode::NoRealRoot, "no real root of the order-" + std::to_string(n) +
                                           " PT condition on (0, " + std::to_string(scan_limit(pt)) + "]");
  }
  EigenEstimate out;
  out.order = n;
  out.value = roots.front();
  out.method = Method::PTRoot;
  out.parity = Parity::Even;
  out.error_estimate = n >= 2 ? std::abs(roots.front() - pt_root(pt, n - 1).value)
                              : std::numeric_limits<double>::quiet_NaN();
  return out;
}

namespace detail {

ContourIntegrals contour_integrals(const EnergySeries& base, std::size_t n, double theta, double energy) {
  if (n == 0 || n > base.order()) {
    throw Error(ErrorCode::InsufficientOrder, "contour integrals of order " + std::to_string(n) + " need phi_" +
                                                  std::to_string(n));
  }
  const ZeroEnergyProfile& p = base.profile();
  const std::size_t size = p.size();

  // u_j = psi0 phi_j and its derivative, j = 0..n
  std::vector<std::vector<double>> u(n + 1, std::vector<double>(size)), du(n + 1, std::vector<double>(size));
  for (std::size_t i = 0; i < size; ++i) {
    u[0][i] = p.psi0[i];
    du[0][i] = p.dpsi0[i];
  }
  for (std::size_t j = 1; j <= n; ++j) {
    const OrderGrid& g = base.grids(j);
    for (std::size_t i = 0; i < size; ++i) {
      u[j][i] = p.psi0[i] * g.phi[i];
      du[j][i] = p.dpsi0[i] * g.phi[i] + p.psi0[i] * g.dphi[i];
    }
  }

  const std::size_t last = size - 1;
  auto moment = [&](std::size_t j, std::size_t k) {
    double total = quadrature::integrate_product(p.grid, u[j], du[j], u[k], du[k]);
    if (!p.spec.hard_wall() && u[j][last] != 0.0 && u[k][last] != 0.0) {
      const double decay = -(du[j][last] / u[j][last] + du[k][last] / u[k][last]);
      if (decay > 0.0) total += u[j][last] * u[k][last] / decay;
    }
    return total;
  };

  const std::complex<double> mu = std::polar(energy, -2.0 * theta);
  std::vector<std::complex<double>> powers(2 * n + 1, 1.0);
  for (std::size_t m = 1; m < powers.size(); ++m) powers[m] = powers[m - 1] * mu;

  ContourIntegrals out{};
  for (std::size_t j = 0; j <= n; ++j) {
    for (std::size_t k = j; k <= n; ++k) {
      const double m = moment(j, k);
      const std::complex<double> term = powers[j + k] * m;
      out.norm += (j == k ? 1.0 : 2.0) * term;
      if (k <= n - 1) out.overlap += (j == k ? 1.0 : 2.0) * term;
      else if (j <= n - 1) out.overlap += term;
    }
  }
  return out;
}

double expectation_at_phase(const EnergySeries& base, std::size_t n, double theta, double energy) {
  const ContourIntegrals c = contour_integrals(base, n, theta, energy);
  // PT-symmetric contour: the left half contributes the complex conjugate
  // of the right half, so each full integral is 2 Re(lambda * ray integral).
  const std::complex<double> lambda = std::polar(1.0, -theta);
  return energy * (lambda * c.overlap).real() / (lambda * c.norm).real();
}

}  // namespace detail

EigenEstimate pt_expectation(const PTSeries& pt, std::size_t n) {
  const EigenEstimate root = pt_root(pt, n);
  EigenEstimate out;
  out.order = n;
  out.value = detail::expectation_at_phase(pt.base, n, pt.theta, root.value);
  out.method = Method::Expectation;
  out.parity = Parity::Even;
  out.error_estimate = root.error_estimate;
  return out;
}

}  // namespace energy_series
