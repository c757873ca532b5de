#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <string>

#include "energy_series/errors.hpp"
#include "energy_series/oracles.hpp"

namespace energy_series::oracles {
namespace {

template <typename T>
using Pair = std::array<T, 2>;

// One RK4 step for y'' = w(x) y.
template <typename T, typename W>
Pair<T> rk4(double x, const Pair<T>& y, double h, const W& w) {
  auto rhs = [&](double t, const Pair<T>& s) -> Pair<T> { return {s[1], w(t) * s[0]}; };
  const Pair<T> k1 = rhs(x, y);
  const Pair<T> k2 = rhs(x + 0.5 * h, {y[0] + 0.5 * h * k1[0], y[1] + 0.5 * h * k1[1]});
  const Pair<T> k3 = rhs(x + 0.5 * h, {y[0] + 0.5 * h * k2[0], y[1] + 0.5 * h * k2[1]});
  const Pair<T> k4 = rhs(x + h, {y[0] + h * k3[0], y[1] + h * k3[1]});
  return {y[0] + h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]),
          y[1] + h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1])};
}

template <typename T>
void renormalize(Pair<T>& y) {
  const double size = std::abs(y[0]) + std::abs(y[1]);
  if (size > 1e100 || (size < 1e-100 && size > 0.0)) {
    y[0] /= size;
    y[1] /= size;
  }
}

enum class Parity { Even, Odd };

// V(x) - E
struct ShiftedPotential {
  const PotentialSpec* spec;
  double energy;
  double operator()(double x) const { return spec->value(x) - energy; }
};

class HalfLineProblem {
 public:
  HalfLineProblem(const PotentialSpec& spec, Parity parity) : spec_(spec), parity_(parity) {}

  void set_domain(double length, double max_energy) {
    length_ = length;
    const double scale = std::max({1.0, max_energy, spec_.value(length)});
    const double h = std::min(spec_.hard_wall() ? 1e-4 : 5e-4, 0.01 / std::sqrt(scale));
    steps_ = static_cast<int>(std::ceil(length / h));
  }

  double length() const { return length_; }

  /// Zeros of the parity-seeded solution in (0, L).
  int nodes(double energy) const {
    Pair<double> y = start();
    const double h = length_ / steps_;
    auto w = weight(energy);
    int count = 0;
    double previous = y[0];
    for (int i = 0; i < steps_; ++i) {
      y = rk4(i * h, y, h, w);
      if (y[0] != 0.0 && previous != 0.0 && (y[0] > 0.0) != (previous > 0.0)) ++count;
      if (y[0] != 0.0) previous = y[0];
      renormalize(y);
    }
    return count;
  }

  /// psi(L) for the parity-seeded solution (hard wall refinement).
  double end_value(double energy) const {
    Pair<double> y = start();
    const double h = length_ / steps_;
    auto w = weight(energy);
    for (int i = 0; i < steps_; ++i) {
      y = rk4(i * h, y, h, w);
      renormalize(y);
    }
    return y[0] / (std::abs(y[0]) + std::abs(y[1]));
  }

  /// Normalized Wronskian of the origin solution and the solution vanishing
  /// at L, matched at `match`.
  double wronskian(double energy, double match) const {
    auto w = weight(energy);
    const int out_steps = std::max(1, static_cast<int>(std::round(steps_ * match / length_)));
    const double h_out = match / out_steps;
    Pair<double> left = start();
    for (int i = 0; i < out_steps; ++i) {
      left = rk4(i * h_out, left, h_out, w);
      renormalize(left);
    }
    const int in_steps = std::max(1, steps_ - out_steps);
    const double h_in = (length_ - match) / in_steps;
    Pair<double> right{0.0, -1.0};
    for (int i = 0; i < in_steps; ++i) {
      right = rk4(length_ - i * h_in, right, -h_in, w);
      renormalize(right);
    }
    const double norm = std::hypot(left[0], left[1]) * std::hypot(right[0], right[1]);
    return (left[0] * right[1] - left[1] * right[0]) / norm;
  }

 private:
  Pair<double> start() const { return parity_ == Parity::Even ? Pair<double>{1.0, 0.0} : Pair<double>{0.0, 1.0}; }

  ShiftedPotential weight(double energy) const { return {&spec_, energy}; }

  const PotentialSpec& spec_;
  Parity parity_;
  double length_ = 1.0;
  int steps_ = 1;
};

// Where int_{x_t}^{L} sqrt(V - E) reaches `action`.
double decay_length(const PotentialSpec& spec, double energy, double action) {
  double x = std::pow(energy, 1.0 / spec.exponent());
  double accumulated = 0.0;
  const double dx = 1e-3;
  while (accumulated < action) {
    x += dx;
    accumulated += dx * std::sqrt(std::max(0.0, spec.value(x) - energy));
  }
  return x + 0.5;
}

template <typename F>
double bisect(double lo, double hi, double f_lo, const F& f, double tolerance) {
  for (int i = 0; i < 200 && hi - lo > tolerance * std::max(1.0, hi); ++i) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = f(mid);
    if (f_mid == 0.0) return mid;
    if ((f_mid > 0.0) == (f_lo > 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

OracleResult shooting_level(const PotentialSpec& spec, std::size_t index) {
  if (!spec.hermitian()) {
    throw Error(ErrorCode::InvalidSpec, "shooting oracle needs a Hermitian potential");
  }
  const Parity parity = index % 2 == 0 ? Parity::Even : Parity::Odd;
  const int target = static_cast<int>(index / 2);
  HalfLineProblem problem(spec, parity);

  // Upper bracket: enough nodes.
  double hi = 1.0;
  for (int attempt = 0;; ++attempt) {
    const double length = spec.hard_wall() ? 1.0 : decay_length(spec, hi, 36.0);
    problem.set_domain(length, hi);
    if (problem.nodes(hi) > target) break;
    if (attempt > 60) {
      throw Error(ErrorCode::NotConverged, "could not bracket level " + std::to_string(index));
    }
    hi *= 2.0;
  }

  double lo = 0.0;
  while (hi - lo > 1e-3 * std::max(1.0, hi)) {
    const double mid = 0.5 * (lo + hi);
    if (problem.nodes(mid) > target) {
      hi = mid;
    } else {
      lo = mid;
    }
  }

  // Hard wall: psi(1) = 0. Otherwise match at the classical turning point.
  std::function<double(double)> mismatch;
  if (spec.hard_wall()) {
    mismatch = [&](double e) { return problem.end_value(e); };
  } else {
    const double turning = std::pow(0.5 * (lo + hi), 1.0 / spec.exponent());
    const double match = std::clamp(turning, 0.05 * problem.length(), 0.9 * problem.length());
    mismatch = [&problem, match](double e) { return problem.wronskian(e, match); };
  }
  const double f_lo = mismatch(lo);
  if ((f_lo > 0.0) == (mismatch(hi) > 0.0)) {
    throw Error(ErrorCode::NotConverged,
                "matching function does not change sign around level " + std::to_string(index));
  }
  const double value = bisect(lo, hi, f_lo, mismatch, 1e-14);

  OracleResult result;
  result.value = value;
  result.kind = OracleKind::ShootingLevel;
  result.level = index;
  result.context = spec.to_string() + " level " + std::to_string(index);
  return result;
}

double pt_ground_energy(double exponent) {
  if (!(exponent >= 2.0)) {
    throw Error(ErrorCode::BrokenRegime, "PT ground state oracle requires N >= 2");
  }
  const double theta = pt_stokes_angle(exponent);
  const std::complex<double> rotation = std::polar(1.0, -2.0 * theta);
  const std::complex<double> phase = std::polar(1.0, theta);
  const double q = 1.0 + 0.5 * exponent;
  const double length = std::pow(45.0 * q, 1.0 / q) + 1.0;
  const double h = std::min(5e-4, 0.01 / std::sqrt(std::pow(length, exponent)));
  const int steps = static_cast<int>(std::ceil(length / h));
  const double dx = length / steps;

  auto condition = [&](double energy) {
    const std::complex<double> shifted = rotation * energy;
    auto w = [&](double x) { return std::complex<double>(std::pow(x, exponent)) - shifted; };
    Pair<std::complex<double>> y{0.0, 1.0};
    for (int i = 0; i < steps; ++i) {
      y = rk4(length - i * dx, y, -dx, w);
      renormalize(y);
    }
    // Re(e^{i theta} psi'/psi) carries the sign of Re(e^{i theta} psi' conj(psi)).
    return std::real(phase * y[1] * std::conj(y[0]));
  };

  const double step = 0.05;
  double lo = step;
  double f_lo = condition(lo);
  for (double e = 2.0 * step; e < 50.0; e += step) {
    const double f_e = condition(e);
    if ((f_e > 0.0) != (f_lo > 0.0)) return bisect(lo, e, f_lo, condition, 1e-14);
    lo = e;
    f_lo = f_e;
  }
  throw Error(ErrorCode::NotConverged, "no PT ground state found below E = 50");
}

}  // namespace energy_series::oracles
