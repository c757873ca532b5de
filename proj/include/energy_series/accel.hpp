#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "energy_series/eigensolve.hpp"
#include "energy_series/series.hpp"

namespace energy_series {

/// One entry of a Shanks-transformed sequence. Empty when the
/// second difference A_{n+1} + A_{n-1} - 2 A_n is below 1e-14 in magnitude.
struct ShanksTerm {
  std::optional<double> value;

  bool degenerate() const noexcept { return !value.has_value(); }
};

/// S(A_n) = (A_{n+1} A_{n-1} - A_n^2) / (A_{n+1} + A_{n-1} - 2 A_n) for
/// n = 1..size-2. Throws TooShort below three terms.
std::vector<ShanksTerm> shanks(std::span<const double> sequence);

/// Roots of c_0 + c_1 z + ... + c_d z^d as eigenvalues of the companion
/// matrix, each polished by a few Newton steps.
std::vector<std::complex<double>> polynomial_roots(std::span<const double> ascending);

struct FroissartPair {
  std::complex<double> pole;
  std::complex<double> zero;
};

/// Rational approximant num(E)/den(E) to f(E) = sum_{k>=1} a_k E^k with
/// num = p_1 E + ... + p_L E^L (f(0) = 0) and den = 1 + q_1 E + ... + q_M E^M.
///
/// Poles of the approximant estimate odd-parity levels, zeros of
/// num - den (i.e. of f - 1) estimate even-parity levels.
struct PadeApproximant {
  std::size_t num_degree = 0;
  std::size_t den_degree = 0;
  /// Degree originally asked for when a singular system forced a fallback.
  std::size_t requested_degree = 0;
  std::vector<double> num;  ///< p_1..p_L
  std::vector<double> den;  ///< q_0 = 1, q_1..q_M
  std::vector<std::complex<double>> poles;
  std::vector<std::complex<double>> zeros;
  std::vector<double> even_levels;  ///< accepted real positive zeros, ascending
  std::vector<double> odd_levels;   ///< accepted real positive poles, ascending
  std::vector<FroissartPair> froissart_pairs;
  std::vector<std::string> notes;

  double evaluate(double energy) const;
  /// Taylor coefficients a_1..a_count of num/den.
  std::vector<double> taylor(std::size_t count) const;
};

/// [L/M] approximant from the first L + M coefficients. Throws
/// SingularPadeSystem when the denominator system is rank deficient.
PadeApproximant pade(std::span<const double> coefficients, std::size_t num_degree, std::size_t den_degree);

/// P_n^n, dropping to P_{n-1}^{n-1} (with a note) when the system for n is
/// singular.
PadeApproximant pade_diagonal(std::span<const double> coefficients, std::size_t n);
PadeApproximant pade_diagonal(const EnergySeries& series, std::size_t n);

struct LevelEntry {
  std::size_t pade_order = 0;
  std::size_t index = 0;  ///< position within the row, ascending energy
  Parity parity = Parity::Even;
  Method method = Method::Pade;
  double value = 0.0;
  /// Change from the same level in the previous row; NaN for new levels.
  double error_estimate = 0.0;
};

/// Row n holds the lowest n levels of P_n^n, interleaving even (zeros of
/// f - 1) and odd (poles) levels in ascending order.
struct LevelTable {
  std::size_t max_order = 0;
  std::vector<LevelEntry> entries;
  std::vector<std::string> notes;

  std::vector<LevelEntry> row(std::size_t pade_order) const;
};

LevelTable level_table(std::span<const double> coefficients, std::size_t n_max);
LevelTable level_table(const EnergySeries& series, std::size_t n_max);

}  // namespace energy_series
