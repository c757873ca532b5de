#include "energy_series/accel.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>
#include <sstream>

#include "energy_series/errors.hpp"

namespace energy_series {
namespace {

constexpr double kShanksFloor = 1e-14;
constexpr double kFroissartDistance = 1e-6;
constexpr double kRealTolerance = 1e-8;
constexpr double kPivotThreshold = 1e-11;

std::complex<double> horner(std::span<const double> ascending, std::complex<double> z) {
  std::complex<double> value = 0.0;
  for (auto it = ascending.rbegin(); it != ascending.rend(); ++it) value = value * z + *it;
  return value;
}

std::string describe(std::complex<double> z) {
  std::ostringstream out;
  out.precision(10);
  out << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return out.str();
}

// Real positive roots; everything else is described in `notes`.
std::vector<double> accept_levels(const std::vector<std::complex<double>>& roots, std::string_view what,
                                  std::vector<std::string>& notes) {
  std::vector<double> levels;
  for (const auto& z : roots) {
    const bool real = std::abs(z.imag()) < kRealTolerance * std::abs(z);
    if (real && z.real() > 0.0) {
      levels.push_back(z.real());
    } else {
      notes.push_back("excluded " + std::string(what) + " " + describe(z));
    }
  }
  std::sort(levels.begin(), levels.end());
  return levels;
}

}  // namespace

std::vector<ShanksTerm> shanks(std::span<const double> sequence) {
  if (sequence.size() < 3) {
    throw Error(ErrorCode::TooShort, "Shanks transform needs at least three terms");
  }
  std::vector<ShanksTerm> out;
  out.reserve(sequence.size() - 2);
  for (std::size_t n = 1; n + 1 < sequence.size(); ++n) {
    const double before = sequence[n - 1];
    const double here = sequence[n];
    const double after = sequence[n + 1];
    const double denominator = after + before - 2.0 * here;
    if (std::abs(denominator) < kShanksFloor) {
      out.push_back({});
    } else {
      out.push_back({(after * before - here * here) / denominator});
    }
  }
  return out;
}

std::vector<std::complex<double>> polynomial_roots(std::span<const double> ascending) {
  std::size_t degree = ascending.size();
  while (degree > 0 && ascending[degree - 1] == 0.0) --degree;
  if (degree <= 1) return {};
  --degree;
  const auto poly = ascending.first(degree + 1);
  const double lead = poly[degree];

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(degree), static_cast<Eigen::Index>(degree));
  for (std::size_t i = 1; i < degree; ++i) companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
  for (std::size_t i = 0; i < degree; ++i) {
    companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(degree - 1)) = -poly[i] / lead;
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::NotConverged, "companion matrix eigenvalues did not converge");
  }

  std::vector<double> derivative(degree);
  for (std::size_t i = 1; i <= degree; ++i) derivative[i - 1] = static_cast<double>(i) * poly[i];

  std::vector<std::complex<double>> roots;
  roots.reserve(degree);
  for (const auto& eigenvalue : solver.eigenvalues()) {
    std::complex<double> z = eigenvalue;
    for (int step = 0; step < 3; ++step) {
      const auto slope = horner(derivative, z);
      if (slope == 0.0) break;
      const auto next = z - horner(poly, z) / slope;
      if (std::abs(horner(poly, next)) >= std::abs(horner(poly, z))) break;
      z = next;
    }
    roots.push_back(z);
  }
  std::sort(roots.begin(), roots.end(),
            [](const auto& a, const auto& b) { return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag()); });
  return roots;
}

double PadeApproximant::evaluate(double energy) const {
  std::vector<double> numerator(num.size() + 1, 0.0);
  std::copy(num.begin(), num.end(), numerator.begin() + 1);
  return horner(numerator, energy).real() / horner(den, energy).real();
}

std::vector<double> PadeApproximant::taylor(std::size_t count) const {
  // num = den * f, solved order by order with f_0 = 0.
  std::vector<double> series(count + 1, 0.0);
  for (std::size_t k = 1; k <= count; ++k) {
    double value = k <= num.size() ? num[k - 1] : 0.0;
    for (std::size_t j = 1; j < den.size() && j < k; ++j) value -= den[j] * series[k - j];
    series[k] = value;
  }
  return {series.begin() + 1, series.end()};
}

PadeApproximant pade(std::span<const double> coefficients, std::size_t num_degree, std::size_t den_degree) {
  const std::size_t needed = num_degree + den_degree;
  if (num_degree == 0 || coefficients.size() < needed) {
    throw Error(ErrorCode::InsufficientOrder, "approximant [" + std::to_string(num_degree) + "/" +
                                                  std::to_string(den_degree) + "] needs " +
                                                  std::to_string(needed) + " coefficients");
  }
  // a(k) with a_0 = 0, indices 1-based.
  auto a = [&](long k) { return k >= 1 ? coefficients[static_cast<std::size_t>(k - 1)] : 0.0; };

  // Work in E = s u so the scaled coefficients a_k s^k are O(1).
  double s = 1.0;
  if (needed >= 2 && a(1) != 0.0 && a(static_cast<long>(needed)) != 0.0) {
    s = std::pow(std::abs(a(1) / a(static_cast<long>(needed))), 1.0 / static_cast<double>(needed - 1));
  }
  auto scaled = [&](long k) { return a(k) * std::pow(s, static_cast<double>(k)); };

  PadeApproximant out;
  out.num_degree = num_degree;
  out.den_degree = den_degree;
  out.requested_degree = num_degree;
  out.den.assign(den_degree + 1, 0.0);
  out.den[0] = 1.0;

  const auto m = static_cast<Eigen::Index>(den_degree);
  if (m > 0) {
    Eigen::MatrixXd system(m, m);
    Eigen::VectorXd rhs(m);
    for (Eigen::Index row = 0; row < m; ++row) {
      const long order = static_cast<long>(num_degree) + 1 + row;
      for (Eigen::Index col = 0; col < m; ++col) system(row, col) = scaled(order - (col + 1));
      rhs(row) = -scaled(order);
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(system);
    lu.setThreshold(kPivotThreshold);
    if (lu.rank() < m) {
      throw Error(ErrorCode::SingularPadeSystem, "denominator system for [" + std::to_string(num_degree) + "/" +
                                                     std::to_string(den_degree) + "] is rank deficient");
    }
    const Eigen::VectorXd q = lu.solve(rhs);
    for (Eigen::Index j = 0; j < m; ++j) out.den[static_cast<std::size_t>(j + 1)] = q(j) / std::pow(s, static_cast<double>(j + 1));
  }

  out.num.resize(num_degree);
  for (std::size_t i = 1; i <= num_degree; ++i) {
    double value = a(static_cast<long>(i));
    for (std::size_t j = 1; j <= std::min(i, den_degree); ++j) value += out.den[j] * a(static_cast<long>(i - j));
    out.num[i - 1] = value;
  }

  out.poles = polynomial_roots(out.den);
  // num - den, ascending, constant term -1.
  std::vector<double> difference(std::max(num_degree, den_degree) + 1, 0.0);
  for (std::size_t i = 0; i < out.den.size(); ++i) difference[i] -= out.den[i];
  for (std::size_t i = 0; i < out.num.size(); ++i) difference[i + 1] += out.num[i];
  out.zeros = polynomial_roots(difference);

  // Near-coincident pole/zero pairs are spurious; record and drop both.
  std::vector<bool> pole_dropped(out.poles.size(), false);
  std::vector<bool> zero_dropped(out.zeros.size(), false);
  for (std::size_t i = 0; i < out.poles.size(); ++i) {
    for (std::size_t j = 0; j < out.zeros.size(); ++j) {
      if (zero_dropped[j]) continue;
      if (std::abs(out.poles[i] - out.zeros[j]) < kFroissartDistance * std::abs(out.poles[i])) {
        pole_dropped[i] = zero_dropped[j] = true;
        out.froissart_pairs.push_back({out.poles[i], out.zeros[j]});
        out.notes.push_back("Froissart pair at " + describe(out.poles[i]));
        break;
      }
    }
  }
  std::vector<std::complex<double>> poles, zeros;
  for (std::size_t i = 0; i < out.poles.size(); ++i) {
    if (!pole_dropped[i]) poles.push_back(out.poles[i]);
  }
  for (std::size_t j = 0; j < out.zeros.size(); ++j) {
    if (!zero_dropped[j]) zeros.push_back(out.zeros[j]);
  }
  out.odd_levels = accept_levels(poles, "pole", out.notes);
  out.even_levels = accept_levels(zeros, "zero", out.notes);
  return out;
}

PadeApproximant pade_diagonal(std::span<const double> coefficients, std::size_t n) {
  if (n == 0 || coefficients.size() < 2 * n) {
    throw Error(ErrorCode::InsufficientOrder, "P_" + std::to_string(n) + "^" + std::to_string(n) + " needs " +
                                                  std::to_string(2 * n) + " coefficients");
  }
  for (std::size_t degree = n; degree >= 1; --degree) {
    try {
      PadeApproximant out = pade(coefficients, degree, degree);
      out.requested_degree = n;
      if (degree != n) {
        out.notes.push_back("singular system for degree " + std::to_string(n) + ", fell back to degree " +
                            std::to_string(degree));
      }
      return out;
    } catch (const Error& error) {
      if (error.code() != ErrorCode::SingularPadeSystem || degree == 1) throw;
    }
  }
  throw Error(ErrorCode::SingularPadeSystem, "no non-singular diagonal approximant");
}

PadeApproximant pade_diagonal(const EnergySeries& series, std::size_t n) {
  return pade_diagonal(series.coefficients(), n);
}

std::vector<LevelEntry> LevelTable::row(std::size_t pade_order) const {
  std::vector<LevelEntry> out;
  std::copy_if(entries.begin(), entries.end(), std::back_inserter(out),
               [&](const LevelEntry& e) { return e.pade_order == pade_order; });
  return out;
}

LevelTable level_table(std::span<const double> coefficients, std::size_t n_max) {
  if (n_max == 0 || coefficients.size() < 2 * n_max) {
    throw Error(ErrorCode::InsufficientOrder, "level table to order " + std::to_string(n_max) + " needs " +
                                                  std::to_string(2 * n_max) + " coefficients");
  }
  LevelTable table;
  table.max_order = n_max;
  std::vector<LevelEntry> previous;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const PadeApproximant approximant = pade_diagonal(coefficients, n);
    std::vector<LevelEntry> row;
    for (double e : approximant.even_levels) row.push_back({n, 0, Parity::Even, Method::Pade, e, 0.0});
    for (double e : approximant.odd_levels) row.push_back({n, 0, Parity::Odd, Method::Pade, e, 0.0});
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.value < b.value; });
    // P_n^n resolves about n levels; higher ones are kept as notes only.
    if (row.size() > n) {
      for (std::size_t i = n; i < row.size(); ++i) {
        std::ostringstream note;
        note.precision(10);
        note << "P" << n << ": unresolved " << to_string(row[i].parity) << " level " << row[i].value;
        table.notes.push_back(note.str());
      }
      row.resize(n);
    }
    for (std::size_t i = 0; i < row.size(); ++i) {
      row[i].index = i;
      row[i].error_estimate = i < previous.size() ? std::abs(row[i].value - previous[i].value)
                                                  : std::numeric_limits<double>::quiet_NaN();
    }
    for (const auto& note : approximant.notes) table.notes.push_back("P" + std::to_string(n) + ": " + note);
    table.entries.insert(table.entries.end(), row.begin(), row.end());
    previous = std::move(row);
  }
  return table;
}

LevelTable level_table(const EnergySeries& series, std::size_t n_max) {
  return level_table(series.coefficients(), n_max);
}

}  // namespace energy_series
