#pragma once

#include <complex>

#include <Eigen/Dense>

// Lowest eigenvalue (by real part) of p^2 + i x^3 in a truncated harmonic
// oscillator basis with frequency omega. Independent of the shooting oracle.
inline std::complex<double> ix3_ground_by_diagonalization(int size, double omega) {
  const int big = size + 3;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(big, big);
  for (int n = 1; n < big; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  const Eigen::MatrixXd x = (a + a.transpose()) / std::sqrt(2.0 * omega);
  const Eigen::MatrixXd p = (a.transpose() - a) * std::sqrt(omega / 2.0);  // p = i * this
  const Eigen::MatrixXd p2 = -(p * p);
  const Eigen::MatrixXd x3 = x * x * x;
  Eigen::MatrixXcd h(size, size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) h(i, j) = std::complex<double>(p2(i, j), x3(i, j));
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(h, false);
  std::complex<double> best(1e300, 0.0);
  for (int i = 0; i < size; ++i) {
    const auto e = solver.eigenvalues()(i);
    if (e.real() < best.real()) best = e;
  }
  return best;
}
