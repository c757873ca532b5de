#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "energy_series/eigensolve.hpp"
#include "energy_series/series.hpp"

namespace energy_series {

/// Series for V = -(ix)^N on the ray z = exp(-i theta) x, theta =
/// pt_stokes_angle(N). The coefficients are the |x|^N ones with a_k weighted
/// by cos((2k-1) theta) / cos(theta).
struct PTSeries {
  EnergySeries base;
  double exponent = 0.0;
  double theta = 0.0;
  std::vector<double> weights;   ///< index 0 is k = 1
  std::vector<double> weighted;  ///< a_k^PT
};

/// cos((2k-1) theta) / cos(theta); exactly zero when N is an integer and
/// (2k-1) theta is an odd multiple of pi/2.
double pt_weight(std::size_t k, double exponent);

PTSeries pt_series(const EnergySeries& series, double exponent);

/// Smallest positive root of sum_{k<=n} a_k^PT E^k = 1, scanning (0, 3 R]
/// with R the Hermitian radius estimate.
EigenEstimate pt_root(const PTSeries& pt, std::size_t n);

/// Every sign change found by the same scan, ascending.
std::vector<double> pt_roots(const PTSeries& pt, std::size_t n);

/// Stokes-contour expectation value of H in the truncated state Psi_n.
EigenEstimate pt_expectation(const PTSeries& pt, std::size_t n);

namespace detail {

struct ContourIntegrals {
  std::complex<double> overlap;  ///< int dx Psi_n Psi_{n-1}
  std::complex<double> norm;     ///< int dx Psi_n^2
};

/// Ray integrals with expansion parameter exp(-2 i theta) E; theta = 0 gives
/// the Hermitian integrals.
ContourIntegrals contour_integrals(const EnergySeries& base, std::size_t n, double theta, double energy);

/// <H>_n at an arbitrary ray angle.
double expectation_at_phase(const EnergySeries& base, std::size_t n, double theta, double energy);

}  // namespace detail

}  // namespace energy_series
