#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "energy_series/potential.hpp"

namespace energy_series {

/// phi_k and its first two derivatives on the profile grid.
struct OrderGrid {
  std::vector<double> phi;
  std::vector<double> dphi;
  std::vector<double> d2phi;
};

/// Truncated power series f(E) = sum_{k=1}^n a_k E^k, together with the
/// reduction-of-order functions phi_k (psi_k = psi0 phi_k) it was built from.
///
/// Values are immutable snapshots; advance_order() returns a new series
/// sharing the lower-order grids with its input.
class EnergySeries {
 public:
  /// Order zero: no coefficients, phi_0 = 1.
  explicit EnergySeries(std::shared_ptr<const ZeroEnergyProfile> profile);

  std::size_t order() const noexcept { return coefficients_.size(); }

  /// a_1..a_n (index 0 holds a_1).
  std::span<const double> coefficients() const noexcept { return coefficients_; }
  /// 1-based access, a_k.
  double coefficient(std::size_t k) const;
  /// Per-coefficient error estimates; NaN until a second resolution has
  /// been compared (see build_series).
  std::span<const double> error_estimates() const noexcept { return errors_; }

  const ZeroEnergyProfile& profile() const noexcept { return *profile_; }
  const std::shared_ptr<const ZeroEnergyProfile>& profile_ptr() const noexcept { return profile_; }

  /// Grids for order k, 0 <= k <= order().
  const OrderGrid& grids(std::size_t k) const;

  EnergySeries with_error_estimates(std::vector<double> errors) const;

 private:
  friend EnergySeries advance_order(const EnergySeries& series);

  std::shared_ptr<const ZeroEnergyProfile> profile_;
  std::vector<std::shared_ptr<const OrderGrid>> orders_;
  std::vector<double> coefficients_;
  std::vector<double> errors_;
};

/// Appends the next order by one backward cumulative pass for
/// T_k(x) = int_x^inf psi0^2 phi_{k-1} and one forward pass for
/// phi_k = int_0^x T_k / psi0^2. a_k = -phi_k'(0) / psi0'(0).
EnergySeries advance_order(const EnergySeries& series);

/// Profile plus `order` orders at `config`, with error estimates taken as the
/// difference from the same construction at config.coarsened().
EnergySeries build_series(const PotentialSpec& spec, std::size_t order, const GridConfig& config = {});

/// Horner evaluation of the partial sum sum_{k=1}^n a_k E^k.
double eval_f(std::span<const double> coefficients, double energy) noexcept;
double eval_f(const EnergySeries& series, double energy) noexcept;

}  // namespace energy_series
