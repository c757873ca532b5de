#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "energy_series/eigensolve.hpp"
#include "energy_series/series.hpp"

namespace energy_series {

/// Psi_n(x) = psi0(x) [1 + sum_{k<=n} E^k phi_k(x)] on the profile grid.
struct TruncatedWavefunction {
  std::shared_ptr<const ZeroEnergyProfile> profile;
  std::vector<double> values;
  std::vector<double> derivatives;
  double energy = 0.0;
  std::size_t order = 0;

  const std::vector<double>& grid() const noexcept { return profile->grid; }
};

/// Psi_n at `energy`, defaulting to the truncated root E_n.
TruncatedWavefunction assemble(const EnergySeries& series, std::size_t n,
                               std::optional<double> energy = std::nullopt);

/// int_0^inf u v over the half line: grid quadrature plus the exponential
/// tail beyond x_max.
double half_line_overlap(const TruncatedWavefunction& u, const TruncatedWavefunction& v);

struct ExpectationIntegrals {
  double energy = 0.0;   ///< E_n
  double overlap = 0.0;  ///< int Psi_n Psi_{n-1}
  double norm = 0.0;     ///< int Psi_n^2
};

ExpectationIntegrals expectation_integrals(const EnergySeries& series, std::size_t n);

/// <H>_n = E_n int Psi_n Psi_{n-1} / int Psi_n^2, using H Psi_n = E Psi_{n-1}.
EigenEstimate expectation(const EnergySeries& series, std::size_t n);

}  // namespace energy_series
