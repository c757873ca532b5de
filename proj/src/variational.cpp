#include "energy_series/variational.hpp"

#include <cmath>
#include <string>

#include "energy_series/errors.hpp"
#include "energy_series/quadrature.hpp"

namespace energy_series {

TruncatedWavefunction assemble(const EnergySeries& series, std::size_t n, std::optional<double> energy) {
  if (n > series.order()) {
    throw Error(ErrorCode::InsufficientOrder, "wavefunction of order " + std::to_string(n) + " needs phi_" +
                                                  std::to_string(n));
  }
  const double e = energy ? *energy : (n == 0 ? 0.0 : truncated_root(series, n).value);
  const ZeroEnergyProfile& p = series.profile();
  const std::size_t size = p.size();

  std::vector<double> sum(size, 1.0), dsum(size, 0.0);
  double power = 1.0;
  for (std::size_t k = 1; k <= n; ++k) {
    power *= e;
    const OrderGrid& g = series.grids(k);
    for (std::size_t i = 0; i < size; ++i) {
      sum[i] += power * g.phi[i];
      dsum[i] += power * g.dphi[i];
    }
  }

  TruncatedWavefunction out;
  out.profile = series.profile_ptr();
  out.energy = e;
  out.order = n;
  out.values.resize(size);
  out.derivatives.resize(size);
  for (std::size_t i = 0; i < size; ++i) {
    out.values[i] = p.psi0[i] * sum[i];
    out.derivatives[i] = p.dpsi0[i] * sum[i] + p.psi0[i] * dsum[i];
  }
  return out;
}

double half_line_overlap(const TruncatedWavefunction& u, const TruncatedWavefunction& v) {
  double total = quadrature::integrate_product(u.grid(), u.values, u.derivatives, v.values, v.derivatives);
  const std::size_t last = u.values.size() - 1;
  if (!u.profile->spec.hard_wall() && u.values[last] != 0.0 && v.values[last] != 0.0) {
    const double decay = -(u.derivatives[last] / u.values[last] + v.derivatives[last] / v.values[last]);
    if (decay > 0.0) total += u.values[last] * v.values[last] / decay;
  }
  return total;
}

ExpectationIntegrals expectation_integrals(const EnergySeries& series, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InsufficientOrder, "expectation value needs n >= 1");
  const double e = truncated_root(series, n).value;
  const TruncatedWavefunction current = assemble(series, n, e);
  const TruncatedWavefunction previous = assemble(series, n - 1, e);
  return {e, half_line_overlap(current, previous), half_line_overlap(current, current)};
}

EigenEstimate expectation(const EnergySeries& series, std::size_t n) {
  const ExpectationIntegrals parts = expectation_integrals(series, n);
  EigenEstimate out;
  out.order = n;
  out.value = parts.energy * parts.overlap / parts.norm;
  out.method = Method::Expectation;
  out.parity = Parity::Even;
  // <H>_n lies between the exact level and E_n, so the bound on E_n applies.
  out.error_estimate = truncated_root(series, n).error_estimate;
  return out;
}

}  // namespace energy_series
