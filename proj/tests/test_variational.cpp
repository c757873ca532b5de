#include "energy_series/eigensolve.hpp"
#include "energy_series/errors.hpp"
#include "energy_series/oracles.hpp"
#include "energy_series/series.hpp"
#include "energy_series/variational.hpp"

#include "doctest.h"

#include <cmath>
#include <numbers>
#include <vector>

using namespace energy_series;

namespace {

double ratio(const EnergySeries& s, std::size_t n, double exact) { return expectation(s, n).value / exact; }

}  // namespace

TEST_CASE("square-well expectation values") {
  const auto s = build_series(PotentialSpec::square_well(), 3);
  const double exact = std::numbers::pi * std::numbers::pi / 4.0;
  CHECK(std::abs(ratio(s, 1, exact) - 1.001292) < 1e-5);
  CHECK(std::abs(ratio(s, 2, exact) - 1.000061) < 1e-5);
  CHECK(std::abs(ratio(s, 3, exact) - 1.000003) < 1e-5);
}

TEST_CASE("harmonic expectation values") {
  const auto s = build_series(PotentialSpec::power_law(2), 3);
  // <H>_1 from a 40-digit Taylor-series ODE solve with the Bessel-K profile.
  CHECK(std::abs(ratio(s, 1, 1.0) - 1.0039054530) < 1e-8);
  CHECK(std::abs(ratio(s, 2, 1.0) - 1.000343) < 1e-5);
  CHECK(std::abs(ratio(s, 3, 1.0) - 1.000035) < 1e-5);
}

TEST_CASE("linear and quartic expectation values") {
  const auto lin = build_series(PotentialSpec::power_law(1), 3);
  const double e_lin = oracles::shooting_level(PotentialSpec::power_law(1), 0).value;
  CHECK(std::abs(ratio(lin, 1, e_lin) - 1.009813) < 1e-5);
  CHECK(std::abs(ratio(lin, 2, e_lin) - 1.001427) < 1e-5);
  CHECK(ratio(lin, 3, e_lin) < ratio(lin, 2, e_lin));

  const auto quartic = build_series(PotentialSpec::power_law(4), 2);
  const double e_q = oracles::shooting_level(PotentialSpec::power_law(4), 0).value;
  CHECK(std::abs(ratio(quartic, 1, e_q) - 1.00202) < 1e-5);
  CHECK(std::abs(ratio(quartic, 2, e_q) - 1.00012) < 1e-5);
}

TEST_CASE("E_n > <H>_n > E_exact") {
  for (const char* text : {"square-well", "power:1", "power:2", "power:3", "power:4"}) {
    CAPTURE(text);
    const auto spec = PotentialSpec::parse(text);
    const auto s = build_series(spec, 4);
    const double exact = oracles::shooting_level(spec, 0).value;
    for (std::size_t n = 1; n <= 4; ++n) {
      CAPTURE(n);
      const auto h = expectation(s, n);
      CHECK(h.method == Method::Expectation);
      CHECK(truncated_root(s, n).value > h.value);
      CHECK(h.value > exact);
    }
  }
}

TEST_CASE("Psi_n satisfies -Psi_n'' + V Psi_n = E Psi_{n-1}") {
  for (const char* text : {"power:1", "power:2", "power:4"}) {
    CAPTURE(text);
    const auto spec = PotentialSpec::parse(text);
    const auto s = build_series(spec, 3);
    for (std::size_t n = 1; n <= 3; ++n) {
      const double e = truncated_root(s, n).value;
      const auto psi = assemble(s, n, e);
      const auto prev = assemble(s, n - 1, e);
      const auto& x = psi.grid();
      double worst = 0.0;
      for (std::size_t i = 1; i + 1 < x.size(); ++i) {
        const double d2 = (psi.derivatives[i + 1] - psi.derivatives[i - 1]) / (x[i + 1] - x[i - 1]);
        const double lhs = -d2 + spec.value(x[i]) * psi.values[i];
        worst = std::max(worst, std::abs(lhs - e * prev.values[i]));
      }
      CHECK(worst < 1e-5);
    }
  }
}

TEST_CASE("assemble defaults") {
  const auto s = build_series(PotentialSpec::power_law(2), 2);
  const auto psi0 = assemble(s, 0);
  CHECK(psi0.energy == 0.0);
  CHECK(psi0.values == s.profile().psi0);
  const auto psi2 = assemble(s, 2);
  CHECK(psi2.energy == truncated_root(s, 2).value);
  CHECK(psi2.values[0] == 1.0);
  CHECK_THROWS_AS(assemble(s, 3), Error);
  CHECK_THROWS_AS(expectation(s, 0), Error);
}

TEST_CASE("normalization integrals converge with the grid") {
  const auto coarse = build_series(PotentialSpec::power_law(2), 2);
  const auto fine = build_series(PotentialSpec::power_law(2), 2, GridConfig{}.refined());
  const auto a = expectation_integrals(coarse, 2);
  const auto b = expectation_integrals(fine, 2);
  CHECK(a.norm == doctest::Approx(b.norm).epsilon(1e-10));
  CHECK(a.overlap == doctest::Approx(b.overlap).epsilon(1e-10));
}
