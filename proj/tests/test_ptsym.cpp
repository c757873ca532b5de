#include "energy_series/eigensolve.hpp"
#include "energy_series/errors.hpp"
#include "energy_series/oracles.hpp"
#include "energy_series/ptsym.hpp"
#include "energy_series/series.hpp"
#include "energy_series/variational.hpp"

#include "doctest.h"

#include <cmath>
#include <numbers>

using namespace energy_series;

TEST_CASE("phase weights for N = 3") {
  CHECK(pt_weight(1, 3) == 1.0);
  CHECK(pt_weight(2, 3) == doctest::Approx(std::cos(3 * std::numbers::pi / 10) / std::cos(std::numbers::pi / 10)));
  CHECK(pt_weight(2, 3) == doctest::Approx(1.0 / std::numbers::phi));
  CHECK(pt_weight(3, 3) == 0.0);
  // 15 theta = 3 pi/2; 13 theta is not an odd multiple of pi/2
  CHECK(pt_weight(8, 3) == 0.0);
  CHECK(pt_weight(7, 3) != 0.0);
  // N = 4: theta = pi/6, 3 theta = pi/2
  CHECK(pt_weight(2, 4) == 0.0);
  CHECK(pt_weight(3, 4) == doctest::Approx(-1.0));
  for (std::size_t k = 1; k < 6; ++k) CHECK(pt_weight(k, 2) == 1.0);
  CHECK_THROWS_AS(pt_weight(0, 3), Error);
}

TEST_CASE("pt_series keeps the |x|^3 coefficients") {
  const auto base = build_series(PotentialSpec::power_law(3), 4);
  const auto pt = pt_series(base, 3);
  CHECK(pt.theta == doctest::Approx(std::numbers::pi / 10));
  for (std::size_t k = 1; k <= 4; ++k) {
    CHECK(pt.base.coefficient(k) == base.coefficient(k));
    CHECK(pt.weighted[k - 1] == pt.weights[k - 1] * base.coefficient(k));
  }
  CHECK(pt.weighted[0] == base.coefficient(1));
  CHECK(pt.weighted[2] == 0.0);
}

TEST_CASE("pt_series preconditions") {
  const auto base = build_series(PotentialSpec::power_law(1), 2);
  try {
    pt_series(base, 1);
    FAIL("accepted N = 1");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BrokenRegime);
  }
  CHECK_THROWS_AS(pt_series(base, 3), Error);
  CHECK_THROWS_AS(pt_series(build_series(PotentialSpec::square_well(), 2), 3), Error);
}

TEST_CASE("ix^3 truncated roots and expectation values") {
  const double e0 = oracles::pt_ground_energy(3);
  CHECK(std::abs(e0 - 1.156267072) < 1e-8);
  const auto pt = pt_series(build_series(PotentialSpec::power_law(3), 3), 3);
  const double e1 = pt_root(pt, 1).value;
  const double e2 = pt_root(pt, 2).value;
  const double e3 = pt_root(pt, 3).value;
  CHECK(std::abs(e1 / e0 - 1.10366) < 1e-4);
  CHECK(std::abs(e2 / e0 - 0.98258) < 1e-4);
  CHECK(e3 == e2);
  CHECK(e1 == doctest::Approx(1.0 / pt.base.coefficient(1)));
  CHECK(pt_root(pt, 2).method == Method::PTRoot);

  CHECK(std::abs(pt_expectation(pt, 1).value / e0 - 0.984) < 1e-3);
  CHECK(std::abs(pt_expectation(pt, 2).value / e0 - 0.997) < 1e-3);
}

TEST_CASE("zero phase reduces to the Hermitian expectation value") {
  const auto s = build_series(PotentialSpec::power_law(2), 3);
  for (std::size_t n = 1; n <= 3; ++n) {
    const double e = truncated_root(s, n).value;
    CHECK(detail::expectation_at_phase(s, n, 0.0, e) == doctest::Approx(expectation(s, n).value).epsilon(1e-13));
    const auto c = detail::contour_integrals(s, n, 0.0, e);
    CHECK(c.norm.imag() == 0.0);
  }
}

TEST_CASE("no real root is reported as such") {
  auto pt = pt_series(build_series(PotentialSpec::power_law(3), 2), 3);
  pt.weighted = {-1.0, -1.0};
  try {
    pt_root(pt, 2);
    FAIL("found a root of a negative polynomial");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoRealRoot);
  }
}
