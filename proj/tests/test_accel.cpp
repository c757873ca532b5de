#include "energy_series/accel.hpp"
#include "energy_series/eigensolve.hpp"
#include "energy_series/errors.hpp"
#include "energy_series/series.hpp"

#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

using namespace energy_series;

namespace {

void check_row(const LevelTable& t, std::size_t n, const std::vector<double>& expected, double tol) {
  const auto row = t.row(n);
  REQUIRE(row.size() == expected.size());
  for (std::size_t i = 0; i < row.size(); ++i) {
    CAPTURE(n);
    CAPTURE(i);
    CHECK(std::abs(row[i].value - expected[i]) < (n == 4 && i == 0 ? 1e-4 : tol));
    CHECK(row[i].parity == (i % 2 == 0 ? Parity::Even : Parity::Odd));
    CHECK(row[i].index == i);
  }
}

}  // namespace

TEST_CASE("Shanks is exact on geometric sequences") {
  std::vector<double> seq;
  for (int n = 0; n < 8; ++n) seq.push_back(2.0 + 0.7 * std::pow(0.4, n));
  const auto out = shanks(seq);
  REQUIRE(out.size() == seq.size() - 2);
  for (const auto& t : out) {
    REQUIRE(t.value);
    CHECK(*t.value == doctest::Approx(2.0).epsilon(1e-12));
  }
}

TEST_CASE("Shanks flags degenerate entries and short input") {
  const auto out = shanks(std::vector<double>{1.0, 1.0, 1.0, 2.0});
  REQUIRE(out.size() == 2);
  CHECK(out[0].degenerate());
  CHECK_FALSE(out[1].degenerate());
  try {
    shanks(std::vector<double>{1.0, 2.0});
    FAIL("accepted two terms");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooShort);
  }
}

TEST_CASE("Shanks of the square-well ratios") {
  const auto s = build_series(PotentialSpec::square_well(), 6);
  std::vector<double> ratios;
  for (const auto& r : truncated_roots(s, 6)) ratios.push_back(r.value / (std::numbers::pi * std::numbers::pi / 4.0));
  const auto out = shanks(ratios);
  const double expected[] = {1.00281, 1.00022, 1.00002, 1.00000};
  for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(*out[i].value - expected[i]) < 1e-4);
}

TEST_CASE("polynomial roots") {
  // (x - 1)(x - 2)(x + 3) = x^3 - 7x + 6
  auto roots = polynomial_roots(std::vector<double>{6.0, -7.0, 0.0, 1.0});
  REQUIRE(roots.size() == 3);
  std::vector<double> re;
  for (auto r : roots) {
    CHECK(std::abs(r.imag()) < 1e-12);
    re.push_back(r.real());
  }
  std::sort(re.begin(), re.end());
  CHECK(re[0] == doctest::Approx(-3.0));
  CHECK(re[1] == doctest::Approx(1.0));
  CHECK(re[2] == doctest::Approx(2.0));
}

TEST_CASE("Pade re-expands to the input coefficients") {
  const auto s = build_series(PotentialSpec::power_law(2), 8);
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto p = pade_diagonal(s, n);
    const auto back = p.taylor(2 * n);
    for (std::size_t k = 0; k < 2 * n; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(back[k] == doctest::Approx(s.coefficient(k + 1)).epsilon(1e-9));
    }
  }
}

TEST_CASE("Pade of a rational series is exact") {
  // f = E / (1 - E/4): a_k = 4^{1-k}
  std::vector<double> a;
  for (int k = 1; k <= 4; ++k) a.push_back(std::pow(0.25, k - 1));
  const auto p = pade(a, 1, 1);
  CHECK(p.den_degree == 1);
  CHECK(p.evaluate(2.0) == doctest::Approx(4.0));
  REQUIRE(p.odd_levels.size() == 1);
  CHECK(p.odd_levels[0] == doctest::Approx(4.0));
  REQUIRE(p.even_levels.size() == 1);
  CHECK(p.even_levels[0] == doctest::Approx(0.8));
}

TEST_CASE("singular diagonal systems fall back to a lower order") {
  // f = E / (1 - E/4) again: [2/2] is rank deficient.
  std::vector<double> a;
  for (int k = 1; k <= 4; ++k) a.push_back(std::pow(0.25, k - 1));
  const auto p = pade_diagonal(a, 2);
  CHECK(p.requested_degree == 2);
  CHECK(p.den_degree == 1);
  CHECK_FALSE(p.notes.empty());
  CHECK(p.odd_levels.at(0) == doctest::Approx(4.0));
}

TEST_CASE("square-well P_1^1 gives 2.5") {
  const auto s = build_series(PotentialSpec::square_well(), 2);
  const auto p = pade_diagonal(s, 1);
  REQUIRE(!p.even_levels.empty());
  CHECK(p.even_levels[0] == doctest::Approx(2.5).epsilon(1e-12));
}

TEST_CASE("level tables match the reference Pade rows") {
  const auto sw = level_table(build_series(PotentialSpec::square_well(), 8), 4);
  check_row(sw, 1, {2.50000}, 1e-3);
  check_row(sw, 2, {2.46744, 9.94122}, 1e-3);
  check_row(sw, 3, {2.46740, 9.86993, 22.29341}, 1e-3);
  check_row(sw, 4, {2.46740, 9.86960, 22.20737, 39.56379}, 1e-3);

  const auto ho = level_table(build_series(PotentialSpec::power_law(2), 8), 4);
  check_row(ho, 1, {1.02478}, 1e-3);
  check_row(ho, 2, {1.00013, 3.08260}, 1e-3);
  check_row(ho, 3, {1.00000, 3.00237, 5.12647}, 1e-3);
  check_row(ho, 4, {1.00000, 3.00003, 5.00701, 7.16012}, 1e-3);

  const auto lin = level_table(build_series(PotentialSpec::power_law(1), 8), 4);
  check_row(lin, 1, {1.06291}, 1e-3);
  check_row(lin, 2, {1.01948, 2.48513}, 1e-3);
  check_row(lin, 3, {1.01880, 2.34902, 3.44920}, 1e-3);
  check_row(lin, 4, {1.01879, 2.33863, 3.27292, 4.35282}, 1e-3);
}

TEST_CASE("quartic [2/1] approximant") {
  const auto s = build_series(PotentialSpec::power_law(4), 3);
  const auto p = pade(s.coefficients(), 2, 1);
  REQUIRE(!p.even_levels.empty());
  REQUIRE(!p.odd_levels.empty());
  CHECK(std::abs(p.even_levels[0] - 1.06137) < 1e-3);
  CHECK(std::abs(p.odd_levels[0] - 4.13364) < 1e-3);
}

TEST_CASE("level table needs 2n coefficients") {
  const auto s = build_series(PotentialSpec::power_law(2), 5);
  CHECK_THROWS_AS(level_table(s, 3), Error);
  CHECK_THROWS_AS(pade(s.coefficients(), 3, 3), Error);
}
