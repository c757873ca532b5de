#include "energy_series/eigensolve.hpp"
#include "energy_series/errors.hpp"
#include "energy_series/oracles.hpp"
#include "energy_series/series.hpp"

#include "doctest.h"

#include <cmath>
#include <numbers>
#include <vector>

using namespace energy_series;

namespace {

constexpr double kSquareWell = std::numbers::pi * std::numbers::pi / 4.0;

void check_roots(const char* spec, std::size_t order, const std::vector<double>& expected) {
  const auto s = build_series(PotentialSpec::parse(spec), order);
  const auto roots = truncated_roots(s, order);
  REQUIRE(roots.size() == expected.size());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    CAPTURE(spec);
    CAPTURE(i);
    CHECK(std::abs(roots[i].value - expected[i]) < 1e-4);
    CHECK(roots[i].order == i + 1);
    CHECK(roots[i].method == Method::TruncatedRoot);
  }
}

}  // namespace

TEST_CASE("positive_root of simple polynomials") {
  CHECK(positive_root(std::vector<double>{0.5}) == doctest::Approx(2.0));
  // E/2 + E^2/2 = 1 -> E = 1
  CHECK(positive_root(std::vector<double>{0.5, 0.5}) == doctest::Approx(1.0));
  CHECK_THROWS_AS(positive_root(std::vector<double>{}), Error);
  try {
    positive_root(std::vector<double>{0.5, -0.1});
    FAIL("accepted a negative coefficient");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoPositiveCoefficients);
  }
}

TEST_CASE("truncated roots match the reference sequences") {
  check_roots("square-well", 6, {3.0, 2.56231, 2.48906, 2.47267, 2.46871, 2.46773});
  check_roots("power:2", 6, {1.27324, 1.05949, 1.01721, 1.00543, 1.00177, 1.00059});
  check_roots("power:1", 6, {1.37172, 1.11052, 1.05136, 1.03168, 1.02415, 1.02107});
  check_roots("power:4", 3, {1.31010, 1.10846, 1.07240});
}

TEST_CASE("roots decrease monotonically toward the exact level and solve f_n = 1") {
  for (const char* text : {"square-well", "power:1", "power:2", "power:3", "power:4"}) {
    CAPTURE(text);
    const auto spec = PotentialSpec::parse(text);
    const auto s = build_series(spec, 6);
    const auto roots = truncated_roots(s, 6);
    const double exact = oracles::shooting_level(spec, 0).value;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      CHECK(roots[i].value > exact);
      if (i > 0) CHECK(roots[i].value < roots[i - 1].value);
      const double residual = eval_f(s.coefficients().first(i + 1), roots[i].value) - 1.0;
      CHECK(std::abs(residual) < 1e-12);
    }
  }
}

TEST_CASE("error estimates follow the geometric model") {
  const auto s = build_series(PotentialSpec::power_law(2), 6);
  const auto roots = truncated_roots(s, 6);
  CHECK(std::isnan(roots[0].error_estimate));
  for (std::size_t i = 2; i < roots.size(); ++i) {
    const double actual = roots[i].value - 1.0;
    CHECK(roots[i].error_estimate > 0.3 * actual);
    CHECK(roots[i].error_estimate < 3.0 * actual);
  }
  CHECK(truncated_root(s, 4).value == roots[3].value);
  CHECK_THROWS_AS(truncated_root(s, 7), Error);
  CHECK_THROWS_AS(truncated_root(s, 0), Error);
}

TEST_CASE("radius estimate is close to the first excited level") {
  struct Case {
    const char* spec;
    double excited;
  };
  for (auto c : {Case{"square-well", 4.0 * kSquareWell}, Case{"power:2", 3.0}, Case{"power:1", 2.338107410}}) {
    CAPTURE(c.spec);
    const auto s = build_series(PotentialSpec::parse(c.spec), 8);
    CHECK(std::abs(radius_estimate(s) / c.excited - 1.0) < 0.05);
  }
  CHECK_THROWS_AS(radius_estimate(std::vector<double>{1.0, 0.5}), Error);
}

TEST_CASE("fitted convergence rate matches E0/E1") {
  struct Case {
    const char* spec;
    double rate;
  };
  for (auto c : {Case{"square-well", 0.25}, Case{"power:2", 1.0 / 3.0}, Case{"power:1", 1.018792972 / 2.338107410}}) {
    CAPTURE(c.spec);
    const auto s = build_series(PotentialSpec::parse(c.spec), 8);
    const auto roots = truncated_roots(s, 6);
    const ErrorModel m = error_model(s, roots);
    CHECK(std::abs(m.r / c.rate - 1.0) < 0.10);
    CHECK(m.radius == doctest::Approx(radius_estimate(s)));
    CHECK(m.theoretical_r == doctest::Approx(m.limit / m.radius));
  }
}

TEST_CASE("error model rejects short or constant sequences") {
  const auto s = build_series(PotentialSpec::power_law(2), 4);
  const auto roots = truncated_roots(s, 4);
  CHECK_THROWS_AS(error_model(s, std::span(roots).first(2)), Error);
  std::vector<EigenEstimate> flat(4, roots[0]);
  try {
    error_model(s, flat);
    FAIL("accepted a constant sequence");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateSequence);
  }
}
