#include "energy_series/cli.hpp"
#include "energy_series/errors.hpp"
#include "energy_series/report.hpp"
#include "energy_series/reproduce.hpp"

#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

using namespace energy_series;
using namespace energy_series::cli;

namespace {

ErrorCode parse_error(const std::vector<std::string>& args) {
  try {
    parse_args(args, "");
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("arguments accepted");
  return ErrorCode::InvalidSpec;
}

int exit_code(const std::string& args) {
  const std::string cmd = std::string(ENERGY_SERIES_BIN) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("parse_args examples") {
  auto c = parse_args({"ground", "--potential", "square-well", "--order", "6"}, "");
  CHECK(c.command == Command::Ground);
  CHECK(*c.spec == PotentialSpec::square_well());
  CHECK(c.order == 6);
  CHECK(c.format == Format::Pretty);

  c = parse_args({"coeffs", "--potential", "power:4", "--order", "3", "--format", "json"}, "");
  CHECK(c.command == Command::Coeffs);
  CHECK(*c.spec == PotentialSpec::power_law(4));
  CHECK(c.order == 3);
  CHECK(c.format == Format::Json);

  c = parse_args({"pt", "--N", "3", "--order", "2"}, "");
  CHECK(c.command == Command::PT);
  CHECK(c.exponent == 3.0);

  c = parse_args({"reproduce", "T1"}, "");
  CHECK(c.target == "T1");
}

TEST_CASE("parse_args usage errors") {
  CHECK(parse_error({"ground", "--potential", "power:0"}) == ErrorCode::Usage);
  CHECK(parse_error({"ground", "--potential", "quadratic"}) == ErrorCode::Usage);
  CHECK(parse_error({"ground"}) == ErrorCode::Usage);
  CHECK(parse_error({"ground", "--potential", "power:2", "--order", "0"}) == ErrorCode::Usage);
  CHECK(parse_error({"ground", "--potential", "power:2", "--format", "xml"}) == ErrorCode::Usage);
  CHECK(parse_error({"frobnicate"}) == ErrorCode::Usage);
  CHECK(parse_error({}) == ErrorCode::Usage);
  CHECK(parse_error({"pt", "--N", "1"}) == ErrorCode::Usage);
  CHECK(parse_error({"oracle-f", "--potential", "power:2"}) == ErrorCode::Usage);
  CHECK(parse_error({"shanks"}) == ErrorCode::Usage);
}

TEST_CASE("grid flags and the environment override") {
  auto c = parse_args({"coeffs", "--potential", "power:2", "--base-step", "0.002", "--xmax-cap", "30"},
                      R"({"tail_tol": 1e-12, "base_step": 0.004})");
  CHECK(c.grid.base_step == 0.002);
  CHECK(c.grid.xmax_cap == 30.0);
  CHECK(c.grid.tail_tol == 1e-12);
  CHECK_THROWS_AS(apply_grid_override({}, R"({"bogus": 1})"), Error);
  CHECK_THROWS_AS(apply_grid_override({}, "not json"), Error);
  CHECK_THROWS_AS(apply_grid_override({}, R"({"base_step": -1})"), Error);
  CHECK(apply_grid_override({}, "") == GridConfig{});
}

TEST_CASE("report JSON round-trips exactly") {
  const auto c = parse_args({"coeffs", "--potential", "power:1", "--order", "4"}, "");
  const Report r = make_report(c);
  REQUIRE(r.rows.size() == 4);
  CHECK(report_from_json(to_json(r)) == r);

  Report odd;
  odd.title = "x";
  odd.columns = {"a", "b"};
  odd.add_row({cell(0.1 + 0.2), cell()});
  odd.add_row({cell(std::nan("")), cell("text, with comma")});
  odd.meta["k"] = cell(1e-300);
  CHECK(report_from_json(to_json(odd)) == odd);
  CHECK_THROWS_AS(odd.add_row({cell(1.0)}), Error);
  CHECK_THROWS_AS(report_from_json("{"), Error);
}

TEST_CASE("CSV output has a header and one line per row") {
  const auto c = parse_args({"ground", "--potential", "power:2", "--order", "3", "--format", "csv"}, "");
  std::ostringstream out;
  write(out, make_report(c), c.format);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "n,E_n,error_estimate,E_n/E_exact");
  int count = 0;
  while (std::getline(in, line)) ++count;
  CHECK(count == 3);
}

TEST_CASE("every command produces a report") {
  const std::vector<std::vector<std::string>> cases = {
      {"coeffs", "--potential", "square-well", "--order", "3"},
      {"ground", "--potential", "power:1", "--order", "4"},
      {"shanks", "--potential", "power:2", "--order", "5"},
      {"levels", "--potential", "power:2", "--pade-order", "2"},
      {"expect", "--potential", "power:2", "--order", "2"},
      {"pt", "--N", "3", "--order", "3"},
      {"oracle", "--potential", "power:4", "--level", "2"},
      {"oracle-f", "--potential", "power:1", "--E", "1.0"},
  };
  for (const auto& args : cases) {
    CAPTURE(args[0]);
    const Report r = make_report(parse_args(args, ""));
    CHECK_FALSE(r.rows.empty());
    CHECK(r.meta.count("version") == 1);
  }
}

TEST_CASE("shanks reads a CSV column") {
  const auto path = std::filesystem::temp_directory_path() / "energy_series_shanks.csv";
  {
    std::ofstream f(path);
    f << "n,value\n";
    for (int n = 0; n < 5; ++n) f << n << "," << 1.0 + std::pow(0.5, n) << "\n";
  }
  const Report r = make_report(parse_args({"shanks", "--input", path.string(), "--column", "value"}, ""));
  REQUIRE(r.rows.size() == 5);
  CHECK(std::get<double>(r.rows[1][2]) == doctest::Approx(1.0));
  CHECK(std::holds_alternative<std::monostate>(r.rows[0][2]));
  CHECK_THROWS_AS(make_report(parse_args({"shanks", "--input", path.string(), "--column", "nope"}, "")), Error);
  std::filesystem::remove(path);
}

TEST_CASE("reproduction manifest") {
  std::set<std::string> ids;
  for (const auto& t : reproduction_manifest()) ids.insert(t.id);
  for (const char* id : {"T1", "T2", "T3", "T4", "T5", "T6", "T7", "S3-shanks", "S4-expect", "S5-pt", "E18", "E20",
                         "E22", "E23"}) {
    CHECK(ids.count(id) == 1);
  }
  CHECK_THROWS_AS(reproduction_target("T9"), Error);

  const Report e18 = reproduce("E18");
  CHECK_FALSE(e18.tolerance_breach);
  REQUIRE(e18.rows.size() == 7);
  for (const auto& row : e18.rows) CHECK(std::get<std::string>(row[5]) == "ok");

  const Report t5 = reproduce("T5");
  CHECK_FALSE(t5.tolerance_breach);
  CHECK(t5.rows.size() == 10);
}

TEST_CASE("exit codes of the executable") {
  CHECK(exit_code("ground --potential square-well --order 4") == 0);
  CHECK(exit_code("--help") == 0);
  CHECK(exit_code("ground --potential power:0") == 1);
  CHECK(exit_code("bogus") == 1);
  CHECK(exit_code("ground --potential power:2 --xmax-cap 2") == 2);
  CHECK(exit_code("reproduce T1 --format csv") == 0);
  CHECK(exit_code("reproduce T1 --base-step 0.5") == 3);
}
