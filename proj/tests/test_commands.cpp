#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "symlap/acceptance.hpp"
#include "symlap/commands.hpp"
#include "symlap/error.hpp"

using namespace symlap;

namespace {

std::vector<std::vector<double>> parse_csv(const std::string& text, std::string* header) {
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  if (header) *header = line;
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST_CASE("format_double is shortest round-trip") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(-2.5e-10) == "-2.5e-10");
  CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("forward CSV over a small grid") {
  std::ostringstream os;
  cmd_forward({"sign", 1.0, 1.0, 1.0, -1.0, 1.0, 2, 1e-8}, os);
  std::string header;
  const auto rows = parse_csv(os.str(), &header);
  CHECK(header == "y,re,im,err");
  REQUIRE(rows.size() == 3);
  CHECK(rows[2][0] == 1.0);
  CHECK(std::abs(rows[2][1]) < 1e-8);
  CHECK(std::abs(rows[2][2] + 1.0) < 1e-8);
  CHECK(rows[1][0] == 0.0);
}

TEST_CASE("forward CSV single point") {
  std::ostringstream os;
  cmd_forward({"one", 1.0, 2.0, 3.0, 1.0, 1.0, 0, 1e-8}, os);
  const auto rows = parse_csv(os.str(), nullptr);
  REQUIRE(rows.size() == 1);
  CHECK(std::abs(rows[0][1] - 0.7) < 1e-8);
  CHECK(std::abs(rows[0][2] + 0.1) < 1e-8);
}

TEST_CASE("forward rejects bad input") {
  std::ostringstream os;
  CHECK_THROWS_AS(cmd_forward({"sign", 1.0, 0.0, 1.0, -1.0, 1.0, 2, 1e-8}, os), DivergenceError);
  CHECK_THROWS_AS(cmd_forward({"nosuch", 1.0, 1.0, 1.0, -1.0, 1.0, 2, 1e-8}, os), CatalogError);
}

TEST_CASE("invert CSV recovers f(t) = t") {
  std::ostringstream os;
  cmd_invert({"1/s^2 - 1/cs^2", -3.0, 3.0, 6}, os);
  std::string header;
  const auto rows = parse_csv(os.str(), &header);
  CHECK(header == "t,re,im");
  REQUIRE(rows.size() == 7);
  for (const auto& r : rows) CHECK(std::abs(r[1] - r[0]) < 1e-12);
}

TEST_CASE("invert CSV of the sign transform") {
  std::ostringstream os;
  cmd_invert({"1/s - 1/cs", -2.0, 2.0, 4}, os);
  for (const auto& r : parse_csv(os.str(), nullptr)) CHECK(r[1] == (r[0] >= 0 ? 1.0 : -1.0));
}

TEST_CASE("invert rejects mixed expressions") {
  std::ostringstream os;
  CHECK_THROWS_AS(cmd_invert({"1/(s*cs)", -1.0, 1.0, 2}, os), SplitError);
}

TEST_CASE("numeric inversion line") {
  for (double t : {0.0, 1.0, -1.0}) {
    std::ostringstream os;
    cmd_invert_numeric({"1/s - 1/cs", 1.0, 1.0, t, 1000.0, 1e-8}, os);
    const std::string line = os.str();
    CHECK(line.back() == '\n');
    CHECK(std::count(line.begin(), line.end(), '\n') == 1);
    const auto re_at = line.find("re=");
    REQUIRE(re_at != std::string::npos);
    const double re = std::stod(line.substr(re_at + 3));
    const double expected = t == 0.0 ? 0.0 : (t > 0 ? 1.0 : -1.0);
    CHECK(std::abs(re - expected) <= (t == 0.0 ? 5e-3 : 1e-2));
    CHECK(line.find("a_sensitivity=") != std::string::npos);
  }
}

TEST_CASE("report JSON schema") {
  std::vector<CriterionResult> fake{{"example1_grid", true, 1e-12, 1e-8, ""}, {"x", false, INFINITY, 1.0, "boom"}};
  const auto j = nlohmann::json::parse(acceptance_report_json(fake));
  REQUIRE(j["criteria"].size() == 2);
  CHECK(j["criteria"][0]["id"] == "example1_grid");
  CHECK(j["criteria"][0]["status"] == "pass");
  CHECK(j["criteria"][1]["status"] == "fail");
  CHECK(j["criteria"][1]["measured"].is_null());
  CHECK(j["all_passed"] == false);
}
