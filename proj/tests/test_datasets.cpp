/*
 * Copyright 2026 The spep Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "spep/datasets.hpp"
#include "spep/errors.hpp"
#include "spep/protocol.hpp"
#include "spep/verify.hpp"

using namespace spep;

namespace {

std::vector<std::vector<std::string>> data_rows(const std::string& csv, std::string* header = nullptr) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(csv);
  std::string line;
  bool seen_header = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!seen_header) {
      seen_header = true;
      if (header) *header = line;
      continue;
    }
    std::vector<std::string> cells;
    std::istringstream cell_in(line);
    std::string cell;
    while (std::getline(cell_in, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

double num(const std::string& s) {
  double v = 0.0;
  std::from_chars(s.data(), s.data() + s.size(), v);
  return v;
}

}  // namespace

TEST_CASE("grid values include both ends") {
  const auto v = FidelityGrid{0.5, 1.0, 6}.values();
  REQUIRE(v.size() == 6);
  CHECK(v.front() == 0.5);
  CHECK(v.back() == 1.0);
  CHECK(v[3] == doctest::Approx(0.8));
  CHECK_THROWS_AS(FidelityGrid({0.5, 1.0, 1}).validate(), DomainError);
  CHECK_THROWS_AS(FidelityGrid({0.9, 0.5, 5}).validate(), DomainError);
  CHECK_THROWS_AS(FidelityGrid({0.5, 1.1, 5}).validate(), DomainError);
}

TEST_CASE("curves dataset rows") {
  std::string header;
  const auto rows = data_rows(curves_csv({0.5, 1.0, 6}), &header);
  CHECK(header == "F,f_opt,f_1,theta_opt,p_opt,p_1");
  REQUIRE(rows.size() == 6);
  CHECK(rows[0][1] == "0.5");
  CHECK(rows[0][2] == "0.5");
  CHECK(num(rows[3][1]) == doctest::Approx(0.863803).epsilon(1e-6));
  CHECK(num(rows[3][2]) == doctest::Approx(0.857143).epsilon(1e-6));
  CHECK(rows[5][0] == "1");
  CHECK(rows[5][1] == "1");
  CHECK(rows[5][2] == "1");
  CHECK(num(rows[5][3]) == doctest::Approx(std::numbers::pi / 8).epsilon(1e-14));
  CHECK(rows[5][4] == "0.5");
  CHECK(rows[5][5] == "0.5");
}

TEST_CASE("csv uses fifteen significant digits and newline endings") {
  const std::string csv = curves_csv({0.5, 1.0, 3});
  CHECK(csv.find('\r') == std::string::npos);
  CHECK(csv.back() == '\n');
  CHECK(csv.find("0.75,0.816227766016838,") != std::string::npos);
}

TEST_CASE("visibility dataset") {
  const std::vector<double> vis{1.0, 0.99, 0.98};
  std::string header;
  const auto rows = data_rows(visibility_csv({0.5, 1.0, 11}, vis, 1), &header);
  CHECK(header == "F,dF_V1,dF_V0.99,dF_V0.98");
  REQUIRE(rows.size() == 11);
  CHECK(std::abs(num(rows.front()[1])) <= 1e-12);
  CHECK(std::abs(num(rows.back()[1])) <= 1e-12);
  for (const auto& r : rows) {
    CHECK(std::abs(num(r[1]) - (f_1(num(r[0])) - num(r[0]))) <= 1e-12);
    CHECK(num(r[1]) >= num(r[2]) - 1e-12);
    CHECK(num(r[2]) >= num(r[3]) - 1e-12);
  }
  CHECK(visibility_csv({0.5, 1.0, 11}, vis, 1) == visibility_csv({0.5, 1.0, 11}, vis, 3));
}

TEST_CASE("optimize dataset") {
  SearchConfig config;
  config.restarts = 4;
  const std::vector<double> fids{0.8};
  const std::vector<std::size_t> anc{0, 1};
  std::string header;
  const std::string csv = optimize_csv(fids, anc, config);
  const auto rows = data_rows(csv, &header);
  CHECK(header == "F,ancilla_per_side,best_fidelity,f_opt,gap,evaluations");
  REQUIRE(rows.size() == 2);
  CHECK(num(rows[0][4]) >= -1e-8);
  CHECK(num(rows[0][4]) <= 1e-6);
  CHECK(num(rows[1][4]) <= 1e-6);
  CHECK(csv.find("# seed=1 restarts=4") != std::string::npos);
}

TEST_CASE("verification passes and catches an injected fault") {
  const VerifyReport report = run_verification();
  CHECK(report.passed());
  CHECK(report.checks.size() >= 6);
  for (const auto& c : report.checks) CHECK(c.max_deviation <= 1e-12);
  CHECK(report.format().find("all checks passed") != std::string::npos);

  VerifyOptions faulty;
  faulty.flip_b_minus_sign = true;
  const VerifyReport bad = run_verification(faulty);
  CHECK_FALSE(bad.passed());
  for (const auto& c : bad.checks) CHECK(c.passed == (c.name != "conditional-coefficients"));
  CHECK(bad.format().find("FAIL conditional-coefficients") != std::string::npos);
}
