// Copyright 2026 The circsep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch_amalgamated.hpp>

#include "circsep/count.hpp"
#include "circsep/verify.hpp"
#include "oracle.hpp"

using namespace circsep;

TEST_CASE("fixed-sum identity", "[verify]") {
  auto r = verify_fixed_sum_identity(8, 7, 2, 3);
  CHECK(r.outcome == Outcome::pass);
  CHECK(r.lhs == "28");
  CHECK(r.rhs == "28");
  CHECK(r.detail == "terms 0+16+12");
  CHECK_FALSE(r.documentation);

  for (int s = 0; s <= 3; ++s) {
    for (int k = 1; k <= 4; ++k) {
      for (int n = s * k + 1; n <= s * k + 6; ++n) {
        for (int m = std::max(s * k, 1); m <= s * k + 6; ++m) {
          auto rep = verify_fixed_sum_identity(m, n, s, k);
          REQUIRE(rep.outcome == Outcome::pass);
          REQUIRE(rep.rhs == std::to_string(oracle::count({n, m}, s, k, oracle::Pair{1, 1})));
        }
      }
    }
  }
  CHECK_THROWS_AS(verify_fixed_sum_identity(8, 6, 2, 3), DomainError);
  CHECK_THROWS_AS(verify_fixed_sum_identity(5, 7, 2, 3), DomainError);
  CHECK_THROWS_AS(verify_fixed_sum_identity(8, 7, 2, 0), DomainError);
}

TEST_CASE("printed fixed-sum variant is documented as failing", "[verify]") {
  auto r = verify_fixed_sum_identity_printed(8, 7, 2, 3);
  CHECK(r.outcome == Outcome::fail);
  CHECK(r.documentation);
  CHECK(r.lhs == "32/3");
  CHECK(r.rhs == "28");
  CHECK_THAT(r.detail, Catch::Matchers::StartsWith("non-integer term at j=1"));
}

TEST_CASE("convolution identity", "[verify]") {
  auto r = verify_convolution_identity(7, 8, 2, 3);
  CHECK(r.outcome == Outcome::pass);
  CHECK(r.lhs == "140");
  CHECK(r.detail == "terms 0+84+56+0");
  // s = 0 reduces to Vandermonde.
  for (int a = 1; a <= 8; ++a) {
    for (int b = 1; b <= 8; ++b) {
      for (int k = 1; k <= a + b; ++k) {
        auto rep = verify_convolution_identity(a, b, 0, k);
        REQUIRE(rep.outcome == Outcome::pass);
        REQUIRE(rep.lhs == binomial(a + b, k).str());
      }
    }
  }
}

TEST_CASE("check names round-trip", "[verify]") {
  for (Check c : all_checks()) CHECK(parse_check(to_string(c)) == c);
  CHECK(all_checks().size() == 13);
  CHECK_FALSE(parse_check("nope"));
}

TEST_CASE("grid validation and point order", "[verify]") {
  SweepGrid g;
  g.s_min = 1;
  g.s_max = 1;
  g.k_min = 2;
  g.k_max = 2;
  g.circles_min = 1;
  g.circles_max = 2;
  g.size_min = 3;
  g.size_max = 4;
  auto pts = g.points();
  REQUIRE(pts.size() == 6);
  CHECK(pts[0] == ParameterPoint{{3}, 1, 2});
  CHECK(pts[1] == ParameterPoint{{4}, 1, 2});
  CHECK(pts[2] == ParameterPoint{{3, 3}, 1, 2});
  CHECK(pts[5] == ParameterPoint{{4, 4}, 1, 2});

  g.max_total = 7;
  CHECK(g.points().size() == 5);

  SweepGrid bad;
  bad.k_min = 3;
  bad.k_max = 2;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = SweepGrid{};
  bad.size_min = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = SweepGrid{};
  bad.jobs = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("default sweep passes", "[verify]") {
  SweepGrid g;
  auto reports = verify_all(g);
  REQUIRE_FALSE(reports.empty());
  CHECK(all_passed(reports));
  std::size_t documented = 0;
  for (const auto& r : reports) {
    INFO(to_text(r));
    if (r.documentation) {
      ++documented;
      continue;
    }
    CHECK(r.outcome != Outcome::fail);
    if (r.outcome == Outcome::pass) CHECK(r.lhs == r.rhs);
  }
  CHECK(documented > 0);
}

TEST_CASE("points outside every domain are skipped", "[verify]") {
  SweepGrid g;
  g.s_min = g.s_max = 3;
  g.k_min = g.k_max = 3;
  g.size_min = 1;
  g.size_max = 5;
  g.checks = {Check::circle_closed, Check::system_closed, Check::bijection};
  auto reports = verify_all(g);
  REQUIRE_FALSE(reports.empty());
  for (const auto& r : reports) CHECK(r.outcome == Outcome::skipped);
  CHECK(all_passed(reports));
}

TEST_CASE("reports do not depend on the job count", "[verify][property]") {
  SweepGrid g;
  g.s_max = 2;
  g.k_max = 3;
  g.circles_max = 3;
  g.size_max = 6;
  g.max_total = 14;
  std::vector<std::string> baseline;
  for (const auto& r : verify_all(g)) baseline.push_back(to_json(r).dump());
  for (unsigned jobs : {2u, 3u, 8u}) {
    g.jobs = jobs;
    std::vector<std::string> again;
    for (const auto& r : verify_all(g)) again.push_back(to_json(r).dump());
    REQUIRE(again == baseline);
  }
}

TEST_CASE("a bad division is reported, not thrown", "[verify]") {
  auto reports = verify_point({{7, 6}, 3, 2}, std::vector<Check>{Check::system_closed});
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].outcome == Outcome::skipped);
  CHECK_THAT(reports[0].detail, Catch::Matchers::ContainsSubstring("≥ sk+1"));
}
