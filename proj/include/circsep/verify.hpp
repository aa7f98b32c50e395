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

// Sweep harness: evaluates every counting identity over a grid of circle
// systems and compares closed forms against brute-force enumeration.

#ifndef CIRCSEP_VERIFY_HPP_
#define CIRCSEP_VERIFY_HPP_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace circsep {

struct ParameterPoint {
  std::vector<int> sizes;
  int s = 0;
  int k = 0;

  friend bool operator==(const ParameterPoint&, const ParameterPoint&) = default;
};

std::string to_string(const ParameterPoint& p);

enum class Outcome { pass, fail, skipped };

std::string_view to_string(Outcome o);

// One check at one parameter point. For pass/fail reports, pass holds
// exactly when lhs == rhs. Skipped reports carry the reason in `detail`.
struct IdentityReport {
  std::string check;
  ParameterPoint point;
  std::string lhs;
  std::string rhs;
  Outcome outcome = Outcome::skipped;
  // Set on variants kept only to document a known-false statement; they do
  // not count towards the overall verdict.
  bool documentation = false;
  std::string detail;
};

nlohmann::ordered_json to_json(const IdentityReport& r);
std::string to_text(const IdentityReport& r);

// sum_{j=0}^{k-1} C(n - s(k-j) - 1, k-j-1) * |[m]^s_j| == C(m + n - sk - 1, k - 1)
// The n-circle carries the fixed element. Requires k >= 1, n >= sk + 1 and
// m >= sk.
IdentityReport verify_fixed_sum_identity(int m, int n, int s, int k);

// Same sum with the second factor written m / (m - sj) * C(m - sj, j - 1),
// evaluated over the rationals. Flagged as documentation; it does not hold.
IdentityReport verify_fixed_sum_identity_printed(int m, int n, int s, int k);

// |[n_1, n_2]^s_k| by the closed form against sum_j |[n_1]^s_j| |[n_2]^s_{k-j}|.
// Requires n_1, n_2 >= sk + 1 and k >= 1.
IdentityReport verify_convolution_identity(int n1, int n2, int s, int k);

enum class Check {
  circle_closed,         // one circle: closed form vs brute force
  circle_fixed,          // one circle, every rotation of the fixed element
  circle_consistency,    // k |[n]^s_k| == n |fixed family|
  system_closed,         // p circles: closed form vs brute force
  system_fixed,          // p circles, every qualifying fixed element
  double_count,          // brute force: sum_e |family containing e| == k |family|
  consistency_triangle,  // k count_system == N count_system_fixed
  recursion,             // peel-off-last-circle recursion vs closed form
  convolution,           // composition sum vs closed form
  fixed_sum,             // two circles
  fixed_sum_printed,     // two circles, documentation only
  bijection,             // two circles, exhaustive zig/zag check
  divisibility,          // every exact division leaves no remainder
};

std::string_view to_string(Check c);
std::optional<Check> parse_check(std::string_view name);
std::span<const Check> all_checks();

struct SweepGrid {
  int s_min = 1;
  int s_max = 2;
  int k_min = 1;
  int k_max = 3;
  int circles_min = 1;
  int circles_max = 2;
  int size_min = 1;
  int size_max = 10;
  std::optional<int> max_total;  // skip size tuples whose sum exceeds this
  std::vector<Check> checks{all_checks().begin(), all_checks().end()};
  unsigned jobs = 1;

  // Throws std::invalid_argument on empty or negative ranges.
  void validate() const;
  // s-major, then k, then number of circles, then size tuples in
  // lexicographic order.
  std::vector<ParameterPoint> points() const;
};

// One report per (point, applicable check), points in grid order and
// checks in enum order within a point. Checks that do not apply to a
// point's number of circles are omitted; points outside a check's
// preconditions yield a skipped report. The result does not depend on
// `grid.jobs`.
std::vector<IdentityReport> verify_all(const SweepGrid& grid);

// Reports at a single point, in enum order.
std::vector<IdentityReport> verify_point(const ParameterPoint& point,
                                         std::span<const Check> checks);

// True when no non-documentation report failed.
bool all_passed(std::span<const IdentityReport> reports);

}  // namespace circsep

#endif  // CIRCSEP_VERIFY_HPP_
