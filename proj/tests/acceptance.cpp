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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. Every comparison is exact.

#include <algorithm>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "circsep/bijection.hpp"
#include "circsep/cli.hpp"
#include "circsep/count.hpp"
#include "circsep/verify.hpp"
#include "oracle.hpp"

using namespace circsep;

namespace {

// Brute-force total and per-element containing counts in one pass.
struct Tally {
  std::uint64_t total = 0;
  std::map<oracle::Pair, std::uint64_t> containing;
};

Tally tally(const std::vector<int>& sizes, int s, int k) {
  Tally t;
  for (const auto& e : oracle::ground_set(sizes)) t.containing[e] = 0;
  oracle::for_each_family_member(sizes, s, k, [&](const std::vector<oracle::Pair>& set) {
    ++t.total;
    for (const auto& e : set) ++t.containing[e];
  });
  return t;
}

class Criterion {
 public:
  explicit Criterion(std::string name) : name_(std::move(name)) {}

  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && first_failure_.empty()) first_failure_ = what;
    ok_ = ok_ && ok;
  }

  // Guards a block against unexpected exceptions.
  void run(const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      expect(false, std::string("exception: ") + e.what());
    }
  }

  bool report() const {
    std::cout << (ok_ ? "PASS " : "FAIL ") << name_ << " (" << checks_ << " checks)";
    if (!ok_) std::cout << ": " << first_failure_;
    std::cout << '\n';
    return ok_;
  }

 private:
  std::string name_;
  bool ok_ = true;
  std::size_t checks_ = 0;
  std::string first_failure_;
};

std::string point(const std::vector<int>& sizes, int s, int k) {
  std::string out = "[";
  for (std::size_t i = 0; i < sizes.size(); ++i) out += (i ? "," : "") + std::to_string(sizes[i]);
  return out + "] s=" + std::to_string(s) + " k=" + std::to_string(k);
}

// Size tuples with p entries in [lo, hi].
void for_each_tuple(int p, int lo, int hi, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> cur(static_cast<std::size_t>(p), lo);
  for (;;) {
    fn(cur);
    int i = p - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == hi) cur[static_cast<std::size_t>(i--)] = lo;
    if (i < 0) return;
    ++cur[static_cast<std::size_t>(i)];
  }
}

bool single_circle_closed_form() {
  Criterion c("criterion 1: single-circle closed form matches brute force");
  c.run([&] {
    c.expect(count_circle(10, 1, 3) == 50, "count_circle(10,1,3) != 50");
    for (int s = 1; s <= 3; ++s) {
      for (int k = 1; k <= 5; ++k) {
        for (int n = s * k + 1; n <= 14; ++n) {
          c.expect(count_circle(n, s, k) == oracle::count({n}, s, k), point({n}, s, k));
        }
      }
    }
  });
  return c.report();
}

bool fixed_element_counts() {
  Criterion c("criterion 2: fixed-element count matches brute force for every rotation");
  c.run([&] {
    c.expect(count_circle_fixed(10, 1, 3) == 15, "count_circle_fixed(10,1,3) != 15");
    for (int s = 1; s <= 3; ++s) {
      for (int k = 1; k <= 5; ++k) {
        for (int n = s * k + 1; n <= 14; ++n) {
          const Tally t = tally({n}, s, k);
          const CountValue fixed = count_circle_fixed(n, s, k);
          for (int a = 1; a <= n; ++a) {
            c.expect(fixed == t.containing.at({a, 1}),
                     point({n}, s, k) + " fixed " + std::to_string(a) + "@1");
          }
          c.expect(k * count_circle(n, s, k) == n * fixed, "consistency at " + point({n}, s, k));
        }
      }
    }
  });
  return c.report();
}

bool multi_circle_counts() {
  Criterion c("criterion 3: two- and three-circle counts match brute force");
  c.run([&] {
    c.expect(count_system(CircleSystem({8, 7}), 2, 3) == 140, "count_system([8,7],2,3) != 140");
    c.expect(count_system_fixed(CircleSystem({8, 7}), 2, 3, Element(1, 1)) == 28,
             "count_system_fixed([8,7],2,3) != 28");
    for (int p = 2; p <= 3; ++p) {
      for (int s = 1; s <= 2; ++s) {
        for (int k = 1; k <= 3; ++k) {
          if (s * k + 1 > 10) continue;
          for_each_tuple(p, s * k + 1, 10, [&](const std::vector<int>& sizes) {
            CircleSystem sys(sizes);
            const Tally t = tally(sizes, s, k);
            c.expect(count_system(sys, s, k) == t.total, point(sizes, s, k));
            for (const auto& [e, n] : t.containing) {
              c.expect(count_system_fixed(sys, s, k, Element(e.first, e.second)) == n,
                       point(sizes, s, k) + " fixed " + std::to_string(e.first) + "@" +
                           std::to_string(e.second));
            }
          });
        }
      }
    }
  });
  return c.report();
}

// Runs check_bijectivity over the two-circle grid and hands each report on.
void for_each_bijection_point(Criterion& c, const std::function<void(const BijectionReport&)>& fn) {
  for (int s = 1; s <= 3; ++s) {
    for (int k = 1; k <= 4; ++k) {
      for (int n1 = s * k + 1; n1 <= 16; ++n1) {
        for (int n2 = std::max(s * k, 1); n1 + n2 <= 16; ++n2) {
          c.run([&] { fn(check_bijectivity(CircleSystem({n1, n2}), s, k)); });
        }
      }
    }
  }
}

bool bijection_suite() {
  Criterion c("criterion 4: zig/zag bijection is exhaustive and exact");
  c.run([&] {
    const auto hand = check_bijectivity(CircleSystem({4, 3}), 1, 2);
    std::set<std::string> image;
    for (const auto& x : hand.image) image.insert(to_position_list(x));
    c.expect(hand.passed(), "[4,3] s=1 k=2 report failed");
    c.expect(image == std::set<std::string>{"1,3", "1,4", "1,5", "1,6"},
             "[4,3] s=1 k=2 image differs");
  });
  for_each_bijection_point(c, [&](const BijectionReport& r) {
    const std::string at = point({r.n1, r.n2}, r.s, r.k);
    const std::uint64_t domain = oracle::count({r.n1, r.n2}, r.s, r.k, oracle::Pair{1, 1});
    const std::uint64_t codomain = oracle::count({r.n1 + r.n2}, r.s, r.k, oracle::Pair{1, 1});
    const CountValue expected = oracle::pascal(r.n1 + r.n2 - r.s * r.k - 1, r.k - 1);
    c.expect(r.injective, at + " not injective");
    c.expect(r.lands_in_codomain, at + " image leaves the codomain");
    c.expect(r.round_trip_domain, at + " backward(forward(A)) != A");
    c.expect(r.round_trip_codomain, at + " forward(backward(X)) != X");
    c.expect(r.orders_match, at + " orders differ");
    c.expect(r.domain_size == domain && r.codomain_size == codomain, at + " family sizes");
    c.expect(CountValue(domain) == expected && r.expected == expected, at + " binomial size");
    c.expect(r.image.size() == codomain, at + " not surjective");
  });
  return c.report();
}

bool recursion_over_circles() {
  Criterion c("criterion 5: recursion over circles matches the closed form");
  c.run([&] {
    auto terms = recursive_terms(CircleSystem({8, 7}), 2, 3);
    c.expect(terms.size() == 3 && terms[0] == 7 && terms[1] == 21 && terms[2] == 0,
             "[8,7] s=2 k=3 terms != 7+21+0");
    for (int p = 2; p <= 3; ++p) {
      for (int s = 1; s <= 2; ++s) {
        for (int k = 1; k <= 3; ++k) {
          for_each_tuple(p, s * k + 1, 10, [&](const std::vector<int>& sizes) {
            CircleSystem sys(sizes);
            c.expect(count_system_fixed_recursive(sys, s, k) ==
                         count_system_fixed(sys, s, k, Element(1, 1)),
                     point(sizes, s, k));
          });
        }
      }
    }
  });
  return c.report();
}

bool identities() {
  Criterion c("criterion 6: convolution and fixed-sum identities");
  c.run([&] {
    auto conv = verify_convolution_identity(7, 8, 2, 3);
    c.expect(conv.outcome == Outcome::pass && conv.lhs == "140" &&
                 conv.detail == "terms 0+84+56+0",
             "[7,8] s=2 k=3 convolution");
    auto fs = verify_fixed_sum_identity(8, 7, 2, 3);
    c.expect(fs.outcome == Outcome::pass && fs.rhs == "28" && fs.detail == "terms 0+16+12",
             "m=8 n=7 s=2 k=3 fixed sum");
    auto printed = verify_fixed_sum_identity_printed(8, 7, 2, 3);
    c.expect(printed.outcome == Outcome::fail && printed.documentation,
             "printed variant does not fail at m=8 n=7 s=2 k=3");
    for (int s = 0; s <= 2; ++s) {
      for (int k = 1; k <= 3; ++k) {
        for (int n1 = s * k + 1; n1 <= 10; ++n1) {
          for (int n2 = s * k + 1; n2 <= 10; ++n2) {
            c.expect(verify_convolution_identity(n1, n2, s, k).outcome == Outcome::pass,
                     "convolution " + point({n1, n2}, s, k));
          }
        }
        for (int n = s * k + 1; n <= 10; ++n) {
          for (int m = std::max(s * k, 1); m <= 10; ++m) {
            c.expect(verify_fixed_sum_identity(m, n, s, k).outcome == Outcome::pass,
                     "fixed sum m=" + std::to_string(m) + " " + point({n}, s, k));
          }
        }
      }
    }
  });
  return c.report();
}

bool structural_invariants() {
  Criterion c("criterion 7: exact divisions and switch-step invariants");
  c.run([&] {
    // Every closed form on every grid above, with InvariantViolation fatal.
    for (int s = 1; s <= 3; ++s) {
      for (int k = 1; k <= 5; ++k) {
        for (int n = s * k + 1; n <= 14; ++n) {
          count_circle(n, s, k);
          count_circle_fixed(n, s, k);
        }
      }
    }
    for (int p = 2; p <= 3; ++p) {
      for (int s = 1; s <= 2; ++s) {
        for (int k = 1; k <= 3; ++k) {
          for_each_tuple(p, s * k + 1, 10, [&](const std::vector<int>& sizes) {
            CircleSystem sys(sizes);
            count_system(sys, s, k);
            count_system_convolution(sys, s, k);
            count_system_fixed_recursive(sys, s, k);
          });
        }
      }
    }
    SweepGrid grid;
    grid.s_min = 0;
    grid.s_max = 3;
    grid.k_max = 4;
    grid.circles_max = 3;
    grid.size_max = 8;
    grid.max_total = 16;
    grid.checks = {Check::divisibility};
    for (const auto& r : verify_all(grid)) {
      c.expect(r.outcome != Outcome::fail, "divisibility " + to_string(r.point));
    }
  });
  for_each_bijection_point(c, [&](const BijectionReport& r) {
    const std::string at = point({r.n1, r.n2}, r.s, r.k);
    c.expect(r.step_invariants, at + " step invariants");
    c.expect(r.steps_mirror, at + " zag steps do not mirror zig steps");
  });
  return c.report();
}

bool determinism() {
  Criterion c("criterion 8: verify output is identical across job counts");
  c.run([&] {
    const std::vector<std::string> base{"verify", "--min-s", "1", "--max-s", "2",
                                        "--max-k", "3", "--max-circles", "3",
                                        "--max-size", "8", "--max-total", "16"};
    std::vector<std::string> outputs;
    for (const char* jobs : {"1", "4"}) {
      for (const char* format : {"text", "json"}) {
        auto args = base;
        args.insert(args.end(), {"--jobs", jobs, "--format", format});
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run(args, out, err);
        c.expect(code == cli::kOk, std::string("verify exit code with --jobs ") + jobs);
        outputs.push_back(out.str() + err.str());
      }
    }
    c.expect(!outputs[0].empty(), "empty verify output");
    c.expect(outputs[0] == outputs[2], "text output differs between 1 and 4 jobs");
    c.expect(outputs[1] == outputs[3], "json output differs between 1 and 4 jobs");
  });
  return c.report();
}

}  // namespace

int main() {
  bool ok = true;
  ok &= single_circle_closed_form();
  ok &= fixed_element_counts();
  ok &= multi_circle_counts();
  ok &= bijection_suite();
  ok &= recursion_over_circles();
  ok &= identities();
  ok &= structural_invariants();
  ok &= determinism();
  std::cout << (ok ? "all criteria passed" : "some criteria failed") << '\n';
  return ok ? 0 : 1;
}
