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

#include "circsep/count.hpp"

#include <algorithm>

namespace circsep {

namespace {

std::string params_text(int s, int k) {
  return "s=" + std::to_string(s) + ", k=" + std::to_string(k);
}

void require_nonnegative(const char* op, int s, int k) {
  if (s < 0 || k < 0) {
    throw DomainError(std::string(op) + " requires s ≥ 0 and k ≥ 0 (" + params_text(s, k) + ")");
  }
}

CountValue exact_divide(const CountValue& num, const CountValue& den, const char* op) {
  CountValue q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) {
    throw InvariantViolation(std::string(op) + ": " + num.str() + " is not divisible by " +
                             den.str());
  }
  return q;
}

// Bound check for one circle: n_i >= sk + extra.
void require_circle(const char* op, const CircleSystem& sys, int circle, int s, int k, int extra) {
  std::int64_t bound = static_cast<std::int64_t>(s) * k + extra;
  int n = sys.size(circle);
  if (n < bound) {
    std::string idx = std::to_string(circle);
    throw DomainError(std::string(op) + " requires n_" + idx + " ≥ sk" +
                      (extra ? "+" + std::to_string(extra) : std::string()) + " (n_" + idx + "=" +
                      std::to_string(n) + ", " + params_text(s, k) + ")");
  }
}

void require_fixed_bounds(const char* op, const CircleSystem& sys, int s, int k,
                          const Element& fixed) {
  require_nonnegative(op, s, k);
  if (k < 1) throw DomainError(std::string(op) + " requires k ≥ 1 (" + params_text(s, k) + ")");
  if (!sys.contains(fixed)) {
    throw DomainError(std::string(op) + ": fixed element " + to_string(fixed) +
                      " is not in the circle system");
  }
  for (int c = 1; c <= sys.circles(); ++c) {
    require_circle(op, sys, c, s, k, c == fixed.circle ? 1 : 0);
  }
}

}  // namespace

CountValue binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  CountValue r = 1;
  // r stays an integer after each step: it equals C(n - k + i, i).
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

CountValue count_circle(int n, int s, int k) {
  require_nonnegative("count_circle", s, k);
  if (k == 0) return 1;
  std::int64_t reduced = static_cast<std::int64_t>(n) - static_cast<std::int64_t>(s) * k;
  if (reduced < 1) {
    throw DomainError("count_circle requires n ≥ sk+1 (n=" + std::to_string(n) + ", " +
                      params_text(s, k) + "); use enumeration below this bound");
  }
  return exact_divide(CountValue(n) * binomial(reduced, k), CountValue(reduced), "count_circle");
}

CountValue count_circle_fixed(int n, int s, int k) {
  require_nonnegative("count_circle_fixed", s, k);
  if (k < 1) throw DomainError("count_circle_fixed requires k ≥ 1 (" + params_text(s, k) + ")");
  std::int64_t sk = static_cast<std::int64_t>(s) * k;
  if (n < sk + 1) {
    throw DomainError("count_circle_fixed requires n ≥ sk+1 (n=" + std::to_string(n) + ", " +
                      params_text(s, k) + "); use enumeration below this bound");
  }
  return binomial(n - sk - 1, k - 1);
}

CountValue count_system_fixed(const CircleSystem& sys, int s, int k, const Element& fixed) {
  require_fixed_bounds("count_system_fixed", sys, s, k, fixed);
  return binomial(sys.total() - static_cast<std::int64_t>(s) * k - 1, k - 1);
}

CountValue count_system(const CircleSystem& sys, int s, int k) {
  require_nonnegative("count_system", s, k);
  if (k == 0) return 1;
  for (int c = 1; c <= sys.circles(); ++c) require_circle("count_system", sys, c, s, k, 1);
  std::int64_t n = sys.total();
  return exact_divide(CountValue(n) * binomial(n - static_cast<std::int64_t>(s) * k - 1, k - 1),
                      CountValue(k), "count_system");
}

std::vector<CountValue> recursive_terms(const CircleSystem& sys, int s, int k) {
  require_fixed_bounds("count_system_fixed_recursive", sys, s, k, Element(1, 1));
  int p = sys.circles();
  // table[j] = A(n_1..n_q; j) for the prefix processed so far, j = 0..k.
  std::vector<CountValue> table(k + 1, 0);
  for (int j = 1; j <= k; ++j) table[j] = count_circle_fixed(sys.size(1), s, j);
  std::vector<CountValue> terms;
  for (int q = 2; q <= p; ++q) {
    int n = sys.size(q);
    std::vector<CountValue> next(k + 1, 0);
    for (int total = 1; total <= k; ++total) {
      for (int j = 1; j <= total; ++j) {
        next[total] += table[j] * count_circle(n, s, total - j);
      }
    }
    if (q == p) {
      for (int j = 1; j <= k; ++j) terms.push_back(table[j] * count_circle(n, s, k - j));
    }
    table = std::move(next);
  }
  if (p == 1) terms.push_back(table[k]);
  return terms;
}

CountValue count_system_fixed_recursive(const CircleSystem& sys, int s, int k) {
  CountValue sum = 0;
  for (const auto& t : recursive_terms(sys, s, k)) sum += t;
  return sum;
}

CountValue count_system_convolution(const CircleSystem& sys, int s, int k) {
  require_nonnegative("count_system_convolution", s, k);
  if (k == 0) return 1;
  for (int c = 1; c <= sys.circles(); ++c) {
    require_circle("count_system_convolution", sys, c, s, k, 1);
  }
  // Coefficients of prod_i (sum_j |[n_i]^s_j| x^j), truncated at x^k.
  std::vector<CountValue> acc(k + 1, 0);
  acc[0] = 1;
  for (int n : sys.sizes()) {
    std::vector<CountValue> factor(k + 1);
    for (int j = 0; j <= k; ++j) factor[j] = count_circle(n, s, j);
    std::vector<CountValue> next(k + 1, 0);
    for (int a = 0; a <= k; ++a) {
      if (acc[a] == 0) continue;
      for (int b = 0; a + b <= k; ++b) next[a + b] += acc[a] * factor[b];
    }
    acc = std::move(next);
  }
  return acc[k];
}

std::vector<CountValue> convolution_terms(int n1, int n2, int s, int k) {
  CircleSystem sys({n1, n2});
  require_nonnegative("convolution_terms", s, k);
  for (int c = 1; c <= 2; ++c) require_circle("convolution_terms", sys, c, s, k, 1);
  std::vector<CountValue> terms;
  for (int j = 0; j <= k; ++j) terms.push_back(count_circle(n1, s, j) * count_circle(n2, s, k - j));
  return terms;
}

}  // namespace circsep
