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

// Exact closed-form counts of s-separated k-sets on systems of circles.
//
// Every closed form refuses inputs below its size bounds with a DomainError
// naming the bound; below those bounds the formulas are false, and callers
// that need a value there must enumerate. Divisions are carried out last and
// checked: a nonzero remainder raises InvariantViolation.

#ifndef CIRCSEP_COUNT_HPP_
#define CIRCSEP_COUNT_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "circsep/core.hpp"

namespace circsep {

// Arbitrary-precision count. Values produced by this library are never
// negative.
using CountValue = boost::multiprecision::cpp_int;

inline std::string to_decimal(const CountValue& v) { return v.str(); }

// C(n, k), zero when k < 0, k > n or n < 0.
CountValue binomial(std::int64_t n, std::int64_t k);

// |[n]^s_k| = n / (n - sk) * C(n - sk, k) for n >= sk + 1; 1 when k = 0.
CountValue count_circle(int n, int s, int k);

// Sets of [n]^s_k containing a fixed element: C(n - ks - 1, k - 1).
// Requires k >= 1 and n >= sk + 1.
CountValue count_circle_fixed(int n, int s, int k);

// Sets of [n_1..n_p]^s_k containing `fixed`: C(N - sk - 1, k - 1).
// Requires k >= 1, the fixed element's circle >= sk + 1 and every other
// circle >= sk.
CountValue count_system_fixed(const CircleSystem& sys, int s, int k, const Element& fixed);

// |[n_1..n_p]^s_k| = N / k * C(N - sk - 1, k - 1); 1 when k = 0.
// Requires every circle >= sk + 1.
CountValue count_system(const CircleSystem& sys, int s, int k);

// Fixed-element count for (1, 1), built by peeling off the last circle:
//   A(n_1..n_p; k) = sum_{j=1..k} A(n_1..n_{p-1}; j) * |[n_p]^s_{k-j}|
// with the one-circle fixed count as base. Same preconditions as
// count_system_fixed with fixed = (1, 1).
CountValue count_system_fixed_recursive(const CircleSystem& sys, int s, int k);

// The top-level terms of that recursion, index j-1 holding the j-th term.
std::vector<CountValue> recursive_terms(const CircleSystem& sys, int s, int k);

// |[n_1..n_p]^s_k| as the sum over compositions j_1 + ... + j_p = k of
// prod_i |[n_i]^s_{j_i}|. Requires every circle >= sk + 1.
CountValue count_system_convolution(const CircleSystem& sys, int s, int k);

// Two-circle convolution terms |[n_1]^s_j| * |[n_2]^s_{k-j}| for j = 0..k.
std::vector<CountValue> convolution_terms(int n1, int n2, int s, int k);

}  // namespace circsep

#endif  // CIRCSEP_COUNT_HPP_
