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

#ifndef CIRCSEP_ENUMERATE_HPP_
#define CIRCSEP_ENUMERATE_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "circsep/core.hpp"
#include "circsep/count.hpp"

namespace circsep {

// The family of s-separated k-sets of `sys`, optionally restricted to sets
// containing `fixed`.
struct EnumerationRequest {
  CircleSystem sys;
  SeparationParams params;
  std::optional<Element> fixed;

  // Throws std::invalid_argument if `fixed` is not an element of `sys`.
  EnumerationRequest(CircleSystem sys, SeparationParams params,
                     std::optional<Element> fixed = std::nullopt);
};

// Brute-force stream: walks all C(N, k) subsets in lexicographic order and
// keeps the ones that pass is_s_separated (and contain the fixed element).
class NaiveEnumerator {
 public:
  explicit NaiveEnumerator(EnumerationRequest req);

  // Moves to the next accepted set; false once the stream is exhausted.
  bool step();
  // The set `step` last moved to.
  SelectionSet current() const;
  std::optional<SelectionSet> next();

 private:
  bool advance();
  bool accepts();

  EnumerationRequest req_;
  std::vector<int> combo_;  // canonical indices, strictly increasing
  std::vector<Element> scratch_;
  bool started_ = false;
  bool done_ = false;
};

// Pruned depth-first stream. Picks elements in canonical order; within a
// circle a candidate must clear the previous pick by s + 1 positions and
// leave s objects before wrapping back to the circle's first pick. A
// capacity bound cuts branches that cannot reach k. Yields the same sets as
// NaiveEnumerator, in the same order, with O(k) working state.
class GapEnumerator {
 public:
  explicit GapEnumerator(EnumerationRequest req);

  bool step();
  SelectionSet current() const;
  std::optional<SelectionSet> next();

 private:
  bool search(std::optional<int> from);
  std::optional<int> first_candidate(int from) const;

  EnumerationRequest req_;
  std::vector<int> picks_;       // canonical indices
  std::vector<int> suffix_cap_;  // max picks on circles c..p, indexed by c-1
  std::optional<int> fixed_index_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<SelectionSet> enumerate_naive(const EnumerationRequest& req);
std::vector<SelectionSet> enumerate_gap(const EnumerationRequest& req);

// Number of sets GapEnumerator yields; streams without storing them.
CountValue count_by_enumeration(const EnumerationRequest& req);

}  // namespace circsep

#endif  // CIRCSEP_ENUMERATE_HPP_
