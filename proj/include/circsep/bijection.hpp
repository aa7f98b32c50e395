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

// Bijection between the s-separated k-sets of a two-circle system [n_1, n_2]
// that contain (1, 1) and the s-separated k-sets of the single circle
// [n_1 + n_2] that contain 1.
//
// Flattening alone breaks separation near the seam where (n_1, 1) meets
// (1, 2) and where (n_2, 2) wraps back to (1, 1). The zig procedure repairs
// this by walking down both circles in lockstep: each step looks at the s
// positions just below the last insertion point, and if the set has an
// element there it is moved to the mirrored position on the other circle.
// The zag procedure runs the same walk from the other side and undoes it.
//
// Circle addressed at step i: zig uses circle 2 for even i and circle 1 for
// odd i; zag uses circle 1 for even i and circle 2 for odd i.

#ifndef CIRCSEP_BIJECTION_HPP_
#define CIRCSEP_BIJECTION_HPP_

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "circsep/core.hpp"
#include "circsep/count.hpp"

namespace circsep {

// Positions [lo, hi] on one circle. Empty when lo > hi.
struct Window {
  int circle = 0;
  int lo = 0;
  int hi = 0;

  friend bool operator==(const Window&, const Window&) = default;
};

struct SwitchStep {
  int index = 0;
  Window window;
  int removed = 0;  // position taken out of window.circle
  int gap = 0;      // distance from the window's top neighbour; in [1, s]
  int added = 0;    // position inserted on the other circle

  friend bool operator==(const SwitchStep&, const SwitchStep&) = default;
};

enum class Direction { zig, zag };

struct ZigZagTrace {
  Direction direction = Direction::zig;
  std::vector<SwitchStep> steps;

  int order() const { return static_cast<int>(steps.size()); }
};

nlohmann::ordered_json to_json(const ZigZagTrace& trace);

struct SwitchResult {
  SelectionSet set;
  ZigZagTrace trace;
};

// Zig on A, where A is an s-separated k-set of [n_1, n_2] containing (1, 1),
// n_1 >= sk + 1 and n_2 >= sk. Throws DomainError otherwise.
SwitchResult zig(const SelectionSet& a, const CircleSystem& sys, int s);

// Zag on S = g(X), X an s-separated k-set of [n_1 + n_2] containing 1.
// S is given in two-circle coordinates.
SwitchResult zag(const SelectionSet& unflattened, const CircleSystem& sys, int s);

// F(A) = f(zig(A)); the result lives on the circle [n_1 + n_2].
SelectionSet forward(const SelectionSet& a, const CircleSystem& sys, int s);
SwitchResult forward_traced(const SelectionSet& a, const CircleSystem& sys, int s);

// G(X) = zag(g(X)); `flat` lives on the circle [n_1 + n_2].
SelectionSet backward(const SelectionSet& flat, const CircleSystem& sys, int s);
SwitchResult backward_traced(const SelectionSet& flat, const CircleSystem& sys, int s);

struct BijectionReport {
  int n1 = 0;
  int n2 = 0;
  int s = 0;
  int k = 0;
  CountValue expected;  // C(n_1 + n_2 - sk - 1, k - 1)
  std::size_t domain_size = 0;
  std::size_t codomain_size = 0;
  std::vector<SelectionSet> image;  // forward(A) for each A, domain order

  bool injective = true;
  bool lands_in_codomain = true;
  bool round_trip_domain = true;    // backward(forward(A)) == A
  bool round_trip_codomain = true;  // forward(backward(X)) == X
  bool sizes_match = true;          // |domain| == |codomain| == expected
  bool orders_match = true;         // z-order(A) == zag order of F(A)
  bool steps_mirror = true;         // zag steps are zig steps with removed/added swapped
  bool step_invariants = true;      // gap bounds, removals, anchoring, order <= k - 1

  std::vector<std::string> counterexamples;

  bool passed() const {
    return injective && lands_in_codomain && round_trip_domain && round_trip_codomain &&
           sizes_match && orders_match && steps_mirror && step_invariants;
  }
};

// Exhaustively checks that forward is a bijection for the given parameters.
// Requires n_1 >= sk + 1, n_2 >= sk and k >= 1.
BijectionReport check_bijectivity(const CircleSystem& sys, int s, int k);

}  // namespace circsep

#endif  // CIRCSEP_BIJECTION_HPP_
