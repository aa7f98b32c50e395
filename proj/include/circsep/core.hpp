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

#ifndef CIRCSEP_CORE_HPP_
#define CIRCSEP_CORE_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace circsep {

// Raised when an input lies outside the range where a formula or procedure
// is defined. The message names the violated bound.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Raised when an internal invariant fails (an exact division leaves a
// remainder, a switch window holds two elements, ...). Never expected.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// One object of the ground set: a position on a given circle, both 1-based.
// Ordered by (circle, position).
struct Element {
  int position = 1;
  int circle = 1;

  Element() = default;
  Element(int position, int circle);

  friend bool operator==(const Element&, const Element&) = default;
  friend std::strong_ordering operator<=>(const Element& a, const Element& b) {
    if (auto c = a.circle <=> b.circle; c != 0) return c;
    return a.position <=> b.position;
  }
};

// The ground set [n_1, ..., n_p]: p disjoint circles.
class CircleSystem {
 public:
  explicit CircleSystem(std::vector<int> sizes);

  int circles() const { return static_cast<int>(sizes_.size()); }
  // Size of circle `circle` (1-based).
  int size(int circle) const;
  std::span<const int> sizes() const { return sizes_; }
  // N, the number of objects over all circles.
  int total() const { return total_; }

  bool contains(const Element& e) const {
    return e.circle >= 1 && e.circle <= circles() &&
           e.position >= 1 && e.position <= sizes_[e.circle - 1];
  }
  // Validated construction; throws std::invalid_argument when out of range.
  Element element(int position, int circle) const;

  // Position of `e` in canonical order, in [0, N).
  int index_of(const Element& e) const;
  Element at_index(int index) const;

  friend bool operator==(const CircleSystem&, const CircleSystem&) = default;

 private:
  std::vector<int> sizes_;
  std::vector<int> offsets_;  // canonical index of (1, c) is offsets_[c-1]
  int total_ = 0;
};

// A finite set of elements kept sorted in canonical order.
// Compares lexicographically over that order.
class SelectionSet {
 public:
  SelectionSet() = default;
  // Sorts; throws std::invalid_argument on duplicates.
  explicit SelectionSet(std::vector<Element> elements);

  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  bool contains(const Element& e) const;
  std::span<const Element> elements() const { return elements_; }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  bool fits(const CircleSystem& sys) const;

  friend bool operator==(const SelectionSet&, const SelectionSet&) = default;
  friend auto operator<=>(const SelectionSet& a, const SelectionSet& b) {
    return a.elements_ <=> b.elements_;
  }

 private:
  std::vector<Element> elements_;
};

struct SeparationParams {
  int s = 0;
  int k = 0;

  SeparationParams() = default;
  SeparationParams(int s, int k);
};

// Shorter-arc distance between two elements of the same circle;
// std::nullopt when they lie on different circles.
std::optional<int> circular_distance(const Element& a, const Element& b,
                                     const CircleSystem& sys);

// True iff every same-circle pair has at least s objects strictly between
// them on the shorter arc, i.e. distance >= s + 1.
bool is_s_separated(const SelectionSet& set, const CircleSystem& sys, int s);

// f and g: the relabelling of a two-circle system [n_1, n_2] onto the single
// circle [n_1 + n_2] that places (1, 2) right after (n_1, 1).
int flatten(const Element& e, const CircleSystem& sys);
Element unflatten(int i, const CircleSystem& sys);

// Elementwise f and g. Flattened sets live on the one-circle system
// [n_1 + n_2], with every element on circle 1.
SelectionSet flatten(const SelectionSet& set, const CircleSystem& sys);
SelectionSet unflatten(const SelectionSet& flat, const CircleSystem& sys);

// "POS@CIRCLE" and comma-separated lists thereof. Parsing throws
// std::invalid_argument on malformed text.
std::string to_string(const Element& e);
std::string to_string(const SelectionSet& set);
Element parse_element(std::string_view text);
SelectionSet parse_selection(std::string_view text);

// Bare-integer syntax for sets on a single circle, e.g. "1,4".
std::string to_position_list(const SelectionSet& set);
SelectionSet parse_position_list(std::string_view text);

// "8,7" -> {8, 7}; throws std::invalid_argument.
std::vector<int> parse_int_list(std::string_view text);

}  // namespace circsep

#endif  // CIRCSEP_CORE_HPP_
