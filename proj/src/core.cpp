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

#include "circsep/core.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>

namespace circsep {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view text, std::string_view what) {
  text = trim(text);
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("malformed " + std::string(what) + ": '" +
                                std::string(text) + "'");
  }
  return value;
}

// Splits on ',' and drops nothing; an all-blank input yields no tokens.
std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> out;
  if (trim(text).empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    out.push_back(text.substr(start, comma == std::string_view::npos
                                         ? std::string_view::npos
                                         : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

void require_two_circles(const CircleSystem& sys) {
  if (sys.circles() != 2) {
    throw DomainError("flatten/unflatten require exactly two circles (p = 2), got p = " +
                      std::to_string(sys.circles()));
  }
}

}  // namespace

Element::Element(int position, int circle) : position(position), circle(circle) {
  if (position < 1 || circle < 1) {
    throw std::invalid_argument("element positions and circles are 1-based, got " +
                                std::to_string(position) + "@" + std::to_string(circle));
  }
}

CircleSystem::CircleSystem(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) throw std::invalid_argument("a circle system needs at least one circle");
  offsets_.reserve(sizes_.size());
  for (int n : sizes_) {
    if (n < 1) throw std::invalid_argument("circle sizes must be positive, got " + std::to_string(n));
    offsets_.push_back(total_);
    total_ += n;
  }
}

int CircleSystem::size(int circle) const {
  if (circle < 1 || circle > circles()) {
    throw std::out_of_range("circle index " + std::to_string(circle) + " outside [1, " +
                            std::to_string(circles()) + "]");
  }
  return sizes_[circle - 1];
}

Element CircleSystem::element(int position, int circle) const {
  Element e(position, circle);
  if (!contains(e)) {
    throw std::invalid_argument("element " + to_string(e) + " is not in the circle system");
  }
  return e;
}

int CircleSystem::index_of(const Element& e) const {
  return offsets_[e.circle - 1] + e.position - 1;
}

Element CircleSystem::at_index(int index) const {
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), index);
  int circle = static_cast<int>(it - offsets_.begin());
  return Element(index - offsets_[circle - 1] + 1, circle);
}

SelectionSet::SelectionSet(std::vector<Element> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end()) {
    throw std::invalid_argument("selection contains a duplicate element");
  }
}

bool SelectionSet::contains(const Element& e) const {
  return std::binary_search(elements_.begin(), elements_.end(), e);
}

bool SelectionSet::fits(const CircleSystem& sys) const {
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](const Element& e) { return sys.contains(e); });
}

SeparationParams::SeparationParams(int s, int k) : s(s), k(k) {
  if (s < 0 || k < 0) throw std::invalid_argument("s and k must be nonnegative");
}

std::optional<int> circular_distance(const Element& a, const Element& b,
                                     const CircleSystem& sys) {
  if (a.circle != b.circle) return std::nullopt;
  int gap = std::abs(a.position - b.position);
  return std::min(gap, sys.size(a.circle) - gap);
}

bool is_s_separated(const SelectionSet& set, const CircleSystem& sys, int s) {
  auto elems = set.elements();
  // Canonical order groups each circle's elements together.
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i + 1; j < elems.size() && elems[j].circle == elems[i].circle; ++j) {
      if (*circular_distance(elems[i], elems[j], sys) <= s) return false;
    }
  }
  return true;
}

int flatten(const Element& e, const CircleSystem& sys) {
  require_two_circles(sys);
  if (!sys.contains(e)) throw std::invalid_argument("element " + to_string(e) + " is not in the circle system");
  return e.circle == 1 ? e.position : sys.size(1) + e.position;
}

Element unflatten(int i, const CircleSystem& sys) {
  require_two_circles(sys);
  if (i < 1 || i > sys.total()) {
    throw std::out_of_range("position " + std::to_string(i) + " outside [1, " +
                            std::to_string(sys.total()) + "]");
  }
  int n1 = sys.size(1);
  return i <= n1 ? Element(i, 1) : Element(i - n1, 2);
}

SelectionSet flatten(const SelectionSet& set, const CircleSystem& sys) {
  std::vector<Element> out;
  out.reserve(set.size());
  for (const auto& e : set) out.emplace_back(flatten(e, sys), 1);
  return SelectionSet(std::move(out));
}

SelectionSet unflatten(const SelectionSet& flat, const CircleSystem& sys) {
  std::vector<Element> out;
  out.reserve(flat.size());
  for (const auto& e : flat) {
    if (e.circle != 1) throw std::invalid_argument("flattened sets live on circle 1, got " + to_string(e));
    out.push_back(unflatten(e.position, sys));
  }
  return SelectionSet(std::move(out));
}

std::string to_string(const Element& e) {
  return std::to_string(e.position) + "@" + std::to_string(e.circle);
}

std::string to_string(const SelectionSet& set) {
  std::string out;
  for (const auto& e : set) {
    if (!out.empty()) out += ',';
    out += to_string(e);
  }
  return out;
}

Element parse_element(std::string_view text) {
  text = trim(text);
  auto at = text.find('@');
  if (at == std::string_view::npos) {
    throw std::invalid_argument("malformed element '" + std::string(text) + "', expected POS@CIRCLE");
  }
  return Element(parse_int(text.substr(0, at), "position"),
                 parse_int(text.substr(at + 1), "circle"));
}

SelectionSet parse_selection(std::string_view text) {
  std::vector<Element> out;
  for (auto tok : split_commas(text)) out.push_back(parse_element(tok));
  return SelectionSet(std::move(out));
}

std::string to_position_list(const SelectionSet& set) {
  std::string out;
  for (const auto& e : set) {
    if (e.circle != 1) throw std::invalid_argument("bare position lists describe circle 1 only");
    if (!out.empty()) out += ',';
    out += std::to_string(e.position);
  }
  return out;
}

SelectionSet parse_position_list(std::string_view text) {
  std::vector<Element> out;
  for (auto tok : split_commas(text)) out.emplace_back(parse_int(tok, "position"), 1);
  return SelectionSet(std::move(out));
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  for (auto tok : split_commas(text)) out.push_back(parse_int(tok, "integer"));
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

}  // namespace circsep
