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

#include "circsep/enumerate.hpp"

#include <algorithm>
#include <numeric>

namespace circsep {

EnumerationRequest::EnumerationRequest(CircleSystem sys, SeparationParams params,
                                       std::optional<Element> fixed)
    : sys(std::move(sys)), params(params), fixed(fixed) {
  if (this->fixed && !this->sys.contains(*this->fixed)) {
    throw std::invalid_argument("fixed element " + to_string(*this->fixed) +
                                " is not in the circle system");
  }
}

// ---------------------------------------------------------------------------
// NaiveEnumerator

NaiveEnumerator::NaiveEnumerator(EnumerationRequest req) : req_(std::move(req)) {}

bool NaiveEnumerator::advance() {
  const int n = req_.sys.total();
  const int k = req_.params.k;
  if (!started_) {
    started_ = true;
    if (k > n) return false;
    combo_.resize(k);
    std::iota(combo_.begin(), combo_.end(), 0);
    return true;
  }
  int i = k - 1;
  while (i >= 0 && combo_[i] == n - k + i) --i;
  if (i < 0) return false;
  ++combo_[i];
  for (int j = i + 1; j < k; ++j) combo_[j] = combo_[j - 1] + 1;
  return true;
}

bool NaiveEnumerator::accepts() {
  if (req_.fixed) {
    int f = req_.sys.index_of(*req_.fixed);
    if (!std::binary_search(combo_.begin(), combo_.end(), f)) return false;
  }
  scratch_.clear();
  for (int idx : combo_) scratch_.push_back(req_.sys.at_index(idx));
  const int s = req_.params.s;
  for (std::size_t i = 0; i < scratch_.size(); ++i) {
    for (std::size_t j = i + 1; j < scratch_.size(); ++j) {
      auto d = circular_distance(scratch_[i], scratch_[j], req_.sys);
      if (d && *d <= s) return false;
    }
  }
  return true;
}

bool NaiveEnumerator::step() {
  if (done_) return false;
  while (advance()) {
    if (accepts()) return true;
  }
  done_ = true;
  return false;
}

SelectionSet NaiveEnumerator::current() const {
  std::vector<Element> out;
  out.reserve(combo_.size());
  for (int idx : combo_) out.push_back(req_.sys.at_index(idx));
  return SelectionSet(std::move(out));
}

std::optional<SelectionSet> NaiveEnumerator::next() {
  if (!step()) return std::nullopt;
  return current();
}

// ---------------------------------------------------------------------------
// GapEnumerator

GapEnumerator::GapEnumerator(EnumerationRequest req) : req_(std::move(req)) {
  const int s = req_.params.s;
  const int p = req_.sys.circles();
  suffix_cap_.assign(p + 1, 0);
  for (int c = p; c >= 1; --c) {
    // Largest s-separated set on a circle of size n; a lone element always fits.
    int cap = std::max(1, req_.sys.size(c) / (s + 1));
    suffix_cap_[c - 1] = suffix_cap_[c] + cap;
  }
  if (req_.fixed) fixed_index_ = req_.sys.index_of(*req_.fixed);
}

std::optional<int> GapEnumerator::first_candidate(int from) const {
  const CircleSystem& sys = req_.sys;
  const int s = req_.params.s;
  const int n_total = sys.total();
  const int still_needed = req_.params.k - static_cast<int>(picks_.size()) - 1;
  const bool fixed_pending = fixed_index_ && (picks_.empty() || picks_.back() < *fixed_index_);

  int idx = from;
  while (idx < n_total) {
    if (fixed_pending) {
      if (idx > *fixed_index_) return std::nullopt;
      // The last slot is reserved for the fixed element.
      if (still_needed == 0) idx = *fixed_index_;
    }
    const Element e = sys.at_index(idx);
    const int n = sys.size(e.circle);
    const int circle_start = idx - e.position + 1;
    const int next_circle = circle_start + n;

    // Picks already on this circle, if any: the first and the most recent.
    std::optional<int> first_pos, last_pos;
    for (auto it = picks_.rbegin(); it != picks_.rend(); ++it) {
      Element pe = sys.at_index(*it);
      if (pe.circle != e.circle) break;
      if (!last_pos) last_pos = pe.position;
      first_pos = pe.position;
    }
    int lo = 1, hi = n;
    if (last_pos) {
      lo = *last_pos + s + 1;
      hi = *first_pos + n - s - 1;
    }
    hi = std::min(hi, n);
    if (lo > hi || e.position > hi) {
      idx = next_circle;
      continue;
    }
    if (e.position < lo) {
      idx = circle_start + lo - 1;
      continue;
    }
    // Room left on this circle after picking e, bounded by e itself and the
    // wraparound back to the circle's first pick.
    int anchor = first_pos ? *first_pos : e.position;
    int span = anchor + n - s - 1 - (e.position + s + 1) + 1;
    int room = span > 0 ? (span + s) / (s + 1) : 0;
    if (room + suffix_cap_[e.circle] < still_needed) {
      // Later positions on this circle only have less room.
      idx = next_circle;
      continue;
    }
    return idx;
  }
  return std::nullopt;
}

bool GapEnumerator::search(std::optional<int> from) {
  const auto k = static_cast<std::size_t>(req_.params.k);
  while (true) {
    if (picks_.size() == k) {
      // Only reachable without the fixed element when k = 0.
      if (!fixed_index_ || std::binary_search(picks_.begin(), picks_.end(), *fixed_index_)) {
        return true;
      }
    } else if (auto c = first_candidate(from ? *from
                                             : (picks_.empty() ? 0 : picks_.back() + 1))) {
      picks_.push_back(*c);
      from.reset();
      continue;
    }
    if (picks_.empty()) return false;
    from = picks_.back() + 1;
    picks_.pop_back();
  }
}

bool GapEnumerator::step() {
  if (done_) return false;
  bool found;
  if (!started_) {
    started_ = true;
    found = search(std::nullopt);
  } else if (picks_.empty()) {
    found = false;
  } else {
    int from = picks_.back() + 1;
    picks_.pop_back();
    found = search(from);
  }
  if (!found) done_ = true;
  return found;
}

SelectionSet GapEnumerator::current() const {
  std::vector<Element> out;
  out.reserve(picks_.size());
  for (int idx : picks_) out.push_back(req_.sys.at_index(idx));
  return SelectionSet(std::move(out));
}

std::optional<SelectionSet> GapEnumerator::next() {
  if (!step()) return std::nullopt;
  return current();
}

// ---------------------------------------------------------------------------

std::vector<SelectionSet> enumerate_naive(const EnumerationRequest& req) {
  std::vector<SelectionSet> out;
  NaiveEnumerator it(req);
  while (it.step()) out.push_back(it.current());
  return out;
}

std::vector<SelectionSet> enumerate_gap(const EnumerationRequest& req) {
  std::vector<SelectionSet> out;
  GapEnumerator it(req);
  while (it.step()) out.push_back(it.current());
  return out;
}

CountValue count_by_enumeration(const EnumerationRequest& req) {
  std::uint64_t n = 0;
  GapEnumerator it(req);
  while (it.step()) ++n;
  return CountValue(n);
}

}  // namespace circsep
