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

#include "circsep/bijection.hpp"

#include <algorithm>
#include <set>

#include "circsep/enumerate.hpp"

namespace circsep {

namespace {

constexpr std::size_t kMaxCounterexamples = 16;

void require_bounds(const char* op, const CircleSystem& sys, int s, int k) {
  if (sys.circles() != 2) {
    throw DomainError(std::string(op) + " requires exactly two circles (p = 2), got p = " +
                      std::to_string(sys.circles()));
  }
  if (s < 0) throw DomainError(std::string(op) + " requires s ≥ 0");
  if (k < 1) throw DomainError(std::string(op) + " requires k ≥ 1");
  const std::int64_t sk = static_cast<std::int64_t>(s) * k;
  const std::string at = " (n_1=" + std::to_string(sys.size(1)) + ", n_2=" +
                         std::to_string(sys.size(2)) + ", s=" + std::to_string(s) +
                         ", k=" + std::to_string(k) + ")";
  if (sys.size(1) < sk + 1) throw DomainError(std::string(op) + " requires n_1 ≥ sk+1" + at);
  if (sys.size(2) < sk) throw DomainError(std::string(op) + " requires n_2 ≥ sk" + at);
}

int window_circle(Direction dir, int i) {
  bool even = i % 2 == 0;
  if (dir == Direction::zig) return even ? 2 : 1;
  return even ? 1 : 2;
}

// The switch loop shared by zig and zag. `state` is a valid starting set.
SwitchResult run_switches(Direction dir, std::vector<Element> state, const CircleSystem& sys,
                          int s) {
  const int n1 = sys.size(1);
  const int n2 = sys.size(2);
  const int k = static_cast<int>(state.size());
  int a_prev = dir == Direction::zig ? n1 + 1 : n2 + 1;
  int z_prev = dir == Direction::zig ? n2 + 1 : n1 + 1;

  ZigZagTrace trace{dir, {}};
  for (int i = 0;; ++i) {
    const int circle = window_circle(dir, i);
    Window w{circle, std::max(1, z_prev - s), std::min(z_prev - 1, sys.size(circle))};

    auto in_window = [&](const Element& e) {
      return e.circle == w.circle && e.position >= w.lo && e.position <= w.hi;
    };
    auto hits = std::count_if(state.begin(), state.end(), in_window);
    if (hits == 0) break;
    if (hits > 1) {
      throw InvariantViolation("switch window " + std::to_string(w.lo) + ".." +
                               std::to_string(w.hi) + " on circle " + std::to_string(w.circle) +
                               " holds more than one element");
    }
    // A run removes at most k - 1 distinct elements, (1, 1) never among them.
    if (i >= k - 1) throw InvariantViolation("switch run exceeded k - 1 steps");

    auto hit = std::find_if(state.begin(), state.end(), in_window);
    const int removed = hit->position;
    const int gap = z_prev - removed;
    const int added = a_prev - gap;
    const int other = 3 - circle;
    if (added < 1 || added > sys.size(other)) {
      throw InvariantViolation("switch step inserts position " + std::to_string(added) +
                               " outside circle " + std::to_string(other));
    }
    const Element inserted(added, other);
    if (hit->circle == 1 && removed == 1) {
      throw InvariantViolation("switch step would remove (1,1)");
    }
    if (std::find(state.begin(), state.end(), inserted) != state.end()) {
      throw InvariantViolation("switch step inserts " + to_string(inserted) +
                               ", which is already present");
    }
    *hit = inserted;
    trace.steps.push_back({i, w, removed, gap, added});
    a_prev = removed;
    z_prev = added;
  }
  return {SelectionSet(std::move(state)), std::move(trace)};
}

std::vector<Element> as_vector(const SelectionSet& set) {
  return {set.begin(), set.end()};
}

CircleSystem flat_system(const CircleSystem& sys) { return CircleSystem({sys.total()}); }

}  // namespace

nlohmann::ordered_json to_json(const ZigZagTrace& trace) {
  nlohmann::ordered_json steps = nlohmann::ordered_json::array();
  for (const auto& st : trace.steps) {
    steps.push_back({{"i", st.index},
                     {"window", {{"circle", st.window.circle}, {"lo", st.window.lo}, {"hi", st.window.hi}}},
                     {"removed", st.removed},
                     {"d", st.gap},
                     {"added", st.added}});
  }
  return {{"direction", trace.direction == Direction::zig ? "zig" : "zag"},
          {"order", trace.order()},
          {"steps", std::move(steps)}};
}

SwitchResult zig(const SelectionSet& a, const CircleSystem& sys, int s) {
  require_bounds("zig", sys, s, static_cast<int>(a.size()));
  if (!a.fits(sys)) throw DomainError("zig: set " + to_string(a) + " is not in the circle system");
  if (!a.contains(Element(1, 1))) throw DomainError("zig requires (1,1) in the set");
  if (!is_s_separated(a, sys, s)) {
    throw DomainError("zig requires an s-separated set, got " + to_string(a));
  }
  return run_switches(Direction::zig, as_vector(a), sys, s);
}

SwitchResult zag(const SelectionSet& unflattened, const CircleSystem& sys, int s) {
  require_bounds("zag", sys, s, static_cast<int>(unflattened.size()));
  if (!unflattened.fits(sys)) {
    throw DomainError("zag: set " + to_string(unflattened) + " is not in the circle system");
  }
  SelectionSet flat = flatten(unflattened, sys);
  if (!flat.contains(Element(1, 1))) throw DomainError("zag requires 1 in the flattened set");
  if (!is_s_separated(flat, flat_system(sys), s)) {
    throw DomainError("zag requires a set that is s-separated on [n_1+n_2], got " +
                      to_position_list(flat));
  }
  return run_switches(Direction::zag, as_vector(unflattened), sys, s);
}

SwitchResult forward_traced(const SelectionSet& a, const CircleSystem& sys, int s) {
  auto r = zig(a, sys, s);
  return {flatten(r.set, sys), std::move(r.trace)};
}

SelectionSet forward(const SelectionSet& a, const CircleSystem& sys, int s) {
  return forward_traced(a, sys, s).set;
}

SwitchResult backward_traced(const SelectionSet& flat, const CircleSystem& sys, int s) {
  if (sys.circles() != 2) {
    throw DomainError("backward requires exactly two circles (p = 2), got p = " +
                      std::to_string(sys.circles()));
  }
  if (!flat.fits(flat_system(sys))) {
    throw DomainError("backward: set " + to_position_list(flat) + " is not in [1, " +
                      std::to_string(sys.total()) + "]");
  }
  return zag(unflatten(flat, sys), sys, s);
}

SelectionSet backward(const SelectionSet& flat, const CircleSystem& sys, int s) {
  return backward_traced(flat, sys, s).set;
}

BijectionReport check_bijectivity(const CircleSystem& sys, int s, int k) {
  require_bounds("check_bijectivity", sys, s, k);
  BijectionReport rep;
  rep.n1 = sys.size(1);
  rep.n2 = sys.size(2);
  rep.s = s;
  rep.k = k;
  rep.expected = binomial(sys.total() - static_cast<std::int64_t>(s) * k - 1, k - 1);

  const CircleSystem flat_sys = flat_system(sys);
  const auto domain = enumerate_naive({sys, {s, k}, Element(1, 1)});
  const auto codomain = enumerate_naive({flat_sys, {s, k}, Element(1, 1)});
  rep.domain_size = domain.size();
  rep.codomain_size = codomain.size();

  auto note = [&](bool& flag, const std::string& what) {
    flag = false;
    if (rep.counterexamples.size() < kMaxCounterexamples) rep.counterexamples.push_back(what);
  };

  rep.sizes_match = CountValue(rep.domain_size) == rep.expected &&
                    CountValue(rep.codomain_size) == rep.expected;
  if (!rep.sizes_match) {
    note(rep.sizes_match, "|domain|=" + std::to_string(rep.domain_size) + ", |codomain|=" +
                              std::to_string(rep.codomain_size) + ", expected " +
                              rep.expected.str());
  }

  for (const auto& a : domain) {
    const std::string tag = "A={" + to_string(a) + "}: ";
    SwitchResult fwd, bwd;
    try {
      fwd = forward_traced(a, sys, s);
    } catch (const std::exception& e) {
      note(rep.step_invariants, tag + "forward failed: " + e.what());
      continue;
    }
    rep.image.push_back(fwd.set);
    if (!std::binary_search(codomain.begin(), codomain.end(), fwd.set)) {
      note(rep.lands_in_codomain, tag + "F(A)={" + to_position_list(fwd.set) + "} not in codomain");
      continue;
    }
    try {
      bwd = backward_traced(fwd.set, sys, s);
    } catch (const std::exception& e) {
      note(rep.round_trip_domain, tag + "backward failed: " + e.what());
      continue;
    }
    if (bwd.set != a) {
      note(rep.round_trip_domain, tag + "G(F(A))={" + to_string(bwd.set) + "}");
    }
    if (fwd.trace.order() != bwd.trace.order()) {
      note(rep.orders_match, tag + "z-order " + std::to_string(fwd.trace.order()) +
                                 " vs zag order " + std::to_string(bwd.trace.order()));
    } else {
      for (std::size_t i = 0; i < fwd.trace.steps.size(); ++i) {
        const auto& z = fwd.trace.steps[i];
        const auto& zb = bwd.trace.steps[i];
        if (zb.removed != z.added || zb.gap != z.gap || zb.added != z.removed) {
          note(rep.steps_mirror, tag + "step " + std::to_string(i) + " is not mirrored");
          break;
        }
      }
    }

    // Step-level invariants on both runs.
    const SelectionSet unflat = unflatten(fwd.set, sys);
    for (const auto* run : {&fwd, &bwd}) {
      const SelectionSet& origin = run == &fwd ? a : unflat;
      const auto& trace = run->trace;
      std::set<Element> removed;
      bool ok = trace.order() <= k - 1;
      for (const auto& st : trace.steps) {
        const Element gone(st.removed, st.window.circle);
        ok = ok && st.gap >= 1 && st.gap <= s && st.window.hi - st.window.lo + 1 <= s &&
             st.removed >= st.window.lo && st.removed <= st.window.hi && origin.contains(gone) &&
             removed.insert(gone).second && gone != Element(1, 1);
      }
      if (!ok) {
        note(rep.step_invariants, tag + (trace.direction == Direction::zig ? "zig" : "zag") +
                                      " trace breaks a step invariant");
      }
    }
    if (!unflatten(fwd.set, sys).contains(Element(1, 1)) || !bwd.set.contains(Element(1, 1))) {
      note(rep.step_invariants, tag + "(1,1) lost");
    }
  }

  std::vector<SelectionSet> sorted = rep.image;
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
    note(rep.injective, "F is not injective: {" + to_position_list(*dup) + "} hit twice");
  }

  for (const auto& x : codomain) {
    try {
      auto back = backward(x, sys, s);
      auto again = forward(back, sys, s);
      if (again != x) {
        note(rep.round_trip_codomain, "X={" + to_position_list(x) + "}: F(G(X))={" +
                                          to_position_list(again) + "}");
      }
    } catch (const std::exception& e) {
      note(rep.round_trip_codomain, "X={" + to_position_list(x) + "}: " + e.what());
    }
  }
  return rep;
}

}  // namespace circsep
