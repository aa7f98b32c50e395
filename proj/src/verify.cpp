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

#include "circsep/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <functional>
#include <thread>

#include <boost/multiprecision/cpp_int.hpp>

#include "circsep/bijection.hpp"
#include "circsep/count.hpp"
#include "circsep/enumerate.hpp"

namespace circsep {

namespace {

using Rational = boost::multiprecision::cpp_rational;

constexpr std::array kAllChecks = {
    Check::circle_closed,        Check::circle_fixed, Check::circle_consistency,
    Check::system_closed,        Check::system_fixed, Check::double_count,
    Check::consistency_triangle, Check::recursion,    Check::convolution,
    Check::fixed_sum,            Check::fixed_sum_printed,
    Check::bijection,            Check::divisibility,
};

constexpr std::array<std::string_view, kAllChecks.size()> kCheckNames = {
    "circle_closed",        "circle_fixed", "circle_consistency",
    "system_closed",        "system_fixed", "double_count",
    "consistency_triangle", "recursion",    "convolution",
    "fixed_sum",            "fixed_sum_printed",
    "bijection",            "divisibility",
};

std::string join_terms(const std::vector<CountValue>& terms) {
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty()) out += '+';
    out += t.str();
  }
  return out;
}

IdentityReport compared(std::string check, ParameterPoint point, const CountValue& lhs,
                        const CountValue& rhs, std::string detail = {}) {
  IdentityReport r;
  r.check = std::move(check);
  r.point = std::move(point);
  r.lhs = lhs.str();
  r.rhs = rhs.str();
  r.outcome = lhs == rhs ? Outcome::pass : Outcome::fail;
  r.detail = std::move(detail);
  return r;
}

IdentityReport skipped(std::string check, ParameterPoint point, std::string reason) {
  IdentityReport r;
  r.check = std::move(check);
  r.point = std::move(point);
  r.outcome = Outcome::skipped;
  r.detail = std::move(reason);
  return r;
}

// Brute-force tallies over the whole family at one point: its size and,
// for every element, how many members contain it.
struct Tally {
  CountValue total = 0;
  std::vector<CountValue> containing;
};

Tally brute_force_tally(const CircleSystem& sys, int s, int k) {
  std::uint64_t total = 0;
  std::vector<std::uint64_t> containing(sys.total(), 0);
  NaiveEnumerator it({sys, {s, k}});
  while (it.step()) {
    ++total;
    for (const auto& e : it.current()) ++containing[sys.index_of(e)];
  }
  Tally t;
  t.total = total;
  t.containing.assign(containing.begin(), containing.end());
  return t;
}

bool all_at_least(const ParameterPoint& p, std::int64_t bound) {
  return std::all_of(p.sizes.begin(), p.sizes.end(), [&](int n) { return n >= bound; });
}

std::string bound_reason(const char* what, const ParameterPoint& p) {
  return std::string("requires ") + what + " (" + to_string(p) + ")";
}

class PointEvaluator {
 public:
  explicit PointEvaluator(const ParameterPoint& point)
      : point_(point), sys_(point.sizes), s_(point.s), k_(point.k),
        sk_(static_cast<std::int64_t>(point.s) * point.k) {}

  std::optional<IdentityReport> run(Check c) {
    const std::string name(to_string(c));
    const int p = sys_.circles();
    const bool one = p == 1, two = p == 2;
    switch (c) {
      case Check::circle_closed:
      case Check::circle_fixed:
      case Check::circle_consistency:
        if (!one) return std::nullopt;
        break;
      case Check::fixed_sum:
      case Check::fixed_sum_printed:
      case Check::bijection:
        if (!two) return std::nullopt;
        break;
      default:
        break;
    }
    try {
      return evaluate(c, name);
    } catch (const DomainError& e) {
      return skipped(name, point_, e.what());
    } catch (const InvariantViolation& e) {
      IdentityReport r;
      r.check = name;
      r.point = point_;
      r.lhs = "invariant violation";
      r.rhs = "";
      r.outcome = Outcome::fail;
      r.detail = e.what();
      return r;
    }
  }

 private:
  const Tally& tally() {
    if (!tally_) tally_ = brute_force_tally(sys_, s_, k_);
    return *tally_;
  }

  IdentityReport evaluate(Check c, const std::string& name) {
    const int n_total = sys_.total();
    switch (c) {
      case Check::circle_closed: {
        if (k_ > 0 && point_.sizes[0] < sk_ + 1) return skipped(name, point_, bound_reason("n ≥ sk+1", point_));
        return compared(name, point_, count_circle(point_.sizes[0], s_, k_), tally().total);
      }
      case Check::circle_fixed: {
        const int n = point_.sizes[0];
        if (k_ < 1 || n < sk_ + 1) return skipped(name, point_, bound_reason("k ≥ 1 and n ≥ sk+1", point_));
        const CountValue closed = count_circle_fixed(n, s_, k_);
        CountValue seen = tally().containing[0];
        std::string detail = "all " + std::to_string(n) + " rotations agree";
        for (int a = 1; a <= n; ++a) {
          const CountValue& v = tally().containing[a - 1];
          if (v != closed) {
            seen = v;
            detail = "fixed element " + std::to_string(a) + "@1";
            break;
          }
        }
        return compared(name, point_, closed, seen, detail);
      }
      case Check::circle_consistency: {
        const int n = point_.sizes[0];
        if (k_ < 1 || n < sk_ + 1) return skipped(name, point_, bound_reason("k ≥ 1 and n ≥ sk+1", point_));
        return compared(name, point_, CountValue(k_) * count_circle(n, s_, k_),
                        CountValue(n) * count_circle_fixed(n, s_, k_));
      }
      case Check::system_closed: {
        if (k_ > 0 && !all_at_least(point_, sk_ + 1)) {
          return skipped(name, point_, bound_reason("every n_i ≥ sk+1", point_));
        }
        return compared(name, point_, count_system(sys_, s_, k_), tally().total);
      }
      case Check::system_fixed: {
        if (k_ < 1) return skipped(name, point_, bound_reason("k ≥ 1", point_));
        if (!all_at_least(point_, sk_)) return skipped(name, point_, bound_reason("every n_i ≥ sk", point_));
        std::optional<CountValue> closed;
        CountValue seen = 0;
        int checked = 0;
        std::string mismatch;
        for (int idx = 0; idx < n_total; ++idx) {
          const Element e = sys_.at_index(idx);
          if (sys_.size(e.circle) < sk_ + 1) continue;
          const CountValue v = count_system_fixed(sys_, s_, k_, e);
          const CountValue& o = tally().containing[idx];
          if (!closed) {
            closed = v;
            seen = o;
          }
          ++checked;
          if ((v != *closed || o != v) && mismatch.empty()) {
            seen = o != v ? o : v;
            mismatch = "fixed element " + to_string(e);
          }
        }
        if (!closed) {
          return skipped(name, point_, bound_reason("some n_j ≥ sk+1 to carry the fixed element", point_));
        }
        return compared(name, point_, *closed, seen,
                        mismatch.empty() ? std::to_string(checked) + " fixed elements checked" : mismatch);
      }
      case Check::double_count: {
        CountValue sum = 0;
        for (const auto& v : tally().containing) sum += v;
        return compared(name, point_, sum, CountValue(k_) * tally().total);
      }
      case Check::consistency_triangle: {
        if (k_ < 1 || !all_at_least(point_, sk_ + 1)) {
          return skipped(name, point_, bound_reason("k ≥ 1 and every n_i ≥ sk+1", point_));
        }
        return compared(name, point_, CountValue(k_) * count_system(sys_, s_, k_),
                        CountValue(n_total) * count_system_fixed(sys_, s_, k_, Element(1, 1)));
      }
      case Check::recursion: {
        auto terms = recursive_terms(sys_, s_, k_);
        CountValue sum = 0;
        for (const auto& t : terms) sum += t;
        return compared(name, point_, sum, count_system_fixed(sys_, s_, k_, Element(1, 1)),
                        "terms " + join_terms(terms));
      }
      case Check::convolution: {
        if (k_ < 1) return skipped(name, point_, bound_reason("k ≥ 1", point_));
        if (sys_.circles() == 2) {
          return verify_convolution_identity(point_.sizes[0], point_.sizes[1], s_, k_);
        }
        return compared(name, point_, count_system(sys_, s_, k_),
                        count_system_convolution(sys_, s_, k_));
      }
      case Check::fixed_sum:
        return verify_fixed_sum_identity(point_.sizes[0], point_.sizes[1], s_, k_);
      case Check::fixed_sum_printed:
        return verify_fixed_sum_identity_printed(point_.sizes[0], point_.sizes[1], s_, k_);
      case Check::bijection:
        return bijection_report(name);
      case Check::divisibility:
        return divisibility_report(name);
    }
    throw std::logic_error("unhandled check");
  }

  IdentityReport bijection_report(const std::string& name) {
    const BijectionReport b = check_bijectivity(sys_, s_, k_);
    if (b.passed()) {
      return compared(name, point_, CountValue(b.domain_size), b.expected,
                      "domain=" + std::to_string(b.domain_size) +
                          " codomain=" + std::to_string(b.codomain_size));
    }
    // Count the images that are hit once and map back to themselves.
    std::vector<SelectionSet> sorted = b.image;
    std::sort(sorted.begin(), sorted.end());
    std::size_t verified = 0;
    for (const auto& x : b.image) {
      auto [lo, hi] = std::equal_range(sorted.begin(), sorted.end(), x);
      if (hi - lo != 1) continue;
      try {
        if (forward(backward(x, sys_, s_), sys_, s_) == x) ++verified;
      } catch (const std::exception&) {
      }
    }
    IdentityReport r = compared(name, point_, CountValue(verified), b.expected);
    r.outcome = Outcome::fail;
    if (r.lhs == r.rhs) r.lhs += " (with failures)";
    for (const auto& c : b.counterexamples) r.detail += (r.detail.empty() ? "" : "; ") + c;
    return r;
  }

  IdentityReport divisibility_report(const std::string& name) {
    if (k_ < 1) return skipped(name, point_, bound_reason("k ≥ 1", point_));
    CountValue remainder_sum = 0;
    int divisions = 0;
    for (int n : point_.sizes) {
      if (n < sk_ + 1) continue;
      const std::int64_t reduced = n - sk_;
      remainder_sum += (CountValue(n) * binomial(reduced, k_)) % reduced;
      ++divisions;
    }
    if (all_at_least(point_, sk_ + 1)) {
      remainder_sum += (CountValue(sys_.total()) * binomial(sys_.total() - sk_ - 1, k_ - 1)) % k_;
      ++divisions;
    }
    if (divisions == 0) return skipped(name, point_, bound_reason("some n_i ≥ sk+1", point_));
    return compared(name, point_, remainder_sum, 0,
                    std::to_string(divisions) + " divisions checked");
  }

  ParameterPoint point_;
  CircleSystem sys_;
  int s_;
  int k_;
  std::int64_t sk_;
  std::optional<Tally> tally_;
};

std::vector<Check> normalized(std::span<const Check> checks) {
  std::vector<Check> out(checks.begin(), checks.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::string to_string(const ParameterPoint& p) {
  std::string sizes;
  for (int n : p.sizes) sizes += (sizes.empty() ? "" : ",") + std::to_string(n);
  return "sizes=" + sizes + " s=" + std::to_string(p.s) + " k=" + std::to_string(p.k);
}

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::pass:
      return "pass";
    case Outcome::fail:
      return "fail";
    case Outcome::skipped:
      return "skipped";
  }
  return "?";
}

nlohmann::ordered_json to_json(const IdentityReport& r) {
  return {{"check", r.check},
          {"sizes", r.point.sizes},
          {"s", r.point.s},
          {"k", r.point.k},
          {"lhs", r.lhs},
          {"rhs", r.rhs},
          {"status", to_string(r.outcome)},
          {"documentation", r.documentation},
          {"detail", r.detail}};
}

std::string to_text(const IdentityReport& r) {
  std::string status(to_string(r.outcome));
  std::transform(status.begin(), status.end(), status.begin(), ::toupper);
  if (r.documentation) status += "(doc)";
  std::string out = status + " " + r.check + " " + to_string(r.point);
  if (r.outcome != Outcome::skipped) out += " lhs=" + r.lhs + " rhs=" + r.rhs;
  if (!r.detail.empty()) out += " [" + r.detail + "]";
  return out;
}

IdentityReport verify_fixed_sum_identity(int m, int n, int s, int k) {
  const ParameterPoint point{{m, n}, s, k};
  const std::int64_t sk = static_cast<std::int64_t>(s) * k;
  if (s < 0 || k < 1) throw DomainError("fixed_sum requires s ≥ 0 and k ≥ 1 (" + to_string(point) + ")");
  if (n < sk + 1) throw DomainError("fixed_sum requires n ≥ sk+1 for the circle carrying the fixed element (" + to_string(point) + ")");
  if (m < sk || m < 1) throw DomainError("fixed_sum requires m ≥ sk (" + to_string(point) + ")");

  std::vector<CountValue> terms;
  CountValue lhs = 0;
  for (int j = 0; j <= k - 1; ++j) {
    CountValue t = binomial(n - static_cast<std::int64_t>(s) * (k - j) - 1, k - j - 1) *
                   count_circle(m, s, j);
    lhs += t;
    terms.push_back(std::move(t));
  }
  const CountValue rhs = binomial(static_cast<std::int64_t>(m) + n - sk - 1, k - 1);
  return compared("fixed_sum", point, lhs, rhs, "terms " + join_terms(terms));
}

IdentityReport verify_fixed_sum_identity_printed(int m, int n, int s, int k) {
  const ParameterPoint point{{m, n}, s, k};
  const std::int64_t sk = static_cast<std::int64_t>(s) * k;
  if (s < 0 || k < 1) throw DomainError("fixed_sum_printed requires s ≥ 0 and k ≥ 1 (" + to_string(point) + ")");
  if (n < sk + 1) throw DomainError("fixed_sum_printed requires n ≥ sk+1 (" + to_string(point) + ")");
  if (m < sk || m < 1) throw DomainError("fixed_sum_printed requires m ≥ sk (" + to_string(point) + ")");

  Rational lhs = 0;
  std::string detail;
  for (int j = 0; j <= k - 1; ++j) {
    const std::int64_t reduced = m - static_cast<std::int64_t>(s) * j;
    const CountValue talbot = binomial(n - static_cast<std::int64_t>(s) * (k - j) - 1, k - j - 1);
    const CountValue tail = binomial(reduced, j - 1);
    const Rational factor{CountValue(m), CountValue(reduced)};
    const Rational term = Rational(talbot) * factor * Rational(tail);
    lhs += term;
    if (detail.empty() && boost::multiprecision::denominator(term) != 1) {
      detail = "non-integer term at j=" + std::to_string(j) + ": " + talbot.str() + "*(" +
               std::to_string(m) + "/" + std::to_string(reduced) + ")*C(" +
               std::to_string(reduced) + "," + std::to_string(j - 1) + ") = " + term.str();
    }
  }
  const CountValue rhs = binomial(static_cast<std::int64_t>(m) + n - sk - 1, k - 1);

  IdentityReport r;
  r.check = "fixed_sum_printed";
  r.point = point;
  r.lhs = lhs.str();
  r.rhs = rhs.str();
  r.outcome = lhs == Rational(rhs) ? Outcome::pass : Outcome::fail;
  r.documentation = true;
  r.detail = detail.empty() ? "all terms integral" : detail;
  return r;
}

IdentityReport verify_convolution_identity(int n1, int n2, int s, int k) {
  const ParameterPoint point{{n1, n2}, s, k};
  if (k < 1) throw DomainError("convolution requires k ≥ 1 (" + to_string(point) + ")");
  const CircleSystem sys({n1, n2});
  const CountValue lhs = count_system(sys, s, k);
  const auto terms = convolution_terms(n1, n2, s, k);
  CountValue rhs = 0;
  for (const auto& t : terms) rhs += t;
  return compared("convolution", point, lhs, rhs, "terms " + join_terms(terms));
}

std::string_view to_string(Check c) { return kCheckNames[static_cast<std::size_t>(c)]; }

std::optional<Check> parse_check(std::string_view name) {
  for (std::size_t i = 0; i < kCheckNames.size(); ++i) {
    if (kCheckNames[i] == name) return kAllChecks[i];
  }
  return std::nullopt;
}

std::span<const Check> all_checks() { return kAllChecks; }

void SweepGrid::validate() const {
  auto range = [](int lo, int hi, int floor, const char* what) {
    if (lo < floor || hi < lo) {
      throw std::invalid_argument(std::string("empty or invalid ") + what + " range [" +
                                  std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
  };
  range(s_min, s_max, 0, "s");
  range(k_min, k_max, 0, "k");
  range(circles_min, circles_max, 1, "circle count");
  range(size_min, size_max, 1, "circle size");
  if (checks.empty()) throw std::invalid_argument("no checks selected");
  if (jobs == 0) throw std::invalid_argument("jobs must be at least 1");
}

std::vector<ParameterPoint> SweepGrid::points() const {
  validate();
  std::vector<ParameterPoint> out;
  for (int s = s_min; s <= s_max; ++s) {
    for (int k = k_min; k <= k_max; ++k) {
      for (int p = circles_min; p <= circles_max; ++p) {
        std::vector<int> sizes(p, size_min);
        while (true) {
          int total = 0;
          for (int n : sizes) total += n;
          if (!max_total || total <= *max_total) out.push_back({sizes, s, k});
          int i = p - 1;
          while (i >= 0 && sizes[i] == size_max) sizes[i--] = size_min;
          if (i < 0) break;
          ++sizes[i];
        }
      }
    }
  }
  return out;
}

std::vector<IdentityReport> verify_point(const ParameterPoint& point,
                                         std::span<const Check> checks) {
  PointEvaluator eval(point);
  std::vector<IdentityReport> out;
  for (Check c : normalized(checks)) {
    if (auto r = eval.run(c)) out.push_back(std::move(*r));
  }
  return out;
}

std::vector<IdentityReport> verify_all(const SweepGrid& grid) {
  const auto points = grid.points();
  const auto checks = normalized(grid.checks);
  std::vector<std::vector<IdentityReport>> per_point(points.size());

  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (std::size_t i = cursor++; i < points.size(); i = cursor++) {
      per_point[i] = verify_point(points[i], checks);
    }
  };
  const unsigned jobs = grid.jobs;
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  std::vector<IdentityReport> out;
  for (auto& v : per_point) {
    std::move(v.begin(), v.end(), std::back_inserter(out));
  }
  return out;
}

bool all_passed(std::span<const IdentityReport> reports) {
  return std::none_of(reports.begin(), reports.end(), [](const IdentityReport& r) {
    return !r.documentation && r.outcome == Outcome::fail;
  });
}

}  // namespace circsep
