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

#include "circsep/cli.hpp"

#include <optional>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "circsep/bijection.hpp"
#include "circsep/count.hpp"
#include "circsep/enumerate.hpp"
#include "circsep/verify.hpp"

namespace circsep::cli {

namespace {

using nlohmann::ordered_json;

// Thrown for flag combinations CLI11 cannot express.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join_ints(std::span<const int> v) {
  std::string out;
  for (int x : v) out += (out.empty() ? "" : ",") + std::to_string(x);
  return out;
}

struct SystemArgs {
  std::string sizes;
  int s = 0;
  int k = 0;
  std::string fixed;
  std::string format = "text";
};

void add_system_flags(CLI::App* cmd, SystemArgs& a, bool with_k) {
  cmd->add_option("--sizes", a.sizes, "Circle sizes, e.g. 8,7")->required();
  cmd->add_option("--s", a.s, "Minimum number of objects between two chosen ones")->required();
  if (with_k) cmd->add_option("--k", a.k, "Selection size")->required();
}

void add_format_flag(CLI::App* cmd, std::string& format, std::vector<std::string> allowed) {
  cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember(std::move(allowed)))
      ->capture_default_str();
}

CircleSystem parse_system(const SystemArgs& a) { return CircleSystem(parse_int_list(a.sizes)); }

std::optional<Element> parse_fixed(const SystemArgs& a, const CircleSystem& sys) {
  if (a.fixed.empty()) return std::nullopt;
  Element e = parse_element(a.fixed);
  return sys.element(e.position, e.circle);
}

// ---------------------------------------------------------------------------

int run_count(const SystemArgs& a, const std::string& method, std::ostream& out) {
  const CircleSystem sys = parse_system(a);
  const SeparationParams params(a.s, a.k);
  const auto fixed = parse_fixed(a, sys);

  CountValue value;
  if (method == "closed") {
    if (fixed) {
      value = sys.circles() == 1 ? count_circle_fixed(sys.size(1), a.s, a.k)
                                 : count_system_fixed(sys, a.s, a.k, *fixed);
    } else {
      value = sys.circles() == 1 ? count_circle(sys.size(1), a.s, a.k)
                                 : count_system(sys, a.s, a.k);
    }
  } else if (method == "recursive") {
    if (!fixed || *fixed != Element(1, 1)) {
      throw UsageError("--method recursive counts sets containing 1@1; pass --fixed 1@1");
    }
    value = count_system_fixed_recursive(sys, a.s, a.k);
  } else if (method == "convolution") {
    if (fixed) throw UsageError("--method convolution does not take --fixed");
    value = count_system_convolution(sys, a.s, a.k);
  } else {
    value = count_by_enumeration({sys, params, fixed});
  }

  const std::string fixed_text = fixed ? to_string(*fixed) : "";
  if (a.format == "json") {
    ordered_json j;
    j["sizes"] = std::vector<int>(sys.sizes().begin(), sys.sizes().end());
    j["s"] = a.s;
    j["k"] = a.k;
    j["fixed"] = fixed ? ordered_json(fixed_text) : ordered_json(nullptr);
    j["method"] = method;
    j["count"] = to_decimal(value);
    out << j.dump() << '\n';
  } else if (a.format == "csv") {
    out << "sizes,s,k,fixed,method,count\n"
        << csv_field(join_ints(sys.sizes())) << ',' << a.s << ',' << a.k << ',' << fixed_text
        << ',' << method << ',' << to_decimal(value) << '\n';
  } else {
    out << to_decimal(value) << '\n';
  }
  return kOk;
}

template <typename Stream>
void stream_sets(Stream& it, std::optional<std::size_t> limit, const std::string& format,
                 std::ostream& out) {
  std::size_t emitted = 0;
  if (format == "json") out << '[';
  while ((!limit || emitted < *limit) && it.step()) {
    const SelectionSet set = it.current();
    if (format == "json") {
      ordered_json row = ordered_json::array();
      for (const auto& e : set) row.push_back(to_string(e));
      out << (emitted ? "," : "") << row.dump();
    } else {
      // text and csv differ only in that csv columns are the elements.
      out << to_string(set) << '\n';
    }
    ++emitted;
  }
  if (format == "json") out << "]\n";
}

int run_enumerate(const SystemArgs& a, const std::string& method,
                  std::optional<std::size_t> limit, std::ostream& out) {
  const CircleSystem sys = parse_system(a);
  EnumerationRequest req(sys, SeparationParams(a.s, a.k), parse_fixed(a, sys));
  if (method == "naive") {
    NaiveEnumerator it(std::move(req));
    stream_sets(it, limit, a.format, out);
  } else {
    GapEnumerator it(std::move(req));
    stream_sets(it, limit, a.format, out);
  }
  return kOk;
}

int run_bijection(const SystemArgs& a, const std::string& direction, const std::string& set_text,
                  bool with_trace, std::ostream& out) {
  const CircleSystem sys = parse_system(a);
  if (a.s < 0) throw UsageError("--s must be nonnegative");
  SwitchResult result;
  std::string output;
  if (direction == "forward") {
    result = forward_traced(parse_selection(set_text), sys, a.s);
    output = to_position_list(result.set);
  } else {
    result = backward_traced(parse_position_list(set_text), sys, a.s);
    output = to_string(result.set);
  }

  if (a.format == "json") {
    ordered_json j;
    j["direction"] = direction;
    j["sizes"] = std::vector<int>(sys.sizes().begin(), sys.sizes().end());
    j["s"] = a.s;
    j["input"] = set_text;
    j["output"] = output;
    if (with_trace) j["trace"] = to_json(result.trace);
    out << j.dump() << '\n';
  } else {
    out << output << '\n';
    if (with_trace) out << to_json(result.trace).dump() << '\n';
  }
  return kOk;
}

struct VerifyArgs {
  std::string checks = "all";
  int min_size = 1;
  int max_size = 10;
  int min_k = 1;
  int max_k = 3;
  int min_s = 1;
  int max_s = 2;
  int min_circles = 1;
  int max_circles = 2;
  std::optional<int> max_total;
  unsigned jobs = 1;
  std::string format = "text";
};

int run_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  SweepGrid grid;
  grid.s_min = a.min_s;
  grid.s_max = a.max_s;
  grid.k_min = a.min_k;
  grid.k_max = a.max_k;
  grid.circles_min = a.min_circles;
  grid.circles_max = a.max_circles;
  grid.size_min = a.min_size;
  grid.size_max = a.max_size;
  grid.max_total = a.max_total;
  grid.jobs = a.jobs;
  if (a.checks != "all") {
    grid.checks.clear();
    for (const auto& name : CLI::detail::split(a.checks, ',')) {
      auto c = parse_check(CLI::detail::trim_copy(name));
      if (!c) throw UsageError("unknown check '" + name + "'");
      grid.checks.push_back(*c);
    }
  }
  grid.validate();

  const auto reports = verify_all(grid);
  std::size_t pass = 0, fail = 0, skip = 0, doc = 0;
  if (a.format == "csv") out << "check,sizes,s,k,status,documentation,lhs,rhs,detail\n";
  for (const auto& r : reports) {
    if (r.documentation) {
      ++doc;
    } else if (r.outcome == Outcome::pass) {
      ++pass;
    } else if (r.outcome == Outcome::fail) {
      ++fail;
    } else {
      ++skip;
    }
    if (a.format == "json") {
      out << to_json(r).dump() << '\n';
    } else if (a.format == "csv") {
      out << r.check << ',' << csv_field(join_ints(r.point.sizes)) << ',' << r.point.s << ','
          << r.point.k << ',' << to_string(r.outcome) << ',' << (r.documentation ? "true" : "false")
          << ',' << csv_field(r.lhs) << ',' << csv_field(r.rhs) << ',' << csv_field(r.detail)
          << '\n';
    } else {
      out << to_text(r) << '\n';
    }
  }
  const std::string summary = "summary: " + std::to_string(pass) + " passed, " +
                              std::to_string(fail) + " failed, " + std::to_string(skip) +
                              " skipped, " + std::to_string(doc) + " documentation";
  if (a.format == "text") {
    out << summary << '\n';
  } else {
    err << summary << '\n';
  }
  return all_passed(reports) ? kOk : kVerificationFailed;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Count, enumerate and biject s-separated k-sets on systems of circles", "circsep"};
  app.require_subcommand(1);

  SystemArgs count_args;
  std::string count_method = "closed";
  auto* count_cmd = app.add_subcommand("count", "Count s-separated k-sets");
  add_system_flags(count_cmd, count_args, true);
  count_cmd->add_option("--fixed", count_args.fixed, "Only sets containing POS@CIRCLE");
  count_cmd->add_option("--method", count_method, "closed | recursive | convolution | enumerate")
      ->check(CLI::IsMember({"closed", "recursive", "convolution", "enumerate"}))
      ->capture_default_str();
  add_format_flag(count_cmd, count_args.format, {"text", "json", "csv"});

  SystemArgs enum_args;
  std::string enum_method = "gap";
  std::optional<std::size_t> limit;
  auto* enum_cmd = app.add_subcommand("enumerate", "List s-separated k-sets in canonical order");
  add_system_flags(enum_cmd, enum_args, true);
  enum_cmd->add_option("--fixed", enum_args.fixed, "Only sets containing POS@CIRCLE");
  enum_cmd->add_option("--limit", limit, "Stop after this many sets");
  enum_cmd->add_option("--method", enum_method, "gap | naive")
      ->check(CLI::IsMember({"gap", "naive"}))
      ->capture_default_str();
  add_format_flag(enum_cmd, enum_args.format, {"text", "json", "csv"});

  SystemArgs bij_args;
  std::string direction;
  std::string set_text;
  bool with_trace = false;
  auto* bij_cmd = app.add_subcommand("bijection", "Map between two circles and one circle");
  bij_cmd->add_option("direction", direction, "forward | backward")
      ->required()
      ->check(CLI::IsMember({"forward", "backward"}));
  add_system_flags(bij_cmd, bij_args, false);
  bij_cmd->add_option("--set", set_text, "Input set: POS@CIRCLE list (forward) or positions (backward)")
      ->required();
  bij_cmd->add_flag("--trace", with_trace, "Also print the switch trace as JSON");
  add_format_flag(bij_cmd, bij_args.format, {"text", "json"});

  VerifyArgs ver;
  auto* ver_cmd = app.add_subcommand("verify", "Sweep all identities against brute force");
  ver_cmd->add_option("--checks", ver.checks, "Comma-separated check names, or all")
      ->capture_default_str();
  ver_cmd->add_option("--min-size", ver.min_size)->capture_default_str();
  ver_cmd->add_option("--max-size", ver.max_size)->capture_default_str();
  ver_cmd->add_option("--min-k", ver.min_k)->capture_default_str();
  ver_cmd->add_option("--max-k", ver.max_k)->capture_default_str();
  ver_cmd->add_option("--min-s", ver.min_s)->capture_default_str();
  ver_cmd->add_option("--max-s", ver.max_s)->capture_default_str();
  ver_cmd->add_option("--min-circles", ver.min_circles)->capture_default_str();
  ver_cmd->add_option("--max-circles", ver.max_circles)->capture_default_str();
  ver_cmd->add_option("--max-total", ver.max_total, "Skip systems with more objects than this");
  ver_cmd->add_option("--jobs", ver.jobs, "Worker threads")->capture_default_str();
  add_format_flag(ver_cmd, ver.format, {"text", "json", "csv"});

  std::vector<const char*> argv{"circsep"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (count_cmd->parsed()) return run_count(count_args, count_method, out);
    if (enum_cmd->parsed()) return run_enumerate(enum_args, enum_method, limit, out);
    if (bij_cmd->parsed()) return run_bijection(bij_args, direction, set_text, with_trace, out);
    return run_verify(ver, out, err);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const InvariantViolation& e) {
    err << "internal invariant violated: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace circsep::cli
