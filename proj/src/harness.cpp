#include "pgt/harness.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "harness_internal.hpp"
#include "pgt/error.hpp"

namespace pgt::harness {

namespace detail {

Outcome compare_sets(const SubgroupSet& computed, const SubgroupSet& expected,
                     std::string_view expected_name) {
  std::ostringstream out;
  if (computed == expected) {
    out << "order " << computed.size() << " = " << expected_name;
    return {true, out.str()};
  }
  out << "computed order " << computed.size() << ", expected " << expected_name << " of order "
      << expected.size();
  auto witness = [&](const SubgroupSet& a, const SubgroupSet& b, const char* where) {
    for (const Permutation& x : a) {
      if (!b.contains(x)) {
        out << "; witness " << x.to_cycle_string() << " " << where;
        return true;
      }
    }
    return false;
  };
  if (!witness(computed, expected, "computed only")) witness(expected, computed, "expected only");
  return {false, out.str()};
}

Outcome compare_value(std::uint64_t computed, std::uint64_t expected, std::string_view what) {
  std::ostringstream out;
  if (computed == expected) {
    out << what << " = " << computed;
    return {true, out.str()};
  }
  out << what << ": computed " << computed << ", expected " << expected;
  return {false, out.str()};
}

Outcome holds(bool condition, std::string detail) {
  return {condition, condition ? std::move(detail) : "violated: " + detail};
}

Outcome all_of(std::vector<Outcome> parts) {
  Outcome out;
  for (Outcome& part : parts) {
    out.pass = out.pass && part.pass;
    if (part.detail.empty()) continue;
    if (!out.detail.empty()) out.detail += "; ";
    out.detail += part.detail;
  }
  return out;
}

SubgroupSet subgroup_generated(std::size_t degree, std::vector<Permutation> gens) {
  return PermGroup(degree, std::move(gens)).elements();
}

CheckResult run_check(const Check& check) {
  CheckResult r{check.id, check.criterion, check.claim, Status::Fail, {}, 0};
  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome o = check.run();
    r.status = o.pass ? Status::Pass : Status::Fail;
    r.detail = std::move(o.detail);
  } catch (const CapacityError& e) {
    r.status = Status::Skipped;
    r.detail = e.what();
  } catch (const std::exception& e) {
    r.status = Status::Fail;
    r.detail = std::string("exception: ") + e.what();
  }
  r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
             .count();
  return r;
}

}  // namespace detail

const char* to_string(Status status) noexcept {
  switch (status) {
    case Status::Pass: return "pass";
    case Status::Fail: return "FAIL";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

std::size_t SuiteResult::count(Status status) const {
  return static_cast<std::size_t>(std::count_if(
      checks.begin(), checks.end(), [&](const CheckResult& c) { return c.status == status; }));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"core",  "wreath",     "matrix", "mclain",
                                                 "fib",   "properties", "all"};
  return names;
}

SuiteResult run_suite(std::string_view name, const Options& options) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    std::string msg = "unknown suite '" + std::string(name) + "'; valid suites:";
    for (const std::string& n : names) msg += " " + n;
    throw Error(ErrorCode::InvalidParameter, msg);
  }
  std::vector<detail::Check> checks;
  if (name != "properties") checks = detail::criterion_checks(options);
  if (name == "properties" || name == "all") {
    std::vector<detail::Check> props = detail::property_checks(options);
    checks.insert(checks.end(), std::make_move_iterator(props.begin()),
                  std::make_move_iterator(props.end()));
  }

  SuiteResult result{std::string(name), {}};
  for (const detail::Check& c : checks) {
    if (name != "all" && c.suite != name) continue;
    result.checks.push_back(detail::run_check(c));
    if (options.on_result) options.on_result(result.checks.back());
  }
  return result;
}

std::string suite_text(const SuiteResult& result) {
  std::ostringstream out;
  std::size_t width = 4;
  for (const CheckResult& c : result.checks) width = std::max(width, c.id.size());
  for (const CheckResult& c : result.checks) {
    out << std::left << std::setw(8) << to_string(c.status) << std::setw(static_cast<int>(width) + 2)
        << c.id << std::right << std::setw(10) << std::fixed << std::setprecision(1) << c.ms
        << " ms  " << c.detail << "\n";
  }
  out << "suite " << result.suite << ": " << result.count(Status::Pass) << " passed, "
      << result.count(Status::Fail) << " failed, " << result.count(Status::Skipped)
      << " skipped, " << result.checks.size() << " total\n";
  return out.str();
}

std::string suite_json(const SuiteResult& result, int indent) {
  nlohmann::ordered_json j;
  j["suite"] = result.suite;
  j["passed"] = result.count(Status::Pass);
  j["failed"] = result.count(Status::Fail);
  j["skipped"] = result.count(Status::Skipped);
  j["total"] = result.checks.size();
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const CheckResult& c : result.checks) {
    list.push_back({{"id", c.id},
                    {"criterion", c.criterion},
                    {"claim", c.claim},
                    {"status", to_string(c.status)},
                    {"detail", c.detail},
                    {"ms", c.ms}});
  }
  j["checks"] = std::move(list);
  return j.dump(indent);
}

}  // namespace pgt::harness
