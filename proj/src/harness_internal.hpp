#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "pgt/harness.hpp"
#include "pgt/subgroup_set.hpp"

namespace pgt::harness::detail {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Check {
  std::string id;
  int criterion = 0;
  std::string claim;
  std::string suite;
  std::function<Outcome()> run;
};

/// Set equality, reporting orders and a witness from the symmetric difference.
Outcome compare_sets(const SubgroupSet& computed, const SubgroupSet& expected,
                     std::string_view expected_name);
Outcome compare_value(std::uint64_t computed, std::uint64_t expected, std::string_view what);
Outcome holds(bool condition, std::string detail);
/// Conjunction; details joined with "; ".
Outcome all_of(std::vector<Outcome> parts);

SubgroupSet subgroup_generated(std::size_t degree, std::vector<Permutation> gens);

std::vector<Check> criterion_checks(const Options& options);
std::vector<Check> property_checks(const Options& options);

CheckResult run_check(const Check& check);

}  // namespace pgt::harness::detail
