#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "pgt/perm_group.hpp"

namespace pgt::harness {

enum class Status { Pass, Fail, Skipped };

const char* to_string(Status status) noexcept;

struct CheckResult {
  std::string id;
  /// Acceptance criterion this check belongs to (1-18).
  int criterion = 0;
  std::string claim;
  Status status = Status::Skipped;
  /// Orders found, or on failure computed vs expected plus a witness; for
  /// skipped checks, the reason.
  std::string detail;
  double ms = 0;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;

  std::size_t count(Status status) const;
  bool ok() const { return count(Status::Fail) == 0; }
};

struct Options {
  unsigned threads = 1;
  /// Upper bound for the remark_condition prime scan.
  std::uint64_t remark_bound = 10000;
  /// Oracle-based properties run on corpus groups up to this order.
  std::uint64_t property_order_limit = 2000;
  /// Called after each check, in registration order.
  std::function<void(const CheckResult&)> on_result;
};

/// core, wreath, matrix, mclain, fib, properties, all.
const std::vector<std::string>& suite_names();

/// Throws Error(InvalidParameter) listing the valid names when `name` is not
/// one of them. Capacity problems never throw: they become Skipped.
SuiteResult run_suite(std::string_view name, const Options& options = {});

struct CorpusEntry {
  std::string spec;
  PermGroup group;
};

/// Registered spec strings, in a fixed order.
const std::vector<std::string>& corpus_specs();
/// Builds every corpus group.
std::vector<CorpusEntry> corpus();

enum class WreathTop { Alt, Sym };

/// The subgroup of C(p) wr Top(n) predicted to be the pseudocentre. K is the
/// top group, B the base group.
enum class WreathCase {
  Whole,                 // G
  Base,                  // B
  TopCommutator,         // [K, B]
  TopTimesCommutator,    // K ⋉ [K, B]
  KleinTimesCommutator,  // V4 ⋉ [K, B]
  AltTimesBase,          // Alt(n) ⋉ B
  AltTimesCommutator,    // Alt(n) ⋉ [Alt(n), B]
  AltCommutator,         // [Alt(n), B]
};

const char* describe(WreathCase c) noexcept;

/// Requires p prime and n >= 3.
WreathCase predict_wreath_case(std::uint32_t p, std::size_t n, WreathTop top);

/// Builds C(p) wr Top(n), computes P(G) and compares it as a set with the
/// predicted subgroup.
CheckResult check_wreath_case(std::uint32_t p, std::size_t n, WreathTop top,
                              unsigned threads = 1);

std::string suite_text(const SuiteResult& result);
std::string suite_json(const SuiteResult& result, int indent = -1);

}  // namespace pgt::harness
