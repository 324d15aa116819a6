#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pgt/perm_group.hpp"
#include "pgt/pseudocentre.hpp"

namespace pgt {

/// How much of a report to compute. Each scope includes the previous one.
enum class ReportScope { Info, Pseudocentre, Series };

struct ReportOptions {
  ReportScope scope = ReportScope::Series;
  std::size_t max_steps = kDefaultSeriesSteps;
  unsigned threads = 1;
  /// Keep the elements of P(G) in canonical order.
  bool include_elements = false;
};

struct PseudoReport {
  std::string spec;
  std::size_t degree = 0;
  std::uint64_t order = 0;
  std::uint64_t centre_order = 0;
  std::uint64_t derived_order = 0;
  std::uint64_t second_derived_order = 0;

  // Unset below the Pseudocentre scope.
  std::optional<std::uint64_t> pseudocentre_order;
  std::optional<bool> is_pseudocentral;
  std::optional<bool> p_equals_centre;
  std::optional<bool> p_equals_derived;

  // Unset below the Series scope. `pseudo_class` stays unset when the series
  // did not reach G within the step limit.
  std::optional<std::vector<std::uint64_t>> series;
  std::optional<std::size_t> pseudo_class;

  std::vector<Permutation> elements;
  /// Stage name and wall-clock milliseconds, in execution order.
  std::vector<std::pair<std::string, double>> timings_ms;
};

PseudoReport pseudo_report(const PermGroup& group, std::string spec_text,
                           const ReportOptions& options = {});

/// Keys: spec, degree, order, centre_order, derived_order, pseudocentre_order,
/// flags{is_pseudocentral, p_equals_centre, p_equals_derived}, series, class,
/// timings_ms; plus "elements" when requested. Fields outside the computed
/// scope are null.
std::string report_json(const PseudoReport& report, int indent = -1);
std::string report_text(const PseudoReport& report);

}  // namespace pgt
