#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "pgt/perm_group.hpp"
#include "pgt/subgroup_set.hpp"

namespace pgt {

inline constexpr std::uint64_t kNaiveOracleCap = 5000;
inline constexpr std::size_t kDefaultSeriesSteps = 30;

/// P(G): the intersection of the normal closures of all centralizers.
///
/// Works over one representative per conjugacy class (C_G(g^x)^G = C_G(g)^G),
/// taking smallest centralizers first, and stops as soon as the running
/// intersection has shrunk to Z(G), which always lies in P(G). With
/// `threads` > 1 the normal closures are computed concurrently.
SubgroupSet pseudocentre(const PermGroup& group, unsigned threads = 1);

/// The literal definition, one centralizer per element, using set-based
/// closures only. Kept independent of `pseudocentre` to serve as its oracle.
SubgroupSet pseudocentre_naive(const PermGroup& group, std::uint64_t cap = kNaiveOracleCap);

/// Terms P_0 = 1 < P_1 < ... of the upper pseudocentral series, where
/// P_{i+1}/P_i = P(G/P_i).
struct PseudoSeries {
  std::vector<SubgroupSet> terms;
  /// False only when max_steps ran out before the series stopped growing.
  bool stabilized = false;
  bool reaches_group = false;

  std::vector<std::uint64_t> sizes() const;
};

PseudoSeries upper_pseudocentral_series(const PermGroup& group,
                                        std::size_t max_steps = kDefaultSeriesSteps,
                                        unsigned threads = 1);

/// Least n with P_n(G) = G, or nullopt when the series does not reach G
/// within `max_steps`.
std::optional<std::size_t> pseudonilpotent_class(const PermGroup& group,
                                                 std::size_t max_steps = kDefaultSeriesSteps);
bool is_pseudocentral(const PermGroup& group);

}  // namespace pgt
