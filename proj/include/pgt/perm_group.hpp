#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "pgt/permutation.hpp"
#include "pgt/stabilizer_chain.hpp"
#include "pgt/subgroup_set.hpp"

namespace pgt {

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 20;

/// Process-wide cap picked up by newly constructed groups.
std::uint64_t default_enumeration_cap() noexcept;
void set_default_enumeration_cap(std::uint64_t cap);

/// Conjugacy classes as orbits of generator conjugation over the element set.
struct ConjugacyClasses {
  /// One representative per class: the lexicographically smallest member.
  std::vector<Permutation> reps;
  std::vector<std::size_t> sizes;
  /// class_of[i] is the class of elements()[i].
  std::vector<std::uint32_t> class_of;
};

/// A permutation group given by generators.
///
/// The stabilizer chain, element set and conjugacy classes are computed on
/// first use and cached. Copies share the cache; all cached data is immutable
/// once built, so a PermGroup may be read from several threads.
class PermGroup {
 public:
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  /// Adopts an already-built chain for the group generated by `generators`.
  PermGroup(std::size_t degree, std::vector<Permutation> generators, StabilizerChain chain);

  static PermGroup trivial(std::size_t degree);
  /// Group generated by a small generating set extracted from `set`; the
  /// element cache is seeded with `set`.
  static PermGroup from_subgroup(const SubgroupSet& set);

  std::size_t degree() const noexcept { return degree_; }
  std::span<const Permutation> generators() const noexcept { return generators_; }

  std::uint64_t enumeration_cap() const noexcept { return cap_; }
  void set_enumeration_cap(std::uint64_t cap) noexcept { cap_ = cap; }

  const StabilizerChain& chain() const;
  BigInt order() const;
  /// Order as a 64-bit value; throws CapacityError when it does not fit.
  std::uint64_t order_u64() const;
  bool contains(const Permutation& p) const;

  /// Every element, canonically ordered. Throws CapacityError past the cap.
  const SubgroupSet& elements() const;
  const ConjugacyClasses& classes() const;

  bool is_trivial() const { return generators_.empty(); }

 private:
  struct Cache;

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::uint64_t cap_;
  std::shared_ptr<Cache> cache_;
};

/// A small generating set of an explicit subgroup, found greedily: an
/// element is kept when it is not already generated by the earlier ones.
std::vector<Permutation> generating_set(const SubgroupSet& set);

}  // namespace pgt
