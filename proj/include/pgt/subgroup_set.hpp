#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pgt/permutation.hpp"

namespace pgt {

/// An explicit subgroup, stored as its elements in canonical (lexicographic)
/// order. Construction does not re-verify closure; use `is_closed()` when a
/// set comes from an untrusted source.
class SubgroupSet {
 public:
  SubgroupSet() = default;

  /// The trivial subgroup of the given degree.
  static SubgroupSet trivial(std::size_t degree);

  /// Takes any collection of elements; sorts and removes duplicates.
  static SubgroupSet from_elements(std::size_t degree, std::vector<Permutation> elements);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool is_trivial() const noexcept { return elements_.size() <= 1; }

  std::span<const Permutation> elements() const noexcept { return elements_; }
  const Permutation& operator[](std::size_t i) const { return elements_[i]; }
  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }

  bool contains(const Permutation& p) const;
  /// Position of `p` in canonical order, or size() when absent.
  std::size_t index_of(const Permutation& p) const;

  bool is_subset_of(const SubgroupSet& other) const;

  /// Full closure pass: identity present, closed under products and inverses.
  bool is_closed() const;

  friend bool operator==(const SubgroupSet&, const SubgroupSet&) = default;

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;
};

}  // namespace pgt
