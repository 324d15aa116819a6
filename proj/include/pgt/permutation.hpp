#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace pgt {

using Point = std::uint16_t;

/// Largest supported degree; points are stored as 16-bit indices.
inline constexpr std::size_t kMaxDegree = 65535;

/// A bijection of {0, ..., d-1} stored as its image sequence.
///
/// Permutations act on the right: `compose(p, q)` first applies `p`, then
/// `q`, so `compose(p, q)[i] == q[p[i]]`. Ordering is lexicographic on the
/// image sequence, which is the canonical order used by SubgroupSet.
class Permutation {
 public:
  Permutation() = default;

  /// Validates that `images` is a bijection; throws InvalidParameter otherwise.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Builds a permutation from disjoint cycles given on 0-based points.
  static Permutation from_cycles(
      std::size_t degree, std::initializer_list<std::initializer_list<std::size_t>> cycles);
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<std::size_t>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](std::size_t i) const noexcept { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;

  /// Order of the permutation as a group element (lcm of cycle lengths).
  std::uint64_t order() const;

  /// Smallest point moved, or degree() when this is the identity.
  std::size_t first_moved_point() const noexcept;

  /// Cycle notation with 0-based points, "()" for the identity.
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation inverse(const Permutation&);
  friend Permutation conjugate(const Permutation&, const Permutation&);
  friend Permutation power(const Permutation&, std::int64_t);

  std::vector<Point> images_;
};

/// p then q.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
/// x^-1 g x.
Permutation conjugate(const Permutation& g, const Permutation& x);
/// x^-1 y^-1 x y.
Permutation commutator(const Permutation& x, const Permutation& y);
Permutation power(const Permutation& p, std::int64_t exponent);

/// True when p and q commute; cheaper than comparing two products.
bool commutes(const Permutation& p, const Permutation& q);

std::ostream& operator<<(std::ostream& os, const Permutation& p);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace pgt
