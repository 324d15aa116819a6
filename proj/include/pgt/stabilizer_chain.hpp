#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pgt/permutation.hpp"

namespace pgt {

using BigInt = boost::multiprecision::cpp_int;

/// Base and strong generating set built by deterministic Schreier-Sims.
///
/// Level i stabilizes base[0..i-1] pointwise; its basic orbit is the orbit of
/// base[i] under the strong generators of that level, and for every orbit
/// point b the transversal element u_b satisfies u_b[base[i]] == b.
class StabilizerChain {
 public:
  struct Level {
    Point base_point = 0;
    std::vector<Permutation> generators;
    std::vector<Point> orbit;
    /// Indexed by point; -1 when the point is not in the orbit, else an index
    /// into `orbit` and `transversal`.
    std::vector<int> orbit_index;
    std::vector<Permutation> transversal;
    std::vector<Permutation> transversal_inverse;
  };

  explicit StabilizerChain(std::size_t degree);
  StabilizerChain(std::size_t degree, std::span<const Permutation> generators);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t length() const noexcept { return levels_.size(); }
  const Level& level(std::size_t i) const { return levels_[i]; }
  std::vector<Point> base() const;

  BigInt order() const;

  /// Exact membership.
  bool contains(const Permutation& p) const;

  /// Adds a generator and restores the BSGS property. Returns false when the
  /// permutation was already a member.
  bool extend(const Permutation& p);

  /// Sifts `p` through the chain starting at `from_level`. Returns the
  /// residue and the level at which sifting stopped (length() on success).
  std::pair<Permutation, std::size_t> sift(Permutation p, std::size_t from_level = 0) const;

  /// Calls `visit` for every group element, in no particular order.
  void for_each_element(const std::function<void(const Permutation&)>& visit) const;

 private:
  void append_level(Point base_point);
  void rebuild_orbit(std::size_t level);
  void run(std::size_t start_level);

  std::size_t degree_;
  std::vector<Level> levels_;
};

}  // namespace pgt
