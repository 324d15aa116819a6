#pragma once

// Brute-force reference computations for the tests. Nothing here touches
// stabilizer chains or the library's closure code: groups are closed by
// breadth-first multiplication over std::set.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "pgt/permutation.hpp"
#include "pgt/subgroup_set.hpp"

namespace oracle {

using pgt::Permutation;
using Set = std::set<Permutation>;

inline Set closure(std::size_t degree, const std::vector<Permutation>& gens) {
  Set out{Permutation::identity(degree)};
  std::vector<Permutation> frontier(out.begin(), out.end());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const Permutation& x : frontier) {
      for (const Permutation& g : gens) {
        Permutation y = pgt::compose(x, g);
        if (out.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

inline Set from(const pgt::SubgroupSet& s) { return Set(s.begin(), s.end()); }

inline Set centralizer(const Set& group, const Permutation& g) {
  Set out;
  for (const Permutation& x : group) {
    if (pgt::compose(x, g) == pgt::compose(g, x)) out.insert(x);
  }
  return out;
}

inline Set center(const Set& group) {
  Set out;
  for (const Permutation& z : group) {
    if (std::all_of(group.begin(), group.end(),
                    [&](const Permutation& x) { return pgt::compose(x, z) == pgt::compose(z, x); })) {
      out.insert(z);
    }
  }
  return out;
}

inline Set normal_closure(const Set& group, const Set& subset) {
  std::vector<Permutation> gens;
  for (const Permutation& s : subset) {
    for (const Permutation& x : group) gens.push_back(pgt::conjugate(s, x));
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return closure(group.begin()->degree(), gens);
}

inline Set commutator_subgroup(const Set& h, const Set& k) {
  std::vector<Permutation> gens;
  for (const Permutation& x : h) {
    for (const Permutation& y : k) gens.push_back(pgt::commutator(x, y));
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return closure(h.begin()->degree(), gens);
}

inline std::size_t class_count(const Set& group) {
  Set seen;
  std::size_t classes = 0;
  for (const Permutation& g : group) {
    if (seen.contains(g)) continue;
    ++classes;
    for (const Permutation& x : group) seen.insert(pgt::conjugate(g, x));
  }
  return classes;
}

/// Literal definition: intersection over all g of C_G(g)^G.
inline Set pseudocentre(const Set& group) {
  Set running = group;
  for (const Permutation& g : group) {
    const Set n = normal_closure(group, centralizer(group, g));
    Set kept;
    std::set_intersection(running.begin(), running.end(), n.begin(), n.end(),
                          std::inserter(kept, kept.end()));
    running = std::move(kept);
  }
  return running;
}

/// Multiset of element orders: equal for isomorphic groups.
inline std::map<std::uint64_t, std::size_t> order_profile(const Set& group) {
  std::map<std::uint64_t, std::size_t> out;
  for (const Permutation& g : group) ++out[g.order()];
  return out;
}

inline bool is_abelian(const Set& group) {
  for (const Permutation& a : group) {
    for (const Permutation& b : group) {
      if (pgt::compose(a, b) != pgt::compose(b, a)) return false;
    }
  }
  return true;
}

}  // namespace oracle
