#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pgt/perm_group.hpp"
#include "pgt/subgroup_set.hpp"

namespace pgt {

std::vector<Permutation> conjugacy_class_reps(const PermGroup& group);

/// {x in G : xg = gx}, by filtering the element set. Throws NotAMember when
/// g is not in G.
SubgroupSet centralizer(const PermGroup& group, const Permutation& g);
SubgroupSet center(const PermGroup& group);

/// Normal closure of <gens> in G, kept as a group (no enumeration).
PermGroup normal_closure_group(const PermGroup& group, std::span<const Permutation> gens);
SubgroupSet normal_closure(const PermGroup& group, std::span<const Permutation> gens);
SubgroupSet normal_closure(const PermGroup& group, const SubgroupSet& subset);

SubgroupSet subgroup_intersection(const SubgroupSet& a, const SubgroupSet& b);
/// The subgroup generated by a and b together.
SubgroupSet subgroup_join(const SubgroupSet& a, const SubgroupSet& b);
/// {x^c : x in set}.
SubgroupSet conjugate_set(const SubgroupSet& set, const Permutation& c);

/// <[h,k] : h in H, k in K>, closed under products and inverses only.
SubgroupSet commutator_subgroup(const SubgroupSet& h, const SubgroupSet& k);
PermGroup commutator_subgroup(const PermGroup& h, const PermGroup& k);
SubgroupSet derived_subgroup(const PermGroup& group);
/// G, G', G'', ... until the sequence stabilizes.
std::vector<PermGroup> derived_series(const PermGroup& group);

/// Z_0 = 1, Z_{i+1} = {x : [x,g] in Z_i for every generator g}; stops when a
/// term repeats, so the final term equals G iff G is nilpotent.
std::vector<SubgroupSet> upper_central_series(const PermGroup& group);
/// Nilpotency class, or nullopt when G is not nilpotent.
std::optional<std::size_t> nilpotency_class(const PermGroup& group);

bool is_normal(const PermGroup& group, const SubgroupSet& subgroup);
bool is_abelian(const SubgroupSet& set);
bool is_abelian(const PermGroup& group);
bool is_cyclic(const SubgroupSet& set);
bool is_perfect(const PermGroup& group);
bool is_soluble(const PermGroup& group);
bool is_nontrivial(const SubgroupSet& set);
bool is_transitive(const PermGroup& group);

/// Inclusion-minimal members of {<g>^G : g != 1}.
std::vector<SubgroupSet> minimal_normal_subgroups(const PermGroup& group);

/// G/N acting on the right cosets of N. Cosets are numbered by their
/// lexicographically smallest element, so the coset N itself is point 0.
class Quotient {
 public:
  /// Throws NotNormal when N is not normal in G, CapacityError when G cannot
  /// be enumerated or the index exceeds the cap.
  Quotient(const PermGroup& group, const SubgroupSet& normal);

  const PermGroup& group() const noexcept { return quotient_; }
  std::size_t index() const noexcept { return coset_members_.size(); }

  std::size_t coset_of(const Permutation& g) const;
  Permutation project(const Permutation& g) const;
  SubgroupSet project(const SubgroupSet& set) const;
  /// Full preimage in G of a subgroup of the quotient.
  SubgroupSet preimage(const SubgroupSet& set) const;

 private:
  PermGroup parent_;
  std::vector<std::uint32_t> coset_of_element_;
  std::vector<std::vector<std::uint32_t>> coset_members_;
  PermGroup quotient_;
};

}  // namespace pgt
