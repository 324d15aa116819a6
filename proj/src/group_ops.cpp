#include "pgt/group_ops.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "pgt/error.hpp"

namespace pgt {

namespace {

PermGroup inherit_cap(PermGroup child, const PermGroup& parent) {
  child.set_enumeration_cap(parent.enumeration_cap());
  return child;
}

SubgroupSet filter(const SubgroupSet& set, auto&& keep) {
  std::vector<Permutation> out;
  for (const Permutation& p : set) {
    if (keep(p)) out.push_back(p);
  }
  return SubgroupSet::from_elements(set.degree(), std::move(out));
}

SubgroupSet generated(std::size_t degree, std::vector<Permutation> gens) {
  return PermGroup(degree, std::move(gens)).elements();
}

}  // namespace

std::vector<Permutation> conjugacy_class_reps(const PermGroup& group) {
  return group.classes().reps;
}

SubgroupSet centralizer(const PermGroup& group, const Permutation& g) {
  if (g.degree() != group.degree()) {
    throw Error(ErrorCode::DegreeMismatch, "element degree does not match group degree");
  }
  if (!group.contains(g)) throw Error(ErrorCode::NotAMember, "element is not in the group");
  return filter(group.elements(), [&](const Permutation& x) { return commutes(x, g); });
}

SubgroupSet center(const PermGroup& group) {
  auto gens = group.generators();
  return filter(group.elements(), [&](const Permutation& x) {
    return std::all_of(gens.begin(), gens.end(),
                       [&](const Permutation& g) { return commutes(x, g); });
  });
}

PermGroup normal_closure_group(const PermGroup& group, std::span<const Permutation> gens) {
  StabilizerChain chain(group.degree());
  std::vector<Permutation> kept;
  std::deque<Permutation> pending;
  for (const Permutation& g : gens) {
    if (g.degree() != group.degree()) {
      throw Error(ErrorCode::DegreeMismatch, "element degree does not match group degree");
    }
    if (chain.extend(g)) {
      kept.push_back(g);
      pending.push_back(g);
    }
  }
  while (!pending.empty()) {
    Permutation h = std::move(pending.front());
    pending.pop_front();
    for (const Permutation& x : group.generators()) {
      Permutation c = conjugate(h, x);
      if (chain.extend(c)) {
        kept.push_back(c);
        pending.push_back(std::move(c));
      }
    }
  }
  return inherit_cap(PermGroup(group.degree(), std::move(kept), std::move(chain)), group);
}

SubgroupSet normal_closure(const PermGroup& group, std::span<const Permutation> gens) {
  return normal_closure_group(group, gens).elements();
}

SubgroupSet normal_closure(const PermGroup& group, const SubgroupSet& subset) {
  std::vector<Permutation> gens = generating_set(subset);
  return normal_closure(group, gens);
}

SubgroupSet subgroup_intersection(const SubgroupSet& a, const SubgroupSet& b) {
  if (a.degree() != b.degree()) {
    throw Error(ErrorCode::DegreeMismatch, "cannot intersect subgroups of different degree");
  }
  std::vector<Permutation> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return SubgroupSet::from_elements(a.degree(), std::move(out));
}

SubgroupSet subgroup_join(const SubgroupSet& a, const SubgroupSet& b) {
  if (a.degree() != b.degree()) {
    throw Error(ErrorCode::DegreeMismatch, "cannot join subgroups of different degree");
  }
  std::vector<Permutation> gens = generating_set(a);
  for (Permutation& g : generating_set(b)) gens.push_back(std::move(g));
  return generated(a.degree(), std::move(gens));
}

SubgroupSet conjugate_set(const SubgroupSet& set, const Permutation& c) {
  std::vector<Permutation> out;
  out.reserve(set.size());
  for (const Permutation& x : set) out.push_back(conjugate(x, c));
  return SubgroupSet::from_elements(set.degree(), std::move(out));
}

PermGroup commutator_subgroup(const PermGroup& h, const PermGroup& k) {
  if (h.degree() != k.degree()) {
    throw Error(ErrorCode::DegreeMismatch, "commutator of groups of different degree");
  }
  // With H = <X> and K = <Y>, [H,K] is the normal closure of {[x,y]} in <H,K>.
  std::vector<Permutation> both(h.generators().begin(), h.generators().end());
  both.insert(both.end(), k.generators().begin(), k.generators().end());
  PermGroup ambient = inherit_cap(PermGroup(h.degree(), both), h);
  std::vector<Permutation> seeds;
  for (const Permutation& x : h.generators()) {
    for (const Permutation& y : k.generators()) seeds.push_back(commutator(x, y));
  }
  return normal_closure_group(ambient, seeds);
}

SubgroupSet commutator_subgroup(const SubgroupSet& h, const SubgroupSet& k) {
  if (h.degree() != k.degree()) {
    throw Error(ErrorCode::DegreeMismatch, "commutator of subgroups of different degree");
  }
  PermGroup hg(h.degree(), generating_set(h));
  PermGroup kg(k.degree(), generating_set(k));
  return commutator_subgroup(hg, kg).elements();
}

SubgroupSet derived_subgroup(const PermGroup& group) {
  return commutator_subgroup(group, group).elements();
}

std::vector<PermGroup> derived_series(const PermGroup& group) {
  std::vector<PermGroup> series{group};
  while (true) {
    PermGroup next = commutator_subgroup(series.back(), series.back());
    if (next.order() == series.back().order()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<SubgroupSet> upper_central_series(const PermGroup& group) {
  std::vector<SubgroupSet> series{SubgroupSet::trivial(group.degree())};
  auto gens = group.generators();
  while (true) {
    const SubgroupSet& prev = series.back();
    SubgroupSet next = filter(group.elements(), [&](const Permutation& x) {
      return std::all_of(gens.begin(), gens.end(),
                         [&](const Permutation& g) { return prev.contains(commutator(x, g)); });
    });
    if (next.size() == prev.size()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::optional<std::size_t> nilpotency_class(const PermGroup& group) {
  auto series = upper_central_series(group);
  if (series.back().size() != group.elements().size()) return std::nullopt;
  return series.size() - 1;
}

bool is_normal(const PermGroup& group, const SubgroupSet& subgroup) {
  if (subgroup.degree() != group.degree()) return false;
  for (const Permutation& h : subgroup) {
    if (!group.contains(h)) return false;
  }
  for (const Permutation& h : generating_set(subgroup)) {
    for (const Permutation& x : group.generators()) {
      if (!subgroup.contains(conjugate(h, x))) return false;
    }
  }
  return true;
}

bool is_abelian(const SubgroupSet& set) {
  std::vector<Permutation> gens = generating_set(set);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!commutes(gens[i], gens[j])) return false;
    }
  }
  return true;
}

bool is_abelian(const PermGroup& group) {
  auto gens = group.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!commutes(gens[i], gens[j])) return false;
    }
  }
  return true;
}

bool is_cyclic(const SubgroupSet& set) {
  return std::any_of(set.begin(), set.end(),
                     [&](const Permutation& p) { return p.order() == set.size(); });
}

bool is_perfect(const PermGroup& group) {
  return commutator_subgroup(group, group).order() == group.order();
}

bool is_soluble(const PermGroup& group) { return derived_series(group).back().is_trivial(); }

bool is_nontrivial(const SubgroupSet& set) { return set.size() > 1; }

bool is_transitive(const PermGroup& group) {
  std::vector<bool> seen(group.degree(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t x = stack.back();
    stack.pop_back();
    for (const Permutation& g : group.generators()) {
      std::size_t y = g[x];
      if (!seen[y]) {
        seen[y] = true;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == group.degree();
}

std::vector<SubgroupSet> minimal_normal_subgroups(const PermGroup& group) {
  std::vector<SubgroupSet> closures;
  for (const Permutation& rep : group.classes().reps) {
    if (rep.is_identity()) continue;
    SubgroupSet n = normal_closure(group, std::span(&rep, 1));
    if (std::find(closures.begin(), closures.end(), n) == closures.end()) {
      closures.push_back(std::move(n));
    }
  }
  std::sort(closures.begin(), closures.end(),
            [](const SubgroupSet& a, const SubgroupSet& b) { return a.size() < b.size(); });
  std::vector<SubgroupSet> minimal;
  for (const SubgroupSet& n : closures) {
    bool has_smaller = std::any_of(minimal.begin(), minimal.end(), [&](const SubgroupSet& m) {
      return m.is_subset_of(n);
    });
    if (!has_smaller) minimal.push_back(n);
  }
  return minimal;
}

Quotient::Quotient(const PermGroup& group, const SubgroupSet& normal)
    : parent_(group), quotient_(PermGroup::trivial(1)) {
  if (!is_normal(group, normal)) {
    throw Error(ErrorCode::NotNormal, "subgroup is not normal in the group");
  }
  const SubgroupSet& all = group.elements();
  const std::size_t index = all.size() / normal.size();
  if (index > group.enumeration_cap() || index > kMaxDegree) {
    throw CapacityError(index, std::min<std::uint64_t>(group.enumeration_cap(), kMaxDegree));
  }
  constexpr auto kUnassigned = std::numeric_limits<std::uint32_t>::max();
  coset_of_element_.assign(all.size(), kUnassigned);
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (coset_of_element_[i] != kUnassigned) continue;
    auto id = static_cast<std::uint32_t>(coset_members_.size());
    std::vector<std::uint32_t> members;
    members.reserve(normal.size());
    for (const Permutation& n : normal) {
      auto idx = static_cast<std::uint32_t>(all.index_of(compose(n, all[i])));
      coset_of_element_[idx] = id;
      members.push_back(idx);
    }
    std::sort(members.begin(), members.end());
    coset_members_.push_back(std::move(members));
  }
  std::vector<Permutation> gens;
  for (const Permutation& g : group.generators()) gens.push_back(project(g));
  quotient_ = PermGroup(index, std::move(gens));
  quotient_.set_enumeration_cap(group.enumeration_cap());
}

std::size_t Quotient::coset_of(const Permutation& g) const {
  const SubgroupSet& all = parent_.elements();
  std::size_t idx = all.index_of(g);
  if (idx == all.size()) throw Error(ErrorCode::NotAMember, "element is not in the group");
  return coset_of_element_[idx];
}

Permutation Quotient::project(const Permutation& g) const {
  const SubgroupSet& all = parent_.elements();
  if (all.index_of(g) == all.size()) {
    throw Error(ErrorCode::NotAMember, "element is not in the group");
  }
  std::vector<Point> images(coset_members_.size());
  for (std::size_t c = 0; c < coset_members_.size(); ++c) {
    const Permutation& rep = all[coset_members_[c].front()];
    images[c] = static_cast<Point>(coset_of_element_[all.index_of(compose(rep, g))]);
  }
  return Permutation(std::move(images));
}

SubgroupSet Quotient::project(const SubgroupSet& set) const {
  std::vector<Permutation> out;
  for (const Permutation& g : set) out.push_back(project(g));
  return SubgroupSet::from_elements(coset_members_.size(), std::move(out));
}

SubgroupSet Quotient::preimage(const SubgroupSet& set) const {
  if (set.degree() != coset_members_.size()) {
    throw Error(ErrorCode::DegreeMismatch, "set does not live in this quotient");
  }
  const SubgroupSet& all = parent_.elements();
  std::vector<Permutation> out;
  for (const Permutation& h : set) {
    // h sends the trivial coset (point 0) to the coset it represents.
    for (std::uint32_t idx : coset_members_[h[0]]) out.push_back(all[idx]);
  }
  return SubgroupSet::from_elements(parent_.degree(), std::move(out));
}

}  // namespace pgt
