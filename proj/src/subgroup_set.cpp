#include "pgt/subgroup_set.hpp"

#include <algorithm>

#include "pgt/error.hpp"

namespace pgt {

SubgroupSet SubgroupSet::trivial(std::size_t degree) {
  SubgroupSet s;
  s.degree_ = degree;
  s.elements_.push_back(Permutation::identity(degree));
  return s;
}

SubgroupSet SubgroupSet::from_elements(std::size_t degree, std::vector<Permutation> elements) {
  for (const Permutation& p : elements) {
    if (p.degree() != degree) {
      throw Error(ErrorCode::DegreeMismatch, "subgroup element has the wrong degree");
    }
  }
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  SubgroupSet s;
  s.degree_ = degree;
  s.elements_ = std::move(elements);
  return s;
}

bool SubgroupSet::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

std::size_t SubgroupSet::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return elements_.size();
  return static_cast<std::size_t>(it - elements_.begin());
}

bool SubgroupSet::is_subset_of(const SubgroupSet& other) const {
  if (degree_ != other.degree_) return false;
  return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(),
                       elements_.end());
}

bool SubgroupSet::is_closed() const {
  if (elements_.empty()) return false;
  if (!contains(Permutation::identity(degree_))) return false;
  for (const Permutation& a : elements_) {
    if (!contains(inverse(a))) return false;
    for (const Permutation& b : elements_) {
      if (!contains(compose(a, b))) return false;
    }
  }
  return true;
}

}  // namespace pgt
