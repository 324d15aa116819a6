#include "pgt/perm_group.hpp"

#include <atomic>
#include <deque>
#include <limits>
#include <mutex>
#include <optional>

#include "pgt/error.hpp"

namespace pgt {

namespace {

std::atomic<std::uint64_t> g_default_cap{kDefaultEnumerationCap};

}  // namespace

std::uint64_t default_enumeration_cap() noexcept { return g_default_cap.load(); }

void set_default_enumeration_cap(std::uint64_t cap) {
  if (cap == 0) throw Error(ErrorCode::InvalidParameter, "enumeration cap must be positive");
  g_default_cap.store(cap);
}

struct PermGroup::Cache {
  std::once_flag chain_once;
  std::optional<StabilizerChain> chain;

  std::mutex elements_mutex;
  std::optional<SubgroupSet> elements;

  std::mutex classes_mutex;
  std::optional<ConjugacyClasses> classes;
};

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), cap_(default_enumeration_cap()), cache_(std::make_shared<Cache>()) {
  if (degree == 0 || degree > kMaxDegree) {
    throw Error(ErrorCode::InvalidParameter, "group degree out of range");
  }
  for (Permutation& g : generators) {
    if (g.degree() != degree) {
      throw Error(ErrorCode::DegreeMismatch, "generator degree does not match group degree");
    }
    if (!g.is_identity()) generators_.push_back(std::move(g));
  }
}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators,
                     StabilizerChain chain)
    : PermGroup(degree, std::move(generators)) {
  if (chain.degree() != degree) {
    throw Error(ErrorCode::DegreeMismatch, "chain degree does not match group degree");
  }
  std::call_once(cache_->chain_once, [&] { cache_->chain.emplace(std::move(chain)); });
}

PermGroup PermGroup::trivial(std::size_t degree) { return PermGroup(degree, {}); }

PermGroup PermGroup::from_subgroup(const SubgroupSet& set) {
  PermGroup g(set.degree(), generating_set(set));
  std::lock_guard lock(g.cache_->elements_mutex);
  g.cache_->elements = set;
  return g;
}

const StabilizerChain& PermGroup::chain() const {
  std::call_once(cache_->chain_once,
                 [this] { cache_->chain.emplace(degree_, std::span(generators_)); });
  return *cache_->chain;
}

BigInt PermGroup::order() const { return chain().order(); }

std::uint64_t PermGroup::order_u64() const {
  BigInt n = order();
  if (n > std::numeric_limits<std::uint64_t>::max()) {
    throw CapacityError(std::numeric_limits<std::uint64_t>::max(), cap_);
  }
  return n.convert_to<std::uint64_t>();
}

bool PermGroup::contains(const Permutation& p) const { return chain().contains(p); }

const SubgroupSet& PermGroup::elements() const {
  std::lock_guard lock(cache_->elements_mutex);
  if (cache_->elements) return *cache_->elements;
  BigInt n = order();
  if (n > cap_) {
    std::uint64_t required = n > std::numeric_limits<std::uint64_t>::max()
                                 ? std::numeric_limits<std::uint64_t>::max()
                                 : n.convert_to<std::uint64_t>();
    throw CapacityError(required, cap_);
  }
  std::vector<Permutation> all;
  all.reserve(n.convert_to<std::size_t>());
  chain().for_each_element([&](const Permutation& p) { all.push_back(p); });
  cache_->elements = SubgroupSet::from_elements(degree_, std::move(all));
  return *cache_->elements;
}

const ConjugacyClasses& PermGroup::classes() const {
  const SubgroupSet& all = elements();
  std::lock_guard lock(cache_->classes_mutex);
  if (cache_->classes) return *cache_->classes;

  constexpr auto kUnassigned = std::numeric_limits<std::uint32_t>::max();
  ConjugacyClasses out;
  out.class_of.assign(all.size(), kUnassigned);
  std::vector<std::size_t> queue;
  for (std::size_t start = 0; start < all.size(); ++start) {
    if (out.class_of[start] != kUnassigned) continue;
    auto id = static_cast<std::uint32_t>(out.reps.size());
    out.reps.push_back(all[start]);
    out.class_of[start] = id;
    std::size_t size = 1;
    queue.assign(1, start);
    while (!queue.empty()) {
      std::size_t cur = queue.back();
      queue.pop_back();
      for (const Permutation& x : generators_) {
        std::size_t next = all.index_of(conjugate(all[cur], x));
        if (out.class_of[next] != kUnassigned) continue;
        out.class_of[next] = id;
        ++size;
        queue.push_back(next);
      }
    }
    out.sizes.push_back(size);
  }
  cache_->classes = std::move(out);
  return *cache_->classes;
}

std::vector<Permutation> generating_set(const SubgroupSet& set) {
  std::vector<Permutation> gens;
  if (set.size() <= 1) return gens;
  StabilizerChain chain(set.degree());
  for (const Permutation& p : set) {
    if (!chain.extend(p)) continue;
    gens.push_back(p);
    if (chain.order() == set.size()) break;
  }
  return gens;
}

}  // namespace pgt
