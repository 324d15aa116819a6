#include "pgt/pseudocentre.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <thread>
#include <unordered_set>

#include "pgt/error.hpp"
#include "pgt/group_ops.hpp"

namespace pgt {

namespace {

// Normal closure by explicit set closure, no stabilizer chains involved.
class SetClosure {
 public:
  explicit SetClosure(std::size_t degree) : identity_(Permutation::identity(degree)) {
    members_.insert(identity_);
    list_.push_back(identity_);
  }

  void add_generator(const Permutation& s) {
    if (members_.contains(s)) return;
    gens_.push_back(s);
    for (std::size_t i = 0; i < list_.size(); ++i) {
      for (const Permutation& t : gens_) {
        Permutation p = compose(list_[i], t);
        if (members_.insert(p).second) list_.push_back(std::move(p));
      }
    }
  }

  void close_under(std::span<const Permutation> conjugators) {
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      for (const Permutation& x : conjugators) add_generator(conjugate(gens_[i], x));
    }
  }

  SubgroupSet result() const {
    return SubgroupSet::from_elements(identity_.degree(), list_);
  }

 private:
  Permutation identity_;
  std::unordered_set<Permutation, PermutationHash> members_;
  std::vector<Permutation> list_;
  std::vector<Permutation> gens_;
};

}  // namespace

SubgroupSet pseudocentre(const PermGroup& group, unsigned threads) {
  const SubgroupSet& all = group.elements();
  const ConjugacyClasses& classes = group.classes();
  const SubgroupSet centre = center(group);
  const BigInt group_order = all.size();

  // Largest classes first = smallest centralizers first.
  std::vector<std::size_t> order(classes.reps.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return classes.sizes[a] > classes.sizes[b];
  });
  std::erase_if(order, [&](std::size_t c) { return centre.contains(classes.reps[c]); });

  std::vector<char> alive(all.size(), 1);
  std::size_t alive_count = all.size();
  threads = std::max(1U, threads);

  auto closure_of = [&](std::size_t c) {
    SubgroupSet cent = centralizer(group, classes.reps[c]);
    return normal_closure_group(group, generating_set(cent));
  };

  for (std::size_t next = 0; next < order.size() && alive_count > centre.size();) {
    const std::size_t batch = std::min<std::size_t>(threads, order.size() - next);
    std::vector<std::optional<PermGroup>> closures(batch);
    if (batch == 1) {
      closures[0] = closure_of(order[next]);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t b = 0; b < batch; ++b) {
        pool.emplace_back([&, b] { closures[b] = closure_of(order[next + b]); });
      }
      for (auto& t : pool) t.join();
    }
    next += batch;
    for (const auto& n : closures) {
      if (n->order() == group_order) continue;
      for (std::size_t i = 0; i < all.size(); ++i) {
        if (alive[i] && !n->contains(all[i])) {
          alive[i] = 0;
          --alive_count;
        }
      }
    }
  }

  std::vector<Permutation> kept;
  kept.reserve(alive_count);
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (alive[i]) kept.push_back(all[i]);
  }
  return SubgroupSet::from_elements(group.degree(), std::move(kept));
}

SubgroupSet pseudocentre_naive(const PermGroup& group, std::uint64_t cap) {
  if (group.order() > cap) throw CapacityError(group.order_u64(), cap);
  const SubgroupSet& all = group.elements();
  std::vector<Permutation> running(all.begin(), all.end());
  std::map<std::vector<Permutation>, SubgroupSet> memo;
  for (const Permutation& g : all) {
    std::vector<Permutation> cent;
    for (const Permutation& x : all) {
      if (compose(x, g) == compose(g, x)) cent.push_back(x);
    }
    auto it = memo.find(cent);
    if (it == memo.end()) {
      SetClosure closure(group.degree());
      for (const Permutation& c : cent) closure.add_generator(c);
      closure.close_under(group.generators());
      it = memo.emplace(cent, closure.result()).first;
    }
    std::vector<Permutation> kept;
    std::set_intersection(running.begin(), running.end(), it->second.begin(), it->second.end(),
                          std::back_inserter(kept));
    running = std::move(kept);
  }
  return SubgroupSet::from_elements(group.degree(), std::move(running));
}

std::vector<std::uint64_t> PseudoSeries::sizes() const {
  std::vector<std::uint64_t> out;
  for (const SubgroupSet& t : terms) out.push_back(t.size());
  return out;
}

PseudoSeries upper_pseudocentral_series(const PermGroup& group, std::size_t max_steps,
                                        unsigned threads) {
  if (max_steps == 0) throw Error(ErrorCode::InvalidParameter, "max_steps must be at least 1");
  const std::size_t group_order = group.elements().size();
  PseudoSeries series;
  series.terms.push_back(SubgroupSet::trivial(group.degree()));
  for (std::size_t step = 0; step <= max_steps; ++step) {
    const SubgroupSet& current = series.terms.back();
    if (current.size() == group_order) {
      series.stabilized = true;
      break;
    }
    if (step == max_steps) break;
    SubgroupSet next;
    if (current.is_trivial()) {
      // G/1 is G itself; skip the regular action on |G| cosets.
      next = pseudocentre(group, threads);
    } else {
      Quotient q(group, current);
      next = q.preimage(pseudocentre(q.group(), threads));
    }
    if (next.size() == current.size()) {
      series.stabilized = true;
      break;
    }
    series.terms.push_back(std::move(next));
  }
  series.reaches_group = series.terms.back().size() == group_order;
  return series;
}

std::optional<std::size_t> pseudonilpotent_class(const PermGroup& group, std::size_t max_steps) {
  PseudoSeries s = upper_pseudocentral_series(group, max_steps);
  if (!s.reaches_group) return std::nullopt;
  return s.terms.size() - 1;
}

bool is_pseudocentral(const PermGroup& group) {
  return pseudocentre(group).size() == group.elements().size();
}

}  // namespace pgt
