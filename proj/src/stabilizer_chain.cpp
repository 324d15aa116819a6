#include "pgt/stabilizer_chain.hpp"

#include <deque>

#include "pgt/error.hpp"

namespace pgt {

StabilizerChain::StabilizerChain(std::size_t degree) : degree_(degree) {
  if (degree == 0 || degree > kMaxDegree) {
    throw Error(ErrorCode::InvalidParameter, "stabilizer chain degree out of range");
  }
}

StabilizerChain::StabilizerChain(std::size_t degree, std::span<const Permutation> generators)
    : StabilizerChain(degree) {
  for (const Permutation& g : generators) {
    if (g.degree() != degree) {
      throw Error(ErrorCode::DegreeMismatch, "generator degree does not match group degree");
    }
    extend(g);
  }
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> out;
  out.reserve(levels_.size());
  for (const Level& l : levels_) out.push_back(l.base_point);
  return out;
}

BigInt StabilizerChain::order() const {
  BigInt result = 1;
  for (const Level& l : levels_) result *= l.orbit.size();
  return result;
}

std::pair<Permutation, std::size_t> StabilizerChain::sift(Permutation p,
                                                          std::size_t from_level) const {
  for (std::size_t i = from_level; i < levels_.size(); ++i) {
    const Level& l = levels_[i];
    int idx = l.orbit_index[p[l.base_point]];
    if (idx < 0) return {std::move(p), i};
    p = compose(p, l.transversal_inverse[static_cast<std::size_t>(idx)]);
  }
  return {std::move(p), levels_.size()};
}

bool StabilizerChain::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  auto [residue, level] = sift(p);
  return level == levels_.size() && residue.is_identity();
}

void StabilizerChain::append_level(Point base_point) {
  Level l;
  l.base_point = base_point;
  l.orbit_index.assign(degree_, -1);
  l.orbit.push_back(base_point);
  l.orbit_index[base_point] = 0;
  l.transversal.push_back(Permutation::identity(degree_));
  l.transversal_inverse.push_back(Permutation::identity(degree_));
  levels_.push_back(std::move(l));
}

void StabilizerChain::rebuild_orbit(std::size_t level) {
  Level& l = levels_[level];
  // Existing orbit points keep their transversal elements; only new points
  // are appended, so indices handed out earlier stay valid.
  for (std::size_t k = 0; k < l.orbit.size(); ++k) {
    for (const Permutation& s : l.generators) {
      Point image = s[l.orbit[k]];
      if (l.orbit_index[image] >= 0) continue;
      l.orbit_index[image] = static_cast<int>(l.orbit.size());
      l.orbit.push_back(image);
      Permutation u = compose(l.transversal[k], s);
      l.transversal_inverse.push_back(inverse(u));
      l.transversal.push_back(std::move(u));
    }
  }
}

bool StabilizerChain::extend(const Permutation& p) {
  if (p.degree() != degree_) {
    throw Error(ErrorCode::DegreeMismatch, "generator degree does not match group degree");
  }
  auto [h, j] = sift(p);
  if (j == levels_.size() && h.is_identity()) return false;
  if (j == levels_.size()) append_level(static_cast<Point>(h.first_moved_point()));
  for (std::size_t l = 0; l <= j; ++l) {
    levels_[l].generators.push_back(h);
    rebuild_orbit(l);
  }
  run(j);
  return true;
}

void StabilizerChain::run(std::size_t start_level) {
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(start_level);
  while (i >= 0) {
    bool restarted = false;
    const std::size_t li = static_cast<std::size_t>(i);
    for (std::size_t k = 0; k < levels_[li].orbit.size() && !restarted; ++k) {
      for (std::size_t s = 0; s < levels_[li].generators.size(); ++s) {
        const Level& l = levels_[li];
        const Permutation& gen = l.generators[s];
        Point target = gen[l.orbit[k]];
        const auto& back = l.transversal_inverse[static_cast<std::size_t>(l.orbit_index[target])];
        Permutation schreier = compose(compose(l.transversal[k], gen), back);
        if (schreier.is_identity()) continue;
        auto [h, j] = sift(std::move(schreier), li + 1);
        if (j == levels_.size() && h.is_identity()) continue;
        if (j == levels_.size()) append_level(static_cast<Point>(h.first_moved_point()));
        for (std::size_t m = li + 1; m <= j; ++m) {
          levels_[m].generators.push_back(h);
          rebuild_orbit(m);
        }
        i = static_cast<std::ptrdiff_t>(j);
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }
}

void StabilizerChain::for_each_element(
    const std::function<void(const Permutation&)>& visit) const {
  if (levels_.empty()) {
    visit(Permutation::identity(degree_));
    return;
  }
  // Every element factors uniquely as u_{k-1} ... u_1 u_0 with u_i drawn from
  // the level-i transversal.
  std::function<void(std::size_t, const Permutation&)> walk =
      [&](std::size_t remaining, const Permutation& prefix) {
        const Level& l = levels_[remaining - 1];
        for (const Permutation& u : l.transversal) {
          Permutation next = compose(prefix, u);
          if (remaining == 1) {
            visit(next);
          } else {
            walk(remaining - 1, next);
          }
        }
      };
  walk(levels_.size(), Permutation::identity(degree_));
}

}  // namespace pgt
