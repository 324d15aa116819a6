#include "pgt/permutation.hpp"

#include <numeric>
#include <ostream>
#include <sstream>

#include "pgt/error.hpp"

namespace pgt {

namespace {

void require_same_degree(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw Error(ErrorCode::DegreeMismatch, "permutation degrees differ: " +
                                               std::to_string(p.degree()) + " vs " +
                                               std::to_string(q.degree()));
  }
}

}  // namespace

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::CapacityExceeded: return "CapacityExceeded";
    case ErrorCode::NotAMember: return "NotAMember";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::Syntax: return "SyntaxError";
    case ErrorCode::Semantic: return "SemanticError";
  }
  return "Unknown";
}

CapacityError::CapacityError(std::uint64_t required, std::uint64_t cap)
    : Error(ErrorCode::CapacityExceeded,
            "enumeration would need " + std::to_string(required) +
                " elements, cap is " + std::to_string(cap)),
      required_(required),
      cap_(cap) {}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.empty()) {
    throw Error(ErrorCode::InvalidParameter, "permutation degree must be at least 1");
  }
  if (images_.size() > kMaxDegree) {
    throw Error(ErrorCode::InvalidParameter, "permutation degree exceeds 65535");
  }
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) {
      throw Error(ErrorCode::InvalidParameter, "image sequence is not a bijection");
    }
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  if (degree == 0) {
    throw Error(ErrorCode::InvalidParameter, "identity needs degree >= 1");
  }
  if (degree > kMaxDegree) {
    throw Error(ErrorCode::InvalidParameter, "permutation degree exceeds 65535");
  }
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Permutation(std::move(images), Unchecked{});
}

Permutation Permutation::from_cycles(
    std::size_t degree, std::initializer_list<std::initializer_list<std::size_t>> cycles) {
  std::vector<std::vector<std::size_t>> copy;
  for (const auto& c : cycles) copy.emplace_back(c);
  return from_cycles(degree, copy);
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<std::size_t>>& cycles) {
  Permutation id = identity(degree);
  std::vector<Point> images(id.images_);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      std::size_t from = cycle[i];
      std::size_t to = cycle[(i + 1) % cycle.size()];
      if (from >= degree || to >= degree || used[from]) {
        throw Error(ErrorCode::InvalidParameter, "cycles are not disjoint or out of range");
      }
      used[from] = true;
      images[from] = static_cast<Point>(to);
    }
  }
  return Permutation(std::move(images), Unchecked{});
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::size_t Permutation::first_moved_point() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return i;
  }
  return images_.size();
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    any = true;
    os << '(';
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (j != i) os << ',';
      os << j;
    }
    os << ')';
  }
  if (!any) os << "()";
  return os.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  require_same_degree(p, q);
  std::vector<Point> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = q.images_[p.images_[i]];
  return Permutation(std::move(images), Permutation::Unchecked{});
}

Permutation inverse(const Permutation& p) {
  std::vector<Point> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[p.images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(images), Permutation::Unchecked{});
}

Permutation conjugate(const Permutation& g, const Permutation& x) {
  require_same_degree(g, x);
  // x^-1 g x maps x[i] to x[g[i]].
  std::vector<Point> images(g.degree());
  for (std::size_t i = 0; i < images.size(); ++i) {
    images[x.images_[i]] = x.images_[g.images_[i]];
  }
  return Permutation(std::move(images), Permutation::Unchecked{});
}

Permutation commutator(const Permutation& x, const Permutation& y) {
  return compose(inverse(x), conjugate(x, y));
}

Permutation power(const Permutation& p, std::int64_t exponent) {
  Permutation base = exponent < 0 ? inverse(p) : p;
  std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-(exponent + 1)) + 1
                                 : static_cast<std::uint64_t>(exponent);
  Permutation result = Permutation::identity(p.degree());
  while (e > 0) {
    if (e & 1U) result = compose(result, base);
    e >>= 1U;
    if (e > 0) base = compose(base, base);
  }
  return result;
}

bool commutes(const Permutation& p, const Permutation& q) {
  require_same_degree(p, q);
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (q[p[i]] != p[q[i]]) return false;
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  return os << p.to_cycle_string();
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image sequence.
  std::uint64_t h = 1469598103934665603ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace pgt
