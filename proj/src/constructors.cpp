#include "pgt/constructors.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "pgt/error.hpp"
#include "pgt/group_ops.hpp"
#include "pgt/numtheory.hpp"

namespace pgt {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorCode::InvalidParameter, message);
}

void require_prime(std::uint64_t p) {
  require(nt::is_prime(p), std::to_string(p) + " is not prime");
}

std::size_t checked_power(std::uint64_t p, std::size_t n) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < n; ++i) {
    v *= p;
    require(v <= kMaxDegree + 1, "vector space too large for a permutation action");
  }
  return static_cast<std::size_t>(v);
}

Permutation cycle_on(std::size_t degree, std::size_t first, std::size_t length) {
  std::vector<std::size_t> c(length);
  std::iota(c.begin(), c.end(), first);
  return Permutation::from_cycles(degree, {c});
}

FpMatrix elementary(std::size_t n, std::uint32_t p, std::size_t i, std::size_t j) {
  FpMatrix m = FpMatrix::identity(p, n);
  m.set(i, j, 1);
  return m;
}

FpMatrix diagonal_unit(std::size_t n, std::uint32_t p, std::size_t i, std::uint32_t value) {
  FpMatrix m = FpMatrix::identity(p, n);
  m.set(i, i, value);
  return m;
}

std::vector<FpMatrix> transvections(std::size_t n, std::uint32_t p, bool upper_only) {
  std::vector<FpMatrix> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || (upper_only && j < i)) continue;
      out.push_back(elementary(n, p, i, j));
    }
  }
  return out;
}

std::vector<FpMatrix> gl_generators(std::size_t n, std::uint32_t p) {
  std::vector<FpMatrix> gens = transvections(n, p, false);
  auto w = static_cast<std::uint32_t>(nt::primitive_root(p));
  if (w != 1) gens.push_back(diagonal_unit(n, p, 0, w));
  return gens;
}

void check_matrix_params(std::size_t n, std::uint32_t p) {
  require(n >= 1, "matrix dimension must be at least 1");
  require_prime(p);
}

}  // namespace

PermGroup symmetric(std::size_t n) {
  require(n >= 1, "Sym(n) needs n >= 1");
  if (n == 1) return PermGroup::trivial(1);
  if (n == 2) return PermGroup(2, {Permutation::from_cycles(2, {{0, 1}})});
  return PermGroup(n, {Permutation::from_cycles(n, {{0, 1}}), cycle_on(n, 0, n)});
}

PermGroup alternating(std::size_t n) {
  require(n >= 1, "Alt(n) needs n >= 1");
  if (n < 3) return PermGroup::trivial(n);
  Permutation three = cycle_on(n, 0, 3);
  Permutation big = n % 2 == 1 ? cycle_on(n, 0, n) : cycle_on(n, 1, n - 1);
  return PermGroup(n, {three, big});
}

PermGroup cyclic(std::size_t n) {
  require(n >= 1, "C(n) needs n >= 1");
  if (n == 1) return PermGroup::trivial(1);
  return PermGroup(n, {cycle_on(n, 0, n)});
}

PermGroup dihedral(std::size_t order) {
  require(order >= 2 && order % 2 == 0, "dihedral order must be even and at least 2");
  const std::size_t r = order / 2;
  if (r == 1) return cyclic(2);
  if (r == 2) {
    return PermGroup(4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                         Permutation::from_cycles(4, {{0, 2}, {1, 3}})});
  }
  std::vector<Point> reflection(r);
  for (std::size_t i = 0; i < r; ++i) reflection[i] = static_cast<Point>((r - i) % r);
  return PermGroup(r, {cycle_on(r, 0, r), Permutation(std::move(reflection))});
}

PermGroup quaternion(std::size_t order) {
  require(order >= 8 && std::has_single_bit(order), "quaternion order must be 2^k, k >= 3");
  const std::size_t m = order / 2;  // order of a
  // Element a^i b^j is point i + j*m; b a^k = a^-k b and b^2 = a^(m/2).
  auto mul = [&](std::size_t x, std::size_t y) {
    std::size_t i = x % m, j = x / m, k = y % m, l = y / m;
    std::size_t exp = (j == 0 ? i + k : i + m - k) % m;
    std::size_t bb = j + l;
    if (bb == 2) {
      exp = (exp + m / 2) % m;
      bb = 0;
    }
    return exp + bb * m;
  };
  auto right_mult = [&](std::size_t g) {
    std::vector<Point> images(order);
    for (std::size_t x = 0; x < order; ++x) images[x] = static_cast<Point>(mul(x, g));
    return Permutation(std::move(images));
  };
  return PermGroup(order, {right_mult(1), right_mult(m)});
}

PermGroup elementary_abelian(std::uint32_t p, std::size_t k) {
  require_prime(p);
  require(k >= 1, "E(p,k) needs k >= 1");
  const std::size_t degree = static_cast<std::size_t>(p) * k;
  require(degree <= kMaxDegree, "E(p,k) degree too large");
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < k; ++i) gens.push_back(cycle_on(degree, i * p, p));
  return PermGroup(degree, std::move(gens));
}

PermGroup regular_representation(const PermGroup& group) {
  const SubgroupSet& all = group.elements();
  require(all.size() <= kMaxDegree, "group too large for a regular representation");
  std::vector<Permutation> gens;
  for (const Permutation& g : group.generators()) {
    std::vector<Point> images(all.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
      images[i] = static_cast<Point>(all.index_of(compose(all[i], g)));
    }
    gens.emplace_back(std::move(images));
  }
  if (all.size() == 1) return PermGroup::trivial(1);
  return PermGroup(all.size(), std::move(gens));
}

// --- direct products -------------------------------------------------------

Permutation DirectProduct::embed_left(const Permutation& a) const {
  std::vector<Point> images(left_degree + right_degree);
  for (std::size_t i = 0; i < left_degree; ++i) images[i] = a[i];
  for (std::size_t i = 0; i < right_degree; ++i) {
    images[left_degree + i] = static_cast<Point>(left_degree + i);
  }
  return Permutation(std::move(images));
}

Permutation DirectProduct::embed_right(const Permutation& b) const {
  std::vector<Point> images(left_degree + right_degree);
  for (std::size_t i = 0; i < left_degree; ++i) images[i] = static_cast<Point>(i);
  for (std::size_t i = 0; i < right_degree; ++i) {
    images[left_degree + i] = static_cast<Point>(left_degree + b[i]);
  }
  return Permutation(std::move(images));
}

SubgroupSet DirectProduct::embed_left(const SubgroupSet& a) const {
  std::vector<Permutation> out;
  for (const Permutation& x : a) out.push_back(embed_left(x));
  return SubgroupSet::from_elements(left_degree + right_degree, std::move(out));
}

SubgroupSet DirectProduct::embed_right(const SubgroupSet& b) const {
  std::vector<Permutation> out;
  for (const Permutation& x : b) out.push_back(embed_right(x));
  return SubgroupSet::from_elements(left_degree + right_degree, std::move(out));
}

DirectProduct direct_product(const PermGroup& a, const PermGroup& b) {
  require(a.degree() + b.degree() <= kMaxDegree, "direct product degree too large");
  DirectProduct dp{PermGroup::trivial(a.degree() + b.degree()), a.degree(), b.degree()};
  std::vector<Permutation> gens;
  for (const Permutation& g : a.generators()) gens.push_back(dp.embed_left(g));
  for (const Permutation& g : b.generators()) gens.push_back(dp.embed_right(g));
  dp.group = PermGroup(a.degree() + b.degree(), std::move(gens));
  return dp;
}

// --- wreath products -------------------------------------------------------

Permutation WreathProduct::lift_top(const Permutation& k) const {
  std::vector<Point> images(blocks * block_size);
  for (std::size_t i = 0; i < blocks; ++i) {
    for (std::size_t j = 0; j < block_size; ++j) {
      images[i * block_size + j] = static_cast<Point>(k[i] * block_size + j);
    }
  }
  return Permutation(std::move(images));
}

PermGroup WreathProduct::lift_top(const PermGroup& k) const {
  std::vector<Permutation> gens;
  for (const Permutation& g : k.generators()) gens.push_back(lift_top(g));
  return PermGroup(blocks * block_size, std::move(gens));
}

Permutation WreathProduct::lift_block(const Permutation& h, std::size_t block) const {
  std::vector<Point> images(blocks * block_size);
  std::iota(images.begin(), images.end(), Point{0});
  for (std::size_t j = 0; j < block_size; ++j) {
    images[block * block_size + j] = static_cast<Point>(block * block_size + h[j]);
  }
  return Permutation(std::move(images));
}

WreathProduct wreath(const PermGroup& h, const PermGroup& k) {
  const std::size_t m = h.degree();
  const std::size_t n = k.degree();
  require(m * n <= kMaxDegree, "wreath product degree too large");
  const std::size_t degree = m * n;
  WreathProduct w{PermGroup::trivial(degree), PermGroup::trivial(degree),
                  PermGroup::trivial(degree), PermGroup::trivial(degree), n, m,
                  is_transitive(k)};

  std::vector<Permutation> base_gens;
  for (std::size_t i = 0; i < n; ++i) {
    for (const Permutation& g : h.generators()) base_gens.push_back(w.lift_block(g, i));
  }
  w.base = PermGroup(degree, base_gens);
  w.top = w.lift_top(k);

  // One block per K-orbit suffices together with the top group.
  std::vector<bool> seen(n, false);
  std::vector<Permutation> gens(w.top.generators().begin(), w.top.generators().end());
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      for (const Permutation& g : k.generators()) {
        if (!seen[g[x]]) {
          seen[g[x]] = true;
          stack.push_back(g[x]);
        }
      }
    }
    for (const Permutation& g : h.generators()) gens.push_back(w.lift_block(g, start));
  }
  w.group = PermGroup(degree, std::move(gens));
  w.top_base_commutator = commutator_subgroup(w.top, w.base);
  return w;
}

// --- matrix groups ---------------------------------------------------------

Permutation MatrixGroup::to_permutation(const FpMatrix& m) const {
  if (m.modulus() != p || m.dimension() != n) {
    throw Error(ErrorCode::DegreeMismatch, "matrix does not match the group's field or size");
  }
  if (!m.is_invertible()) throw Error(ErrorCode::InvalidParameter, "matrix is singular");
  const std::size_t q = checked_power(p, n);
  const std::size_t offset = affine ? 0 : 1;
  std::vector<Point> images(q - offset);
  for (std::size_t code = offset; code < q; ++code) {
    images[code - offset] =
        static_cast<Point>(encode_vector(m.apply(decode_vector(code, p, n)), p) - offset);
  }
  return Permutation(std::move(images));
}

Permutation MatrixGroup::translation(const std::vector<std::uint32_t>& t) const {
  if (!affine) throw Error(ErrorCode::InvalidParameter, "translations need an affine group");
  if (t.size() != n) throw Error(ErrorCode::DegreeMismatch, "translation vector has wrong size");
  const std::size_t q = checked_power(p, n);
  std::vector<Point> images(q);
  for (std::size_t code = 0; code < q; ++code) {
    std::vector<std::uint32_t> v = decode_vector(code, p, n);
    for (std::size_t i = 0; i < n; ++i) v[i] = (v[i] + t[i]) % p;
    images[code] = static_cast<Point>(encode_vector(v, p));
  }
  return Permutation(std::move(images));
}

PermGroup MatrixGroup::translations() const {
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint32_t> e(n, 0);
    e[i] = 1;
    gens.push_back(translation(e));
  }
  return PermGroup(checked_power(p, n), std::move(gens));
}

MatrixGroup matrix_group(std::size_t n, std::uint32_t p, const std::vector<FpMatrix>& gens) {
  check_matrix_params(n, p);
  const std::size_t degree = checked_power(p, n) - 1;
  MatrixGroup mg{PermGroup::trivial(std::max<std::size_t>(degree, 1)), n, p, false};
  if (degree == 0) return mg;
  std::vector<Permutation> perms;
  for (const FpMatrix& m : gens) perms.push_back(mg.to_permutation(m));
  mg.group = PermGroup(degree, std::move(perms));
  return mg;
}

MatrixGroup affine_matrix_group(std::size_t n, std::uint32_t p,
                                const std::vector<FpMatrix>& gens) {
  check_matrix_params(n, p);
  const std::size_t degree = checked_power(p, n);
  MatrixGroup mg{PermGroup::trivial(degree), n, p, true};
  std::vector<Permutation> perms;
  for (const FpMatrix& m : gens) perms.push_back(mg.to_permutation(m));
  const PermGroup v = mg.translations();
  perms.insert(perms.end(), v.generators().begin(), v.generators().end());
  mg.group = PermGroup(degree, std::move(perms));
  return mg;
}

MatrixGroup gl(std::size_t n, std::uint32_t p) {
  check_matrix_params(n, p);
  return matrix_group(n, p, gl_generators(n, p));
}

MatrixGroup sl(std::size_t n, std::uint32_t p) {
  check_matrix_params(n, p);
  return matrix_group(n, p, transvections(n, p, false));
}

MatrixGroup ut(std::size_t n, std::uint32_t p) {
  check_matrix_params(n, p);
  return matrix_group(n, p, transvections(n, p, true));
}

MatrixGroup tr2(std::uint32_t p) {
  check_matrix_params(2, p);
  std::vector<FpMatrix> gens = transvections(2, p, true);
  auto w = static_cast<std::uint32_t>(nt::primitive_root(p));
  if (w != 1) {
    gens.push_back(diagonal_unit(2, p, 0, w));
    gens.push_back(diagonal_unit(2, p, 1, w));
  }
  return matrix_group(2, p, gens);
}

MatrixGroup affine_gl(std::size_t n, std::uint32_t p) {
  check_matrix_params(n, p);
  return affine_matrix_group(n, p, gl_generators(n, p));
}

MatrixGroup affine_sl(std::size_t n, std::uint32_t p) {
  check_matrix_params(n, p);
  return affine_matrix_group(n, p, transvections(n, p, false));
}

std::vector<FpMatrix> sl25_generators() {
  return {FpMatrix(11, 2, {4, 1, 0, 3}), FpMatrix(11, 2, {0, 3, 7, 10})};
}

MatrixGroup sl25_on_f11sq() { return affine_matrix_group(2, 11, sl25_generators()); }

FibQuotient fib_quotient(std::uint32_t p) {
  require_prime(p);
  FpMatrix x(p, 2, {1, 1, 1, 0});
  bool irreducible = true;
  for (std::uint64_t r = 0; r < p; ++r) {
    if ((r * r + 2ULL * p - r - 1) % p == 0) irreducible = false;
  }
  return FibQuotient{affine_matrix_group(2, p, {x}), x, matrix_order(x), irreducible};
}

// --- Aut(Sym(6)) -------------------------------------------------------------

std::size_t AutSym6::point_of(const Permutation& s) const {
  auto it = std::lower_bound(sym6.begin(), sym6.end(), s);
  if (it == sym6.end() || *it != s) {
    throw Error(ErrorCode::NotAMember, "not an element of Sym(6)");
  }
  return static_cast<std::size_t>(it - sym6.begin());
}

AutSym6 aut_sym6() {
  const PermGroup sym6 = symmetric(6);
  const SubgroupSet& s6 = sym6.elements();
  AutSym6 a{PermGroup::trivial(720), PermGroup::trivial(720), PermGroup::trivial(720),
            Permutation::identity(720), std::vector<Permutation>(s6.begin(), s6.end())};

  auto induced = [&](auto&& map) {
    std::vector<Point> images(720);
    for (std::size_t i = 0; i < 720; ++i) {
      images[i] = static_cast<Point>(a.point_of(map(a.sym6[i])));
    }
    return Permutation(std::move(images));
  };
  auto conjugation_maps = [&](const PermGroup& by) {
    std::vector<Permutation> gens;
    for (const Permutation& c : by.generators()) {
      gens.push_back(induced([&](const Permutation& s) { return conjugate(s, c); }));
    }
    return gens;
  };

  // The outer automorphism on the transpositions (0 j), j = 1..5.
  const std::vector<Permutation> transpositions = {
      Permutation::from_cycles(6, {{0, 1}}), Permutation::from_cycles(6, {{0, 2}}),
      Permutation::from_cycles(6, {{0, 3}}), Permutation::from_cycles(6, {{0, 4}}),
      Permutation::from_cycles(6, {{0, 5}})};
  const std::vector<Permutation> targets = {
      Permutation::from_cycles(6, {{0, 4}, {1, 2}, {3, 5}}),
      Permutation::from_cycles(6, {{0, 3}, {1, 5}, {2, 4}}),
      Permutation::from_cycles(6, {{0, 2}, {1, 3}, {4, 5}}),
      Permutation::from_cycles(6, {{0, 1}, {2, 5}, {3, 4}}),
      Permutation::from_cycles(6, {{0, 5}, {1, 4}, {2, 3}})};

  // Extend to all of Sym(6) along words in the transpositions; every edge of
  // the search re-checks the homomorphism property.
  std::vector<std::optional<Permutation>> phi(720);
  const Permutation id6 = Permutation::identity(6);
  phi[a.point_of(id6)] = id6;
  std::vector<std::size_t> queue{a.point_of(id6)};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t cur = queue[head];
    for (std::size_t j = 0; j < transpositions.size(); ++j) {
      std::size_t next = a.point_of(compose(a.sym6[cur], transpositions[j]));
      Permutation value = compose(*phi[cur], targets[j]);
      if (!phi[next]) {
        phi[next] = std::move(value);
        queue.push_back(next);
      } else if (*phi[next] != value) {
        throw std::logic_error("outer map does not extend to an automorphism");
      }
    }
  }
  a.outer = induced([&](const Permutation& s) { return *phi[a.point_of(s)]; });

  std::vector<Permutation> inner_gens = conjugation_maps(symmetric(6));
  a.inner = PermGroup(720, inner_gens);
  a.inner_alt = PermGroup(720, conjugation_maps(alternating(6)));
  inner_gens.push_back(a.outer);
  a.group = PermGroup(720, std::move(inner_gens));
  return a;
}

PermGroup iterated_wreath(std::uint32_t p, std::size_t depth) {
  require_prime(p);
  require(depth >= 1, "IterWr depth must be at least 1");
  PermGroup g = cyclic(p);
  for (std::size_t k = 2; k <= depth; ++k) {
    // |C(p) wr G| = p^|G| |G|; refuse before building anything that large.
    const std::uint64_t size = g.order_u64();
    BigInt next = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(
                      std::min<std::uint64_t>(size, 4096))) * size;
    if (size > 4096 || next > g.enumeration_cap() || size * p > kMaxDegree) {
      throw CapacityError(next > std::numeric_limits<std::uint64_t>::max()
                              ? std::numeric_limits<std::uint64_t>::max()
                              : next.convert_to<std::uint64_t>(),
                          g.enumeration_cap());
    }
    g = wreath(cyclic(p), regular_representation(g)).group;
  }
  return g;
}

}  // namespace pgt
