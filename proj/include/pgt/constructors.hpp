#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pgt/fp_matrix.hpp"
#include "pgt/perm_group.hpp"

namespace pgt {

// Small families in their natural actions. All throw InvalidParameter on
// out-of-range parameters.
PermGroup symmetric(std::size_t n);
PermGroup alternating(std::size_t n);
/// Regular action on n points.
PermGroup cyclic(std::size_t n);
/// Dihedral group of the given (even) order, acting on order/2 points; the
/// orders 2 and 4 use their regular actions.
PermGroup dihedral(std::size_t order);
/// Generalized quaternion group of order 2^k (k >= 3), regular representation.
PermGroup quaternion(std::size_t order);
/// (Z_p)^k as k disjoint p-cycles.
PermGroup elementary_abelian(std::uint32_t p, std::size_t k);

/// Right-regular representation on the canonical element list.
PermGroup regular_representation(const PermGroup& group);

struct DirectProduct {
  PermGroup group;
  std::size_t left_degree;
  std::size_t right_degree;

  Permutation embed_left(const Permutation& a) const;
  Permutation embed_right(const Permutation& b) const;
  SubgroupSet embed_left(const SubgroupSet& a) const;
  SubgroupSet embed_right(const SubgroupSet& b) const;
};

/// A x B acting on disjoint point sets (A first).
DirectProduct direct_product(const PermGroup& a, const PermGroup& b);

/// H wr K in the imprimitive action: block i (a K-point) carries a copy of
/// H's points, so point (i, j) is i * deg(H) + j.
struct WreathProduct {
  PermGroup group;
  /// Direct product of deg(K) copies of H.
  PermGroup base;
  /// The lifted copy of K permuting the blocks.
  PermGroup top;
  /// [K, B].
  PermGroup top_base_commutator;
  std::size_t blocks;
  std::size_t block_size;
  bool top_transitive;

  Permutation lift_top(const Permutation& k) const;
  PermGroup lift_top(const PermGroup& k) const;
  /// h acting on block i only.
  Permutation lift_block(const Permutation& h, std::size_t block) const;
};

WreathProduct wreath(const PermGroup& h, const PermGroup& k);

/// A matrix group over F_p turned into a permutation group through its action
/// on row vectors: on the p^n - 1 nonzero vectors (linear) or on all p^n
/// vectors (affine, x -> xM + t). Vector v has point encode_vector(v) in the
/// affine case and encode_vector(v) - 1 in the linear case.
struct MatrixGroup {
  PermGroup group;
  std::size_t n;
  std::uint32_t p;
  bool affine;

  Permutation to_permutation(const FpMatrix& m) const;
  /// Affine only: x -> x + t.
  Permutation translation(const std::vector<std::uint32_t>& t) const;
  /// Affine only: the translation subgroup V.
  PermGroup translations() const;
};

MatrixGroup gl(std::size_t n, std::uint32_t p);
MatrixGroup sl(std::size_t n, std::uint32_t p);
/// Upper unitriangular matrices.
MatrixGroup ut(std::size_t n, std::uint32_t p);
/// Invertible upper triangular 2x2 matrices.
MatrixGroup tr2(std::uint32_t p);
MatrixGroup affine_gl(std::size_t n, std::uint32_t p);
MatrixGroup affine_sl(std::size_t n, std::uint32_t p);

/// The linear and affine group generated by explicit matrices.
MatrixGroup matrix_group(std::size_t n, std::uint32_t p, const std::vector<FpMatrix>& gens);
MatrixGroup affine_matrix_group(std::size_t n, std::uint32_t p,
                                const std::vector<FpMatrix>& gens);

/// The matrices a = [[4,1],[0,3]] and b = [[0,3],[7,10]] over F_11.
std::vector<FpMatrix> sl25_generators();
/// <a, b> = SL(2,5) acting affinely on F_11^2 (121 points), order 14520.
MatrixGroup sl25_on_f11sq();

struct FibQuotient {
  /// <x> ⋉ (Z_p x Z_p), x acting as [[1,1],[1,0]].
  MatrixGroup affine;
  FpMatrix action;
  std::uint64_t action_order;
  /// Whether x^2 - x - 1 has no root mod p.
  bool polynomial_irreducible;
};

FibQuotient fib_quotient(std::uint32_t p);

struct AutSym6 {
  /// Aut(Sym(6)) acting on the 720 elements of Sym(6).
  PermGroup group;
  /// Conjugation maps: the inner copy of Sym(6).
  PermGroup inner;
  /// Conjugation by Alt(6).
  PermGroup inner_alt;
  /// The outer automorphism given on transpositions (0 j).
  Permutation outer;
  /// Point i is the element sym6[i] of Sym(6) (canonical order).
  std::vector<Permutation> sym6;

  std::size_t point_of(const Permutation& s) const;
};

AutSym6 aut_sym6();

/// G_1 = C(p), G_{k+1} = C(p) wr G_k with G_k in its regular action.
PermGroup iterated_wreath(std::uint32_t p, std::size_t depth);

}  // namespace pgt
