#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace pgt {

/// A square matrix over the prime field F_p, row-major, entries in [0, p).
/// Vectors are rows and matrices act on the right: v -> v * M.
class FpMatrix {
 public:
  FpMatrix(std::uint32_t p, std::size_t n);
  /// Entries are reduced mod p (negative values allowed).
  FpMatrix(std::uint32_t p, std::size_t n, std::initializer_list<std::int64_t> entries);
  FpMatrix(std::uint32_t p, std::size_t n, const std::vector<std::int64_t>& entries);

  static FpMatrix identity(std::uint32_t p, std::size_t n);

  std::uint32_t modulus() const noexcept { return p_; }
  std::size_t dimension() const noexcept { return n_; }

  std::uint32_t at(std::size_t row, std::size_t col) const { return entries_[row * n_ + col]; }
  void set(std::size_t row, std::size_t col, std::int64_t value);

  std::uint32_t determinant() const;
  bool is_invertible() const { return determinant() != 0; }

  /// Row vector times matrix.
  std::vector<std::uint32_t> apply(const std::vector<std::uint32_t>& row) const;

  friend FpMatrix operator*(const FpMatrix& a, const FpMatrix& b);
  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  std::uint32_t p_;
  std::size_t n_;
  std::vector<std::uint32_t> entries_;
};

FpMatrix matrix_power(const FpMatrix& m, std::uint64_t exponent);

/// Multiplicative order of an invertible matrix.
std::uint64_t matrix_order(const FpMatrix& m);

/// Encodes a vector over F_p as the integer sum v_i p^(n-1-i), so numeric order
/// is lexicographic order on coordinates.
std::size_t encode_vector(const std::vector<std::uint32_t>& v, std::uint32_t p);
std::vector<std::uint32_t> decode_vector(std::size_t code, std::uint32_t p, std::size_t n);

}  // namespace pgt
