#include "pgt/fp_matrix.hpp"

#include "pgt/error.hpp"

namespace pgt {

namespace {

std::uint32_t reduce(std::int64_t value, std::uint32_t p) {
  std::int64_t r = value % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime: a^(p-2).
  std::uint32_t result = 1;
  std::uint32_t base = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1U) {
    if (e & 1U) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
  }
  return result;
}

}  // namespace

FpMatrix::FpMatrix(std::uint32_t p, std::size_t n) : p_(p), n_(n), entries_(n * n, 0) {
  if (p < 2 || n == 0) throw Error(ErrorCode::InvalidParameter, "matrix needs p >= 2 and n >= 1");
}

FpMatrix::FpMatrix(std::uint32_t p, std::size_t n, std::initializer_list<std::int64_t> entries)
    : FpMatrix(p, n, std::vector<std::int64_t>(entries)) {}

FpMatrix::FpMatrix(std::uint32_t p, std::size_t n, const std::vector<std::int64_t>& entries)
    : FpMatrix(p, n) {
  if (entries.size() != n * n) {
    throw Error(ErrorCode::InvalidParameter, "matrix entry count does not match dimension");
  }
  for (std::size_t i = 0; i < entries.size(); ++i) entries_[i] = reduce(entries[i], p);
}

FpMatrix FpMatrix::identity(std::uint32_t p, std::size_t n) {
  FpMatrix m(p, n);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = 1;
  return m;
}

void FpMatrix::set(std::size_t row, std::size_t col, std::int64_t value) {
  entries_[row * n_ + col] = reduce(value, p_);
}

std::uint32_t FpMatrix::determinant() const {
  std::vector<std::uint32_t> a = entries_;
  std::uint32_t det = 1;
  for (std::size_t col = 0; col < n_; ++col) {
    std::size_t pivot = col;
    while (pivot < n_ && a[pivot * n_ + col] == 0) ++pivot;
    if (pivot == n_) return 0;
    if (pivot != col) {
      for (std::size_t k = 0; k < n_; ++k) std::swap(a[pivot * n_ + k], a[col * n_ + k]);
      det = (p_ - det) % p_;
    }
    std::uint32_t pv = a[col * n_ + col];
    det = mul_mod(det, pv, p_);
    std::uint32_t inv = inverse_mod(pv, p_);
    for (std::size_t r = col + 1; r < n_; ++r) {
      std::uint32_t factor = mul_mod(a[r * n_ + col], inv, p_);
      if (factor == 0) continue;
      for (std::size_t k = col; k < n_; ++k) {
        a[r * n_ + k] = (a[r * n_ + k] + p_ - mul_mod(factor, a[col * n_ + k], p_)) % p_;
      }
    }
  }
  return det;
}

std::vector<std::uint32_t> FpMatrix::apply(const std::vector<std::uint32_t>& row) const {
  std::vector<std::uint32_t> out(n_, 0);
  for (std::size_t j = 0; j < n_; ++j) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < n_; ++i) acc += static_cast<std::uint64_t>(row[i]) * at(i, j);
    out[j] = static_cast<std::uint32_t>(acc % p_);
  }
  return out;
}

FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) {
  if (a.p_ != b.p_ || a.n_ != b.n_) {
    throw Error(ErrorCode::DegreeMismatch, "matrix shapes or moduli differ");
  }
  FpMatrix c(a.p_, a.n_);
  for (std::size_t i = 0; i < a.n_; ++i) {
    for (std::size_t j = 0; j < a.n_; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < a.n_; ++k) {
        acc += static_cast<std::uint64_t>(a.at(i, k)) * b.at(k, j);
      }
      c.entries_[i * a.n_ + j] = static_cast<std::uint32_t>(acc % a.p_);
    }
  }
  return c;
}

FpMatrix matrix_power(const FpMatrix& m, std::uint64_t exponent) {
  FpMatrix result = FpMatrix::identity(m.modulus(), m.dimension());
  FpMatrix base = m;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

std::uint64_t matrix_order(const FpMatrix& m) {
  if (!m.is_invertible()) throw Error(ErrorCode::InvalidParameter, "matrix is singular");
  const FpMatrix id = FpMatrix::identity(m.modulus(), m.dimension());
  FpMatrix cur = m;
  std::uint64_t k = 1;
  while (cur != id) {
    cur = cur * m;
    ++k;
  }
  return k;
}

std::size_t encode_vector(const std::vector<std::uint32_t>& v, std::uint32_t p) {
  std::size_t code = 0;
  for (std::uint32_t x : v) code = code * p + x;
  return code;
}

std::vector<std::uint32_t> decode_vector(std::size_t code, std::uint32_t p, std::size_t n) {
  std::vector<std::uint32_t> v(n, 0);
  for (std::size_t i = n; i-- > 0;) {
    v[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  return v;
}

}  // namespace pgt
