#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pgt::nt {

using BigInt = boost::multiprecision::cpp_int;

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);
/// Smallest generator of the multiplicative group mod a prime p.
std::uint64_t primitive_root(std::uint64_t p);

/// Fibonacci numbers, f(0) = 0, f(1) = 1, by fast doubling.
BigInt fib(std::uint64_t n);
/// f(n) mod m for m >= 1.
std::uint64_t fib_mod(std::uint64_t n, std::uint64_t m);
/// Least k > 0 with f(k) = 0 and f(k+1) = 1 mod m (m >= 2).
std::uint64_t pisano_period(std::uint64_t m);

struct RemarkResult {
  std::uint64_t p = 0;
  bool holds = false;
  /// f(p^2) mod p^2 and f(p^2 - 1) mod p^2.
  std::uint64_t fib_p2 = 0;
  std::uint64_t fib_p2_minus_1 = 0;
};

/// Tests f(p^2) = 1 and f(p^2 - 1) = 0 modulo p^2.
RemarkResult remark_condition(std::uint64_t p);

struct RemarkScan {
  std::uint64_t bound = 0;
  std::uint64_t primes_tested = 0;
  std::vector<RemarkResult> witnesses;
};

/// Runs remark_condition on every prime up to `bound`; `threads` > 1 shards
/// the prime list.
RemarkScan remark_scan(std::uint64_t bound, unsigned threads = 1);

struct DQuantity {
  BigInt c1;
  BigInt d1;
  BigInt d2;
  BigInt d;
};

/// c1 = sum f(jU), d1 = 1 + sum f(jU+1), d2 = 1 + sum f(jU-1) over j = 1..T-1,
/// and D = d1 d2 - c1^2. Requires T >= 2, U >= 1.
DQuantity d_quantity(std::uint64_t t, std::uint64_t u);

/// Smallest N in (m, m + window] with D(N) > T^2, or 0 when none exists.
std::uint64_t find_d_exceeding(std::uint64_t t, std::uint64_t m, std::uint64_t window);

/// 2x2 integer matrix, row-major.
using Mat2 = std::array<BigInt, 4>;

Mat2 mat2_mul(const Mat2& a, const Mat2& b);
Mat2 mat2_pow(const Mat2& m, std::uint64_t n);
BigInt mat2_det(const Mat2& m);

struct TraceResult {
  BigInt by_power;
  BigInt by_recurrence;
};

/// trace(M^n) by repeated squaring and by t0 = 2, t1 = tr M,
/// t_{k+1} = tr M * t_k - t_{k-1}. det(M) must be 1.
TraceResult chebyshev_trace(const Mat2& m, std::uint64_t n);

struct PowerResult {
  Mat2 by_power;
  /// u_{n-1} M - u_{n-2} I with u_{-1} = 0, u_0 = 1, u_{k+1} = tr M u_k - u_{k-1}.
  Mat2 by_recurrence;
};

/// det(M) must be 1 and n >= 1.
PowerResult chebyshev_power(const Mat2& m, std::uint64_t n);

/// Same two routes with all arithmetic reduced mod a prime p; det(M) = 1 mod p.
TraceResult chebyshev_trace_mod(const Mat2& m, std::uint64_t n, std::uint64_t p);
PowerResult chebyshev_power_mod(const Mat2& m, std::uint64_t n, std::uint64_t p);

}  // namespace pgt::nt
