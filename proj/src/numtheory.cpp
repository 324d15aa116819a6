#include "pgt/numtheory.hpp"

#include <algorithm>
#include <thread>

#include "pgt/error.hpp"

namespace pgt::nt {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    e >>= 1U;
  }
  return result;
}

// (f(n), f(n+1)) mod m.
std::pair<std::uint64_t, std::uint64_t> fib_pair_mod(std::uint64_t n, std::uint64_t m) {
  if (n == 0) return {0, 1 % m};
  auto [a, b] = fib_pair_mod(n >> 1U, m);
  std::uint64_t two_b_minus_a = static_cast<std::uint64_t>((static_cast<u128>(2) * b + m - a) % m);
  std::uint64_t c = mul_mod(a, two_b_minus_a, m);
  std::uint64_t d = static_cast<std::uint64_t>(
      (static_cast<u128>(mul_mod(a, a, m)) + mul_mod(b, b, m)) % m);
  if (n & 1U) return {d, (c + d) % m};
  return {c, d};
}

std::pair<BigInt, BigInt> fib_pair(std::uint64_t n) {
  if (n == 0) return {0, 1};
  auto [a, b] = fib_pair(n >> 1U);
  BigInt c = a * (2 * b - a);
  BigInt d = a * a + b * b;
  if (n & 1U) return {d, c + d};
  return {c, d};
}

void require_unimodular(const BigInt& det) {
  if (det != 1) throw Error(ErrorCode::InvalidParameter, "matrix must have determinant 1");
}

BigInt reduce(const BigInt& x, std::uint64_t p) {
  BigInt r = x % p;
  if (r < 0) r += p;
  return r;
}

Mat2 reduce(const Mat2& m, std::uint64_t p) {
  return {reduce(m[0], p), reduce(m[1], p), reduce(m[2], p), reduce(m[3], p)};
}

// Shared body of the two trace routes; `norm` reduces after each step.
template <class Norm>
TraceResult trace_routes(const Mat2& m, std::uint64_t n, Norm norm) {
  Mat2 pw = {1, 0, 0, 1};
  Mat2 base = m;
  for (std::uint64_t e = n; e > 0; e >>= 1U) {
    if (e & 1U) pw = norm(mat2_mul(pw, base));
    base = norm(mat2_mul(base, base));
  }
  const BigInt tr = m[0] + m[3];
  BigInt prev = 2;
  BigInt cur = tr;
  if (n == 0) cur = prev;
  for (std::uint64_t k = 1; k < n; ++k) {
    BigInt next = tr * cur - prev;
    prev = std::move(cur);
    cur = norm(Mat2{next, 0, 0, 0})[0];
  }
  return {norm(Mat2{pw[0] + pw[3], 0, 0, 0})[0], norm(Mat2{cur, 0, 0, 0})[0]};
}

template <class Norm>
PowerResult power_routes(const Mat2& m, std::uint64_t n, Norm norm) {
  if (n == 0) throw Error(ErrorCode::InvalidParameter, "power identity needs n >= 1");
  Mat2 pw = {1, 0, 0, 1};
  Mat2 base = m;
  for (std::uint64_t e = n; e > 0; e >>= 1U) {
    if (e & 1U) pw = norm(mat2_mul(pw, base));
    base = norm(mat2_mul(base, base));
  }
  // u_{k} for k = -1, 0, ...; we need u_{n-1} and u_{n-2}.
  const BigInt tr = m[0] + m[3];
  BigInt u_prev = 0;  // u_{-1}
  BigInt u_cur = 1;   // u_0
  for (std::uint64_t k = 1; k < n; ++k) {
    BigInt next = tr * u_cur - u_prev;
    u_prev = std::move(u_cur);
    u_cur = norm(Mat2{next, 0, 0, 0})[0];
  }
  Mat2 rec = {u_cur * m[0] - u_prev, u_cur * m[1], u_cur * m[2], u_cur * m[3] - u_prev};
  return {pw, norm(rec)};
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL,
                          37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL,
                          37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (bound < 2) return out;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

std::uint64_t primitive_root(std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidParameter, "primitive_root needs a prime");
  if (p == 2) return 1;
  std::vector<std::uint64_t> factors;
  std::uint64_t m = p - 1;
  for (std::uint64_t q = 2; q * q <= m; ++q) {
    if (m % q != 0) continue;
    factors.push_back(q);
    while (m % q == 0) m /= q;
  }
  if (m > 1) factors.push_back(m);
  for (std::uint64_t g = 2; g < p; ++g) {
    if (std::all_of(factors.begin(), factors.end(),
                    [&](std::uint64_t q) { return pow_mod(g, (p - 1) / q, p) != 1; })) {
      return g;
    }
  }
  return 1;
}

BigInt fib(std::uint64_t n) { return fib_pair(n).first; }

std::uint64_t fib_mod(std::uint64_t n, std::uint64_t m) {
  if (m == 0) throw Error(ErrorCode::InvalidParameter, "fib_mod needs m >= 1");
  return fib_pair_mod(n, m).first;
}

std::uint64_t pisano_period(std::uint64_t m) {
  if (m < 2) throw Error(ErrorCode::InvalidParameter, "pisano_period needs m >= 2");
  std::uint64_t a = 0;
  std::uint64_t b = 1;
  for (std::uint64_t k = 1;; ++k) {
    std::uint64_t next = (a + b) % m;
    a = b;
    b = next;
    if (a == 0 && b == 1) return k;
  }
}

RemarkResult remark_condition(std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidParameter, "remark_condition needs a prime");
  if (p > 0xFFFFFFFFULL) throw Error(ErrorCode::InvalidParameter, "p^2 must fit in 64 bits");
  const std::uint64_t m = p * p;
  auto [f_m_minus_1, f_m] = fib_pair_mod(m - 1, m);
  RemarkResult r;
  r.p = p;
  r.fib_p2 = f_m;
  r.fib_p2_minus_1 = f_m_minus_1;
  r.holds = (f_m == 1 % m) && f_m_minus_1 == 0;
  return r;
}

RemarkScan remark_scan(std::uint64_t bound, unsigned threads) {
  RemarkScan scan;
  scan.bound = bound;
  std::vector<std::uint64_t> primes = primes_up_to(bound);
  scan.primes_tested = primes.size();
  threads = std::max(1U, threads);
  std::vector<std::vector<RemarkResult>> found(threads);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < primes.size(); i += threads) {
        RemarkResult r = remark_condition(primes[i]);
        if (r.holds) found[t].push_back(r);
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& part : found) {
    scan.witnesses.insert(scan.witnesses.end(), part.begin(), part.end());
  }
  std::sort(scan.witnesses.begin(), scan.witnesses.end(),
            [](const RemarkResult& a, const RemarkResult& b) { return a.p < b.p; });
  return scan;
}

DQuantity d_quantity(std::uint64_t t, std::uint64_t u) {
  if (t < 2 || u < 1) throw Error(ErrorCode::InvalidParameter, "D(U) needs T >= 2 and U >= 1");
  DQuantity q;
  q.c1 = 0;
  q.d1 = 1;
  q.d2 = 1;
  for (std::uint64_t j = 1; j < t; ++j) {
    auto [f, f_next] = fib_pair(j * u);
    q.c1 += f;
    q.d1 += f_next;
    q.d2 += f_next - f;  // f(jU - 1)
  }
  q.d = q.d1 * q.d2 - q.c1 * q.c1;
  return q;
}

std::uint64_t find_d_exceeding(std::uint64_t t, std::uint64_t m, std::uint64_t window) {
  const BigInt bound = BigInt(t) * t;
  for (std::uint64_t n = std::max<std::uint64_t>(m + 1, 1); n <= m + window; ++n) {
    if (d_quantity(t, n).d > bound) return n;
  }
  return 0;
}

Mat2 mat2_mul(const Mat2& a, const Mat2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
          a[2] * b[1] + a[3] * b[3]};
}

Mat2 mat2_pow(const Mat2& m, std::uint64_t n) {
  Mat2 result = {1, 0, 0, 1};
  Mat2 base = m;
  for (; n > 0; n >>= 1U) {
    if (n & 1U) result = mat2_mul(result, base);
    base = mat2_mul(base, base);
  }
  return result;
}

BigInt mat2_det(const Mat2& m) { return m[0] * m[3] - m[1] * m[2]; }

TraceResult chebyshev_trace(const Mat2& m, std::uint64_t n) {
  require_unimodular(mat2_det(m));
  return trace_routes(m, n, [](Mat2 x) { return x; });
}

PowerResult chebyshev_power(const Mat2& m, std::uint64_t n) {
  require_unimodular(mat2_det(m));
  return power_routes(m, n, [](Mat2 x) { return x; });
}

TraceResult chebyshev_trace_mod(const Mat2& m, std::uint64_t n, std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidParameter, "modulus must be prime");
  Mat2 r = reduce(m, p);
  require_unimodular(reduce(mat2_det(r), p));
  return trace_routes(r, n, [p](const Mat2& x) { return reduce(x, p); });
}

PowerResult chebyshev_power_mod(const Mat2& m, std::uint64_t n, std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidParameter, "modulus must be prime");
  Mat2 r = reduce(m, p);
  require_unimodular(reduce(mat2_det(r), p));
  return power_routes(r, n, [p](const Mat2& x) { return reduce(x, p); });
}

}  // namespace pgt::nt
