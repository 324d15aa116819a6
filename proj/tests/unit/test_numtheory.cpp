#include <doctest.h>

#include <random>

#include "pgt/error.hpp"
#include "pgt/numtheory.hpp"

using namespace pgt::nt;

namespace {

BigInt naive_fib(std::uint64_t n) {
  BigInt a = 0, b = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    BigInt next = a + b;
    a = b;
    b = next;
  }
  return a;
}

std::uint64_t naive_pisano(std::uint64_t m) {
  std::uint64_t a = 0, b = 1;
  for (std::uint64_t k = 1;; ++k) {
    const std::uint64_t next = (a + b) % m;
    a = b;
    b = next;
    if (a == 0 && b == 1) return k;
  }
}

}  // namespace

TEST_SUITE("numtheory") {
  TEST_CASE("primes") {
    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(561));
    CHECK(is_prime(18446744073709551557ull));
    CHECK(primes_up_to(30).size() == 10);
    CHECK(primes_up_to(1).empty());
    CHECK(primitive_root(7) == 3);
    CHECK(primitive_root(11) == 2);
  }

  TEST_CASE("fibonacci") {
    CHECK(fib(0) == 0);
    CHECK(fib(1) == 1);
    CHECK(fib(10) == 55);
    for (std::uint64_t n = 0; n <= 1000; ++n) CHECK(fib(n) == naive_fib(n));
    CHECK(fib_mod(25, 25) == 0);
    CHECK(fib_mod(100, 1000) == static_cast<std::uint64_t>(naive_fib(100) % 1000));
  }

  TEST_CASE("gcd property") {
    for (std::uint64_t m = 1; m < 40; ++m) {
      for (std::uint64_t n = 1; n < 40; ++n) {
        CHECK(fib(std::gcd(m, n)) == boost::multiprecision::gcd(fib(m), fib(n)));
      }
    }
  }

  TEST_CASE("pisano periods") {
    CHECK(pisano_period(2) == 3);
    CHECK(pisano_period(3) == 8);
    CHECK(pisano_period(10) == 60);
    for (std::uint64_t m = 2; m < 200; ++m) CHECK(pisano_period(m) == naive_pisano(m));
  }

  TEST_CASE("remark condition agrees with exact values") {
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
      const RemarkResult r = remark_condition(p);
      const BigInt m = p * p;
      CHECK(r.fib_p2 == static_cast<std::uint64_t>(fib(p * p) % m));
      CHECK(r.fib_p2_minus_1 == static_cast<std::uint64_t>(fib(p * p - 1) % m));
      CHECK(r.holds == (r.fib_p2 == 1 && r.fib_p2_minus_1 == 0));
    }
    const RemarkScan scan = remark_scan(1000, 2);
    CHECK(scan.primes_tested == 168);
    auto primes = [](const RemarkScan& r) {
      std::vector<std::uint64_t> out;
      for (const RemarkResult& w : r.witnesses) out.push_back(w.p);
      return out;
    };
    CHECK(primes(scan) == primes(remark_scan(1000, 1)));
  }

  TEST_CASE("D quantity") {
    CHECK(d_quantity(2, 1).d == 1);
    CHECK(d_quantity(2, 5).d == 11);
    for (std::uint64_t u = 5; u <= 30; ++u) CHECK(d_quantity(2, u).d > 4);
    const DQuantity q = d_quantity(3, 2);
    CHECK(q.c1 == fib(2) + fib(4));
    CHECK(q.d1 == 1 + fib(3) + fib(5));
    CHECK(q.d2 == 1 + fib(1) + fib(3));
    CHECK(q.d == q.d1 * q.d2 - q.c1 * q.c1);
    const std::uint64_t n = find_d_exceeding(3, 1, 10);
    REQUIRE(n > 1);
    CHECK(d_quantity(3, n).d > 9);
  }

  TEST_CASE("Chebyshev identities") {
    const Mat2 m{2, 1, 1, 1};
    CHECK(mat2_det(m) == 1);
    const TraceResult t = chebyshev_trace(m, 2);
    CHECK(t.by_power == 7);
    CHECK(t.by_recurrence == 7);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
      // Products of elementary matrices have determinant 1.
      Mat2 a{1, 0, 0, 1};
      for (int k = 0; k < 4; ++k) {
        const std::int64_t s = static_cast<std::int64_t>(rng() % 7) - 3;
        a = mat2_mul(a, k % 2 ? Mat2{1, s, 0, 1} : Mat2{1, 0, s, 1});
      }
      const std::uint64_t n = 1 + rng() % 12;
      const PowerResult p = chebyshev_power(a, n);
      CHECK(p.by_power == p.by_recurrence);
      CHECK(p.by_power == mat2_pow(a, n));
      const PowerResult q = chebyshev_power_mod(a, n, 7);
      CHECK(q.by_power == q.by_recurrence);
    }
  }
}

TEST_SUITE("numtheory") {
  TEST_CASE("parameter checks") {
    using pgt::Error;
    CHECK_THROWS_AS(fib_mod(3, 0), Error);
    CHECK_THROWS_AS(pisano_period(1), Error);
    CHECK_THROWS_AS(remark_condition(9), Error);
    CHECK_THROWS_AS(d_quantity(1, 3), Error);
    CHECK_THROWS_AS(chebyshev_trace(Mat2{2, 0, 0, 1}, 3), Error);
    CHECK_THROWS_AS(chebyshev_power(Mat2{1, 0, 0, 1}, 0), Error);
  }
}
