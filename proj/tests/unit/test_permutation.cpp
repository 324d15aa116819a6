#include <doctest.h>

#include <random>
#include <sstream>

#include "pgt/error.hpp"
#include "pgt/permutation.hpp"

using namespace pgt;

namespace {

Permutation random_permutation(std::size_t degree, std::mt19937& rng) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(i);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(images);
}

}  // namespace

TEST_SUITE("permutation") {
  TEST_CASE("identity") {
    CHECK(Permutation::identity(1).images()[0] == 0);
    const Permutation id3 = Permutation::identity(3);
    CHECK(std::vector<Point>(id3.images().begin(), id3.images().end()) ==
          std::vector<Point>{0, 1, 2});
    CHECK(id3.is_identity());
    CHECK_THROWS_AS(Permutation::identity(0), Error);

    std::mt19937 rng(1);
    for (int i = 0; i < 20; ++i) {
      const Permutation p = random_permutation(4, rng);
      CHECK(compose(Permutation::identity(4), p) == p);
      CHECK(compose(p, Permutation::identity(4)) == p);
    }
  }

  TEST_CASE("construction validates bijection") {
    CHECK_THROWS_AS(Permutation({0, 0, 1}), Error);
    CHECK_THROWS_AS(Permutation({0, 3, 1}), Error);
    CHECK_NOTHROW(Permutation({2, 0, 1}));
    CHECK_THROWS_AS(Permutation::from_cycles(3, {{0, 1}, {1, 2}}), Error);
  }

  TEST_CASE("right action composition") {
    const Permutation a = Permutation::from_cycles(3, {{0, 1}});
    const Permutation b = Permutation::from_cycles(3, {{1, 2}});
    // 0 -a-> 1 -b-> 2
    CHECK(compose(a, b)[0] == 2);
    CHECK(compose(a, b) != compose(b, a));
  }

  TEST_CASE("inverse, conjugate, commutator laws") {
    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
      const Permutation p = random_permutation(6, rng);
      const Permutation q = random_permutation(6, rng);
      CHECK(compose(p, inverse(p)).is_identity());
      CHECK(commutator(p, p).is_identity());
      CHECK(conjugate(p, Permutation::identity(6)) == p);
      CHECK(conjugate(p, q) == compose(compose(inverse(q), p), q));
      CHECK(commutator(p, q) == compose(compose(inverse(p), inverse(q)), compose(p, q)));
      CHECK(commutes(p, q) == commutator(p, q).is_identity());
    }
  }

  TEST_CASE("commutator of two transpositions in Sym(3) is a 3-cycle") {
    const Permutation c = commutator(Permutation::from_cycles(3, {{0, 1}}),
                                     Permutation::from_cycles(3, {{1, 2}}));
    CHECK(c.order() == 3);
    CHECK(c.first_moved_point() == 0);
  }

  TEST_CASE("order and power") {
    const Permutation p = Permutation::from_cycles(7, {{0, 1, 2}, {3, 4}});
    CHECK(p.order() == 6);
    CHECK(power(p, 6).is_identity());
    CHECK(power(p, -1) == inverse(p));
    CHECK(power(p, 0).is_identity());
    CHECK(power(p, 7) == p);
    CHECK(Permutation::identity(5).order() == 1);
    CHECK(Permutation::identity(5).first_moved_point() == 5);
  }

  TEST_CASE("cycle string") {
    CHECK(Permutation::identity(3).to_cycle_string() == "()");
    CHECK(Permutation::from_cycles(5, {{0, 2}, {1, 3, 4}}).to_cycle_string() == "(0,2)(1,3,4)");
    std::ostringstream out;
    out << Permutation::from_cycles(3, {{0, 1, 2}});
    CHECK(out.str() == "(0,1,2)");
  }

  TEST_CASE("degree mismatch") {
    CHECK_THROWS_AS(compose(Permutation::identity(3), Permutation::identity(4)), Error);
    try {
      compose(Permutation::identity(3), Permutation::identity(4));
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DegreeMismatch);
    }
  }

  TEST_CASE("canonical order is lexicographic on images") {
    const Permutation a({0, 2, 1});
    const Permutation b({1, 0, 2});
    CHECK(a < b);
    CHECK(Permutation::identity(3) < a);
    CHECK(PermutationHash{}(a) == PermutationHash{}(Permutation({0, 2, 1})));
  }
}
