#include <doctest.h>

#include "../oracle.hpp"
#include "pgt/constructors.hpp"
#include "pgt/error.hpp"
#include "pgt/group_ops.hpp"
#include "pgt/pseudocentre.hpp"

using namespace pgt;

namespace {

oracle::Set enumerate(const PermGroup& g) {
  return oracle::closure(g.degree(), {g.generators().begin(), g.generators().end()});
}

}  // namespace

TEST_SUITE("pseudocentre") {
  TEST_CASE("agrees with the literal definition") {
    for (const PermGroup& g :
         {symmetric(3), symmetric(4), alternating(4), dihedral(8), dihedral(12), quaternion(8),
          cyclic(6), sl(2, 3).group, affine_gl(1, 5).group, wreath(cyclic(2), cyclic(3)).group}) {
      const oracle::Set expect = oracle::pseudocentre(enumerate(g));
      CHECK(oracle::from(pseudocentre(g)) == expect);
      CHECK(oracle::from(pseudocentre(g, 3)) == expect);
      CHECK(oracle::from(pseudocentre_naive(g)) == expect);
    }
  }

  TEST_CASE("known values") {
    CHECK(pseudocentre(symmetric(4)).size() == 12);
    CHECK(pseudocentre(symmetric(5)).size() == 60);
    CHECK(pseudocentre(alternating(4)).size() == 4);
    CHECK(pseudocentre(dihedral(8)).size() == 2);
    CHECK(pseudocentre(cyclic(6)).size() == 6);
    CHECK(pseudocentre(PermGroup::trivial(2)).size() == 1);
  }

  TEST_CASE("naive oracle honours its cap") {
    CHECK_THROWS_AS(pseudocentre_naive(symmetric(7), 1000), CapacityError);
  }

  TEST_CASE("pseudocentral groups") {
    CHECK(is_pseudocentral(alternating(5)));
    CHECK_FALSE(is_pseudocentral(symmetric(5)));
    CHECK(is_pseudocentral(cyclic(4)));
    CHECK_FALSE(is_pseudocentral(symmetric(3)));
  }

  TEST_CASE("upper series of D16") {
    const PseudoSeries s = upper_pseudocentral_series(dihedral(16));
    CHECK(s.sizes() == std::vector<std::uint64_t>{1, 4, 16});
    CHECK(s.stabilized);
    CHECK(s.reaches_group);
    CHECK(pseudonilpotent_class(dihedral(16)) == 2);
  }

  TEST_CASE("series terms are normal and increasing") {
    const PermGroup g = symmetric(4);
    const PseudoSeries s = upper_pseudocentral_series(g);
    for (std::size_t i = 0; i + 1 < s.terms.size(); ++i) {
      CHECK(s.terms[i].is_subset_of(s.terms[i + 1]));
      CHECK(is_normal(g, s.terms[i + 1]));
    }
    CHECK(s.terms.front().is_trivial());
  }

  TEST_CASE("step limit") {
    const PseudoSeries s = upper_pseudocentral_series(dihedral(32), 1);
    CHECK_FALSE(s.stabilized);
    CHECK_FALSE(s.reaches_group);
    CHECK_FALSE(pseudonilpotent_class(dihedral(32), 1).has_value());
    CHECK(pseudonilpotent_class(dihedral(32)).has_value());
  }
}
