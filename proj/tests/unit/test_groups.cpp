#include <doctest.h>

#include "../oracle.hpp"
#include "pgt/constructors.hpp"
#include "pgt/error.hpp"
#include "pgt/group_ops.hpp"
#include "pgt/perm_group.hpp"
#include "pgt/stabilizer_chain.hpp"

using namespace pgt;

namespace {

Permutation cyc(std::size_t n, std::initializer_list<std::initializer_list<std::size_t>> c) {
  return Permutation::from_cycles(n, c);
}

oracle::Set enumerate(const PermGroup& g) {
  return oracle::closure(g.degree(), {g.generators().begin(), g.generators().end()});
}

}  // namespace

TEST_SUITE("chain") {
  TEST_CASE("orders of symmetric and alternating groups") {
    CHECK(symmetric(8).order() == 40320);
    CHECK(alternating(5).order() == 60);
    CHECK(symmetric(1).order() == 1);
    CHECK(symmetric(20).order() == BigInt("2432902008176640000"));
  }

  TEST_CASE("chain order matches brute-force closure") {
    for (const PermGroup& g : {symmetric(5), alternating(6), dihedral(12), cyclic(9),
                               wreath(cyclic(2), symmetric(3)).group}) {
      CHECK(g.order() == enumerate(g).size());
    }
  }

  TEST_CASE("membership") {
    const StabilizerChain chain(5, alternating(5).generators());
    CHECK(chain.contains(cyc(5, {{0, 1, 2}})));
    CHECK_FALSE(chain.contains(cyc(5, {{0, 1}})));
    // An odd permutation sifts through every level but leaves a residue.
    const auto [residue, level] = chain.sift(cyc(5, {{0, 1}}));
    CHECK(level == chain.length());
    CHECK_FALSE(residue.is_identity());
    // Image of the base point outside the basic orbit: sifting stops there.
    const std::vector<Permutation> swap12{cyc(3, {{1, 2}})};
    const StabilizerChain fixes_zero(3, swap12);
    CHECK(fixes_zero.sift(cyc(3, {{0, 1}})).second == 0);
  }

  TEST_CASE("extend reports redundancy") {
    StabilizerChain chain(4);
    CHECK(chain.order() == 1);
    CHECK(chain.extend(cyc(4, {{0, 1, 2, 3}})));
    CHECK_FALSE(chain.extend(cyc(4, {{0, 2}, {1, 3}})));
    CHECK(chain.extend(cyc(4, {{0, 1}})));
    CHECK(chain.order() == 24);
  }

  TEST_CASE("transversal invariant") {
    const StabilizerChain chain(6, symmetric(6).generators());
    for (std::size_t i = 0; i < chain.length(); ++i) {
      const auto& level = chain.level(i);
      for (std::size_t k = 0; k < level.orbit.size(); ++k) {
        CHECK(level.transversal[k][level.base_point] == level.orbit[k]);
      }
    }
  }

  TEST_CASE("for_each_element visits every element once") {
    const PermGroup g = dihedral(10);
    oracle::Set seen;
    std::size_t visits = 0;
    g.chain().for_each_element([&](const Permutation& p) {
      seen.insert(p);
      ++visits;
    });
    CHECK(visits == 10);
    CHECK(seen == enumerate(g));
  }
}

TEST_SUITE("perm_group") {
  TEST_CASE("elements are canonical and closed") {
    const PermGroup g = symmetric(4);
    const SubgroupSet& e = g.elements();
    CHECK(e.size() == 24);
    CHECK(e[0].is_identity());
    CHECK(std::is_sorted(e.begin(), e.end()));
    CHECK(e.is_closed());
    CHECK(oracle::from(e) == enumerate(g));
  }

  TEST_CASE("enumeration cap") {
    PermGroup g = symmetric(7);
    g.set_enumeration_cap(1000);
    CHECK_THROWS_AS(g.elements(), CapacityError);
    CHECK(g.order() == 5040);
    try {
      g.elements();
    } catch (const CapacityError& e) {
      CHECK(e.required() == 5040);
      CHECK(e.cap() == 1000);
      CHECK(e.code() == ErrorCode::CapacityExceeded);
    }
  }

  TEST_CASE("class representatives") {
    CHECK(conjugacy_class_reps(symmetric(3)).size() == 3);
    CHECK(conjugacy_class_reps(symmetric(4)).size() == 5);
    for (const PermGroup& g : {alternating(5), dihedral(16), quaternion(8)}) {
      const ConjugacyClasses& c = g.classes();
      CHECK(c.reps.size() == oracle::class_count(enumerate(g)));
      std::size_t total = 0;
      for (std::size_t s : c.sizes) total += s;
      CHECK(total == g.order_u64());
    }
  }

  TEST_CASE("generating_set regenerates the subgroup") {
    const SubgroupSet e = alternating(5).elements();
    const auto gens = generating_set(e);
    CHECK(gens.size() <= 3);
    CHECK(PermGroup(5, gens).order() == 60);
  }

  TEST_CASE("trivial group") {
    const PermGroup t = PermGroup::trivial(3);
    CHECK(t.is_trivial());
    CHECK(t.order() == 1);
    CHECK(t.elements().size() == 1);
  }
}

TEST_SUITE("group_ops") {
  TEST_CASE("centralizers") {
    const PermGroup s3 = symmetric(3);
    const Permutation t = cyc(3, {{0, 1, 2}});
    CHECK(centralizer(s3, t).size() == 3);
    CHECK(oracle::from(centralizer(s3, t)) == oracle::centralizer(enumerate(s3), t));
    const PermGroup s4 = symmetric(4);
    CHECK(centralizer(s4, cyc(4, {{0, 1}})).size() == 4);
    CHECK_THROWS_AS(centralizer(alternating(4), cyc(4, {{0, 1}})), Error);
  }

  TEST_CASE("centres") {
    CHECK(center(dihedral(8)).size() == 2);
    CHECK(center(symmetric(4)).size() == 1);
    for (const PermGroup& g : {dihedral(12), quaternion(16), wreath(cyclic(2), cyclic(2)).group}) {
      CHECK(oracle::from(center(g)) == oracle::center(enumerate(g)));
    }
  }

  TEST_CASE("normal closures") {
    const PermGroup s4 = symmetric(4);
    const Permutation t = cyc(4, {{0, 1}});
    const Permutation v = cyc(4, {{0, 1}, {2, 3}});
    CHECK(normal_closure(s4, std::span<const Permutation>(&t, 1)).size() == 24);
    CHECK(normal_closure(s4, std::span<const Permutation>(&v, 1)).size() == 4);
    const oracle::Set expect = oracle::normal_closure(enumerate(s4), {v});
    CHECK(oracle::from(normal_closure(s4, std::span<const Permutation>(&v, 1))) == expect);
  }

  TEST_CASE("intersection and join") {
    const SubgroupSet a4 = alternating(4).elements();
    const SubgroupSet d8 =
        PermGroup(4, {cyc(4, {{0, 1, 2, 3}}), cyc(4, {{0, 2}})}).elements();
    CHECK(subgroup_intersection(a4, d8).size() == 4);
    CHECK(subgroup_join(a4, d8).size() == 24);
    CHECK(conjugate_set(d8, cyc(4, {{1, 2}})).size() == 8);
    CHECK(conjugate_set(d8, cyc(4, {{1, 2}})) != d8);
  }

  TEST_CASE("commutator subgroups") {
    for (std::size_t n : {3, 4, 5}) {
      const PermGroup g = symmetric(n);
      const SubgroupSet d = derived_subgroup(g);
      CHECK(d.size() == alternating(n).order());
      CHECK(oracle::from(d) == oracle::commutator_subgroup(enumerate(g), enumerate(g)));
    }
    CHECK(derived_subgroup(symmetric(3)).size() == 3);
    CHECK(derived_subgroup(symmetric(4)).size() == 12);
    CHECK(commutator_subgroup(symmetric(4), alternating(4)).order() == 12);
  }

  TEST_CASE("derived series") {
    const auto s = derived_series(symmetric(4));
    REQUIRE(s.size() == 4);
    CHECK(s[1].order() == 12);
    CHECK(s[2].order() == 4);
    CHECK(s[3].order() == 1);
    CHECK(derived_series(alternating(5)).size() == 1);
  }

  TEST_CASE("upper central series") {
    auto sizes = [](const PermGroup& g) {
      std::vector<std::size_t> out;
      for (const SubgroupSet& z : upper_central_series(g)) out.push_back(z.size());
      return out;
    };
    CHECK(sizes(dihedral(8)) == std::vector<std::size_t>{1, 2, 8});
    CHECK(sizes(symmetric(3)) == std::vector<std::size_t>{1});
    CHECK(nilpotency_class(dihedral(16)) == 3);
    CHECK(nilpotency_class(cyclic(5)) == 1);
    CHECK_FALSE(nilpotency_class(symmetric(3)).has_value());
  }

  TEST_CASE("quotient") {
    const PermGroup s4 = symmetric(4);
    const Permutation v = cyc(4, {{0, 1}, {2, 3}});
    const SubgroupSet klein = normal_closure(s4, std::span<const Permutation>(&v, 1));
    const Quotient q(s4, klein);
    CHECK(q.index() == 6);
    CHECK(q.group().order() == 6);
    CHECK_FALSE(is_abelian(q.group()));
    CHECK(q.coset_of(Permutation::identity(4)) == 0);
    CHECK(q.project(v).is_identity());
    CHECK(q.preimage(SubgroupSet::trivial(q.group().degree())) == klein);
    CHECK(q.preimage(q.group().elements()).size() == 24);

    const SubgroupSet d8 = PermGroup(4, {cyc(4, {{0, 1, 2, 3}}), cyc(4, {{0, 2}})}).elements();
    CHECK_THROWS_AS(Quotient(s4, d8), Error);
  }

  TEST_CASE("predicates") {
    CHECK(is_perfect(alternating(5)));
    CHECK_FALSE(is_perfect(symmetric(4)));
    CHECK(is_soluble(symmetric(4)));
    CHECK_FALSE(is_soluble(symmetric(5)));
    CHECK(is_abelian(cyclic(6)));
    CHECK(is_cyclic(cyclic(6).elements()));
    CHECK_FALSE(is_cyclic(elementary_abelian(2, 2).elements()));
    CHECK(is_transitive(dihedral(10)));
    CHECK_FALSE(is_transitive(elementary_abelian(2, 2)));
    CHECK(is_nontrivial(cyclic(2).elements()));
    const Permutation v = cyc(4, {{0, 1}, {2, 3}});
    const PermGroup s4 = symmetric(4);
    CHECK(is_normal(s4, normal_closure(s4, std::span<const Permutation>(&v, 1))));
    CHECK_FALSE(is_normal(s4, PermGroup(4, {cyc(4, {{0, 1}})}).elements()));
  }

  TEST_CASE("minimal normal subgroups") {
    const auto s4 = minimal_normal_subgroups(symmetric(4));
    REQUIRE(s4.size() == 1);
    CHECK(s4[0].size() == 4);
    auto c6 = minimal_normal_subgroups(cyclic(6));
    REQUIRE(c6.size() == 2);
    std::vector<std::size_t> orders{c6[0].size(), c6[1].size()};
    std::sort(orders.begin(), orders.end());
    CHECK(orders == std::vector<std::size_t>{2, 3});
  }
}
