// The registered corpus and the invariants checked on each member against
// the brute-force oracle.

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "harness_internal.hpp"
#include "pgt/constructors.hpp"
#include "pgt/group_ops.hpp"
#include "pgt/group_spec.hpp"
#include "pgt/numtheory.hpp"
#include "pgt/pseudocentre.hpp"

namespace pgt::harness {

using detail::Check;
using detail::compare_sets;
using detail::Outcome;

const std::vector<std::string>& corpus_specs() {
  static const std::vector<std::string> specs = {
      "Triv",
      "C(2)", "C(3)", "C(4)", "C(5)", "C(6)", "C(7)", "C(8)", "C(9)", "C(10)", "C(12)",
      "C(15)", "C(30)",
      "D(4)", "D(6)", "D(8)", "D(10)", "D(12)", "D(16)", "D(18)", "D(20)", "D(32)",
      "Q(8)", "Q(16)", "Q(32)",
      "S(3)", "S(4)", "S(5)", "S(6)", "S(7)",
      "A(3)", "A(4)", "A(5)", "A(6)", "A(7)",
      "E(2,2)", "E(2,3)", "E(3,2)", "E(2,4)", "E(5,2)",
      "GL(2,2)", "GL(2,3)", "GL(2,5)", "GL(3,2)",
      "SL(2,2)", "SL(2,3)", "SL(2,5)", "SL(2,7)",
      "UT(2,2)", "UT(3,2)", "UT(4,2)", "UT(5,2)", "UT(6,2)",
      "UT(2,3)", "UT(3,3)", "UT(4,3)", "UT(5,3)", "UT(3,5)",
      "Tr2(2)", "Tr2(3)", "Tr2(5)", "Tr2(7)",
      "AGL(1,5)", "AGL(1,7)", "AGL(2,2)", "AGL(2,3)", "ASL(2,3)", "ASL(2,5)", "AGL(2,5)",
      "FibQ(2)", "FibQ(3)", "FibQ(5)", "FibQ(7)",
      "Wr(C(2),C(2))", "Wr(C(2),C(3))", "Wr(C(3),C(2))", "Wr(C(2),S(3))", "Wr(C(3),S(3))",
      "Wr(C(2),A(4))", "Wr(C(3),A(3))", "Wr(C(2),A(5))", "Wr(S(3),C(2))",
      "IterWr(2,2)", "IterWr(2,3)", "IterWr(3,2)",
      "Direct(S(3),C(2))", "Direct(S(3),S(3))", "Direct(D(8),C(3))", "Direct(A(4),C(2))",
      "Direct(Q(8),C(3))", "Direct(GL(2,3),C(5))",
      "SL25xF11", "AutS6",
  };
  return specs;
}

std::vector<CorpusEntry> corpus() {
  std::vector<CorpusEntry> out;
  for (const std::string& spec : corpus_specs()) out.push_back({spec, build_group(spec)});
  return out;
}

namespace {

class Tally {
 public:
  void expect(bool condition, const std::string& what) {
    ++count_;
    if (!condition) failures_.push_back(what);
  }
  void expect(const Outcome& o, const std::string& what) {
    ++count_;
    if (!o.pass) failures_.push_back(what + ": " + o.detail);
  }

  Outcome outcome(const std::string& summary) const {
    if (failures_.empty()) return {true, summary + "; " + std::to_string(count_) + " invariants"};
    std::string detail = std::to_string(failures_.size()) + " of " + std::to_string(count_) +
                         " invariants violated: ";
    for (std::size_t i = 0; i < failures_.size(); ++i) detail += (i ? "; " : "") + failures_[i];
    return {false, detail};
  }

 private:
  std::size_t count_ = 0;
  std::vector<std::string> failures_;
};

bool squarefree(std::uint64_t n) {
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % (d * d) == 0) return false;
  }
  return true;
}

bool centralizes(const SubgroupSet& a, const std::vector<Permutation>& gens) {
  return std::all_of(a.begin(), a.end(), [&](const Permutation& x) {
    return std::all_of(gens.begin(), gens.end(),
                       [&](const Permutation& g) { return commutes(x, g); });
  });
}

// Distinct normal subgroups other than 1 and G: Z, G', and the normal
// closures of the class representatives.
std::vector<SubgroupSet> sample_normals(const PermGroup& g, const SubgroupSet& centre,
                                        const SubgroupSet& derived) {
  std::vector<SubgroupSet> candidates{centre, derived};
  for (const Permutation& rep : g.classes().reps) {
    const Permutation one[] = {rep};
    candidates.push_back(normal_closure(g, one));
  }
  std::vector<SubgroupSet> out;
  for (SubgroupSet& n : candidates) {
    if (n.is_trivial() || n.size() == g.elements().size()) continue;
    if (std::find(out.begin(), out.end(), n) != out.end()) continue;
    out.push_back(std::move(n));
  }
  return out;
}

Outcome group_properties(const std::string& spec, const PermGroup& g, unsigned threads) {
  Tally t;
  const SubgroupSet& all = g.elements();
  const SubgroupSet p = pseudocentre(g, threads);
  const SubgroupSet z = center(g);
  const SubgroupSet derived = derived_subgroup(g);

  t.expect(compare_sets(p, pseudocentre_naive(g), "naive intersection"), "P = oracle");
  t.expect(z.is_subset_of(p), "Z(G) <= P(G)");
  t.expect(is_normal(g, p), "P(G) normal");
  t.expect(all.size() == 1 || p.size() > 1, "P(G) nontrivial");

  for (const SubgroupSet& n : minimal_normal_subgroups(g)) {
    t.expect(n.is_subset_of(p), "minimal normal subgroup of order " + std::to_string(n.size()) +
                                    " inside P(G)");
  }

  const std::vector<PermGroup> ds = derived_series(g);
  const SubgroupSet second_derived = ds[std::min<std::size_t>(2, ds.size() - 1)].elements();
  t.expect(commutator_subgroup(p, p).is_subset_of(second_derived), "P(G)' <= G''");

  const std::vector<SubgroupSet> ucs = upper_central_series(g);
  const SubgroupSet& z2 = ucs[std::min<std::size_t>(2, ucs.size() - 1)];
  t.expect(centralizes(z2, generating_set(p)), "[Z_2(G), P(G)] = 1");

  const bool pseudocentral = p.size() == all.size();
  if (pseudocentral && is_soluble(g)) t.expect(is_abelian(g), "soluble pseudocentral => abelian");
  const auto nil = nilpotency_class(g);
  if (nil && *nil <= 2) t.expect(p == z, "class <= 2 => P(G) = Z(G)");
  if (squarefree(all.size())) t.expect(is_cyclic(p), "squarefree order => P(G) cyclic");

  const std::vector<SubgroupSet> normals = sample_normals(g, z, derived);
  for (const SubgroupSet& n : normals) {
    const Quotient q(g, n);
    t.expect(q.project(p).is_subset_of(pseudocentre(q.group(), threads)),
             "P(G)N/N <= P(G/N) for |N| = " + std::to_string(n.size()));
  }

  // For abelian normal A and g of order k modulo C_G(A): A^k <= C_G(g)^G.
  std::vector<SubgroupSet> abelian_normals{z};
  for (const SubgroupSet& n : normals) {
    if (is_abelian(n)) abelian_normals.push_back(n);
  }
  for (const Permutation& rep : g.classes().reps) {
    const SubgroupSet closure = normal_closure(g, centralizer(g, rep));
    for (const SubgroupSet& a : abelian_normals) {
      const std::vector<Permutation> a_gens = generating_set(a);
      std::int64_t k = 1;
      Permutation x = rep;
      while (!std::all_of(a_gens.begin(), a_gens.end(),
                          [&](const Permutation& y) { return commutes(x, y); })) {
        x = compose(x, rep);
        ++k;
      }
      const bool ok = std::all_of(a.begin(), a.end(),
                                  [&](const Permutation& y) { return closure.contains(power(y, k)); });
      t.expect(ok, "A^k <= C_G(g)^G for |A| = " + std::to_string(a.size()) + ", g = " +
                       rep.to_cycle_string());
    }
  }

  const GroupSpec parsed = parse_spec(spec);
  if (parsed.kind == GroupSpec::Kind::Direct) {
    const PermGroup a = build_group(parsed.operands[0]);
    const PermGroup b = build_group(parsed.operands[1]);
    const DirectProduct d = direct_product(a, b);
    const SubgroupSet expected =
        subgroup_join(d.embed_left(pseudocentre(a)), d.embed_right(pseudocentre(b)));
    t.expect(compare_sets(p, expected, "P(A) x P(B)"), "P(A x B) = P(A) x P(B)");
  }

  std::ostringstream summary;
  summary << "|G| = " << all.size() << ", |P| = " << p.size() << ", " << normals.size()
          << " quotients";
  return t.outcome(summary.str());
}

}  // namespace

namespace detail {

std::vector<Check> property_checks(const Options& options) {
  std::vector<Check> checks;
  const unsigned threads = options.threads;
  const std::uint64_t limit = options.property_order_limit;

  // Orders come from the chain, so nothing large is enumerated here.
  std::vector<std::string> eligible;
  for (const std::string& spec : corpus_specs()) {
    if (build_group(spec).order() <= limit) eligible.push_back(spec);
  }

  for (const std::string& spec : eligible) {
    checks.push_back({"prop-" + spec, 17, "pseudocentre invariants on " + spec, "properties",
                      [spec, threads] { return group_properties(spec, build_group(spec), threads); }});
  }

  for (std::size_t k : {2, 3}) {
    checks.push_back(
        {"central-product-C" + std::to_string(k), 17,
         "P(H x C(" + std::to_string(k) + ")) = P(H) Z for corpus H of order <= 200", "properties",
         [eligible, k, threads]() -> Outcome {
           std::size_t tested = 0;
           const PermGroup c = cyclic(k);
           for (const std::string& spec : eligible) {
             const PermGroup h = build_group(spec);
             if (h.order() > 200) continue;
             const DirectProduct d = direct_product(h, c);
             const SubgroupSet expected =
                 subgroup_join(d.embed_left(pseudocentre(h, threads)), d.embed_right(c.elements()));
             Outcome o = compare_sets(pseudocentre(d.group, threads), expected, "P(H) Z");
             if (!o.pass) return {false, spec + ": " + o.detail};
             ++tested;
           }
           return {true, std::to_string(tested) + " groups H"};
         }});
  }

  checks.push_back({"relabel", 17, "P(G^x) = P(G)^x for 10 random relabelings", "properties",
                    [eligible, threads]() -> Outcome {
                      std::mt19937 rng(314159);
                      std::uniform_int_distribution<std::size_t> pick(0, eligible.size() - 1);
                      std::string tried;
                      for (int i = 0; i < 10; ++i) {
                        const std::string& spec = eligible[pick(rng)];
                        const PermGroup g = build_group(spec);
                        std::vector<Point> images(g.degree());
                        std::iota(images.begin(), images.end(), Point{0});
                        std::shuffle(images.begin(), images.end(), rng);
                        const Permutation x(images);
                        std::vector<Permutation> gens;
                        for (const Permutation& s : g.generators()) gens.push_back(conjugate(s, x));
                        const PermGroup gx(g.degree(), std::move(gens));
                        Outcome o = compare_sets(pseudocentre(gx, threads),
                                                 conjugate_set(pseudocentre(g, threads), x), "P(G)^x");
                        if (!o.pass) return {false, spec + ": " + o.detail};
                        tried += (i ? ", " : "") + spec;
                      }
                      return {true, tried};
                    }});
  return checks;
}

}  // namespace detail

}  // namespace pgt::harness
