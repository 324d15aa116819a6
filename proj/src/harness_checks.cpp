// Named checks for the finite statements: pseudocentres of symmetric,
// linear, affine, unitriangular and wreath groups, series lengths, and the
// number-theoretic identities.

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "harness_internal.hpp"
#include "pgt/constructors.hpp"
#include "pgt/error.hpp"
#include "pgt/group_ops.hpp"
#include "pgt/numtheory.hpp"
#include "pgt/pseudocentre.hpp"

namespace pgt::harness {

using detail::all_of;
using detail::Check;
using detail::compare_sets;
using detail::compare_value;
using detail::holds;
using detail::Outcome;
using detail::subgroup_generated;

namespace {

std::string join_sizes(const std::vector<std::uint64_t>& v) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i];
  out << "]";
  return out.str();
}

SubgroupSet elements_of(const PermGroup& g) { return g.elements(); }

SubgroupSet join_groups(const PermGroup& a, const PermGroup& b) {
  std::vector<Permutation> gens(a.generators().begin(), a.generators().end());
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return subgroup_generated(a.degree(), std::move(gens));
}

// Elements of 2-power order: O_2 whenever the Sylow 2-subgroup is normal.
SubgroupSet two_elements(const PermGroup& g) {
  std::vector<Permutation> out;
  for (const Permutation& x : g.elements()) {
    if (std::has_single_bit(x.order())) out.push_back(x);
  }
  return SubgroupSet::from_elements(g.degree(), std::move(out));
}

// Orbit of x under conjugation by G.
std::size_t conjugacy_class_size(const PermGroup& g, const Permutation& x) {
  std::set<Permutation> seen{x};
  std::vector<Permutation> stack{x};
  while (!stack.empty()) {
    Permutation y = std::move(stack.back());
    stack.pop_back();
    for (const Permutation& s : g.generators()) {
      Permutation z = conjugate(y, s);
      if (seen.insert(z).second) stack.push_back(std::move(z));
    }
  }
  return seen.size();
}

// Criterion 1-3, 14, 16.
void add_core(std::vector<Check>& checks, unsigned threads) {
  for (std::size_t n = 3; n <= 7; ++n) {
    checks.push_back({"sym-" + std::to_string(n), 1,
                      "P(Sym(" + std::to_string(n) + ")) = Alt(" + std::to_string(n) + ")", "core",
                      [n, threads] {
                        return compare_sets(pseudocentre(symmetric(n), threads),
                                            alternating(n).elements(), "Alt(n)");
                      }});
  }
  checks.push_back({"alt-4", 2, "P(Alt(4)) = Klein four-group", "core", [threads] {
                      const SubgroupSet klein = SubgroupSet::from_elements(
                          4, {Permutation::identity(4), Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                              Permutation::from_cycles(4, {{0, 2}, {1, 3}}),
                              Permutation::from_cycles(4, {{0, 3}, {1, 2}})});
                      return compare_sets(pseudocentre(alternating(4), threads), klein, "V4");
                    }});
  checks.push_back({"dihedral-8", 3, "P(D(8)) = Z(D(8)), order 2", "core", [threads] {
                      const PermGroup d8 = dihedral(8);
                      const SubgroupSet p = pseudocentre(d8, threads);
                      return all_of({compare_sets(p, center(d8), "Z(D8)"),
                                     compare_value(p.size(), 2, "|P|")});
                    }});
  checks.push_back({"quaternion-8", 3, "P(Q(8)) has order 2 (brute-force oracle)", "core",
                    [threads] {
                      const PermGroup q8 = quaternion(8);
                      const SubgroupSet p = pseudocentre(q8, threads);
                      return all_of({compare_sets(p, pseudocentre_naive(q8), "oracle"),
                                     compare_value(p.size(), 2, "|P|")});
                    }});
  for (std::size_t k = 2; k <= 4; ++k) {
    const std::size_t order = std::size_t{1} << (k + 1);
    const std::string name = "D(" + std::to_string(order) + ")";
    checks.push_back({"dihedral-series-" + std::to_string(order), 14,
                      name + ": pseudonilpotent class 2, nilpotency class " + std::to_string(k),
                      "core", [order, k, threads] {
                        const PermGroup d = dihedral(order);
                        const PseudoSeries s = upper_pseudocentral_series(d, kDefaultSeriesSteps,
                                                                          threads);
                        const auto nil = nilpotency_class(d);
                        std::vector<Outcome> parts{
                            holds(s.reaches_group, "series " + join_sizes(s.sizes())),
                            compare_value(s.terms.size() - 1, 2, "pseudonilpotent class"),
                            compare_value(nil.value_or(0), k, "nilpotency class")};
                        if (order == 16) {
                          // P(D16) is the subgroup of squares.
                          std::vector<Permutation> squares;
                          for (const Permutation& x : d.elements()) squares.push_back(compose(x, x));
                          parts.push_back(compare_sets(
                              s.terms[1], SubgroupSet::from_elements(d.degree(), squares),
                              "squares of D16"));
                        }
                        return all_of(std::move(parts));
                      }});
  }
  checks.push_back({"aut-sym6", 16, "Aut(Sym(6)) on 720 points: order 1440, P = inner Alt(6)",
                    "core", [threads] {
                      const AutSym6 a = aut_sym6();
                      return all_of({compare_value(a.group.order_u64(), 1440, "|Aut(Sym(6))|"),
                                     compare_sets(pseudocentre(a.group, threads),
                                                  a.inner_alt.elements(), "inner Alt(6)")});
                    }});
}

// Criterion 4-6, 8, 9, 12.
void add_matrix(std::vector<Check>& checks, unsigned threads) {
  checks.push_back({"gl-2-3", 4, "P(GL(2,3)) = SL(2,3)", "matrix", [threads] {
                      return compare_sets(pseudocentre(gl(2, 3).group, threads),
                                          sl(2, 3).group.elements(), "SL(2,3)");
                    }});
  checks.push_back({"sl-2-3", 4, "P(SL(2,3)) = O_2(SL(2,3)), order 8", "matrix", [threads] {
                      const PermGroup s = sl(2, 3).group;
                      const SubgroupSet o2 = two_elements(s);
                      return all_of({compare_sets(pseudocentre(s, threads), o2, "O_2"),
                                     compare_value(o2.size(), 8, "|O_2|")});
                    }});
  checks.push_back({"gl-2-5", 5, "P(GL(2,5)) = Z * SL(2,5), order 240", "matrix", [threads] {
                      const PermGroup g = gl(2, 5).group;
                      const SubgroupSet zs =
                          subgroup_join(center(g), sl(2, 5).group.elements());
                      return all_of({compare_sets(pseudocentre(g, threads), zs, "Z*SL(2,5)"),
                                     compare_value(zs.size(), 240, "|Z*SL|")});
                    }});
  checks.push_back({"sl-2-5", 5, "SL(2,5) is pseudocentral", "matrix", [threads] {
                      const PermGroup s = sl(2, 5).group;
                      return compare_sets(pseudocentre(s, threads), s.elements(), "SL(2,5)");
                    }});
  checks.push_back({"gl-3-2", 5, "GL(3,2) is pseudocentral", "matrix", [threads] {
                      const PermGroup g = gl(3, 2).group;
                      return compare_sets(pseudocentre(g, threads), g.elements(), "GL(3,2)");
                    }});
  checks.push_back({"pgl-2-5", 6, "P(GL(2,5)/Z) = SZ/Z", "matrix", [threads] {
                      const PermGroup g = gl(2, 5).group;
                      const Quotient q(g, center(g));
                      return compare_sets(pseudocentre(q.group(), threads),
                                          q.project(sl(2, 5).group.elements()), "image of SL");
                    }});
  checks.push_back({"tr2-3", 8, "P(Tr2(3)) = Z x UT(2,3), order 6", "matrix", [threads] {
                      const PermGroup t = tr2(3).group;
                      const SubgroupSet expected = subgroup_join(center(t), ut(2, 3).group.elements());
                      return all_of({compare_sets(pseudocentre(t, threads), expected, "Z x UT(2,3)"),
                                     compare_value(expected.size(), 6, "|Z x UT|")});
                    }});
  checks.push_back({"asl-2-5", 9, "ASL(2,5) is pseudocentral, order 3000", "matrix", [threads] {
                      const PermGroup g = affine_sl(2, 5).group;
                      return all_of({compare_value(g.order_u64(), 3000, "|ASL(2,5)|"),
                                     compare_sets(pseudocentre(g, threads), g.elements(), "ASL(2,5)")});
                    }});
  checks.push_back({"agl-2-5", 9, "P(AGL(2,5)) = SL(2,5) x| V", "matrix", [threads] {
                      return compare_sets(pseudocentre(affine_gl(2, 5).group, threads),
                                          affine_sl(2, 5).group.elements(), "SL x| V");
                    }});
  checks.push_back({"agl-2-2", 9, "P(AGL(2,2)) = Alt(3) x| V, order 12", "matrix", [threads] {
                      const MatrixGroup a = affine_gl(2, 2);
                      const PermGroup v = a.translations();
                      std::vector<Permutation> gens(v.generators().begin(), v.generators().end());
                      gens.push_back(a.to_permutation(FpMatrix(2, 2, {0, 1, 1, 1})));
                      const SubgroupSet expected = subgroup_generated(a.group.degree(), gens);
                      return all_of({compare_sets(pseudocentre(a.group, threads), expected, "Alt(3) x| V"),
                                     compare_value(expected.size(), 12, "|Alt(3) x| V|")});
                    }});
  checks.push_back({"asl-2-3", 9, "P(ASL(2,3)) = Q8 x| V, order 72", "matrix", [threads] {
                      const MatrixGroup a = affine_sl(2, 3);
                      const PermGroup v = a.translations();
                      std::vector<Permutation> gens(v.generators().begin(), v.generators().end());
                      // O_2(SL(2,3)): determinant 1 and order dividing 4.
                      for (std::int64_t e = 0; e < 81; ++e) {
                        FpMatrix m(3, 2, {e % 3, e / 3 % 3, e / 9 % 3, e / 27});
                        if (m.determinant() == 1 && 4 % matrix_order(m) == 0) {
                          gens.push_back(a.to_permutation(m));
                        }
                      }
                      const SubgroupSet expected = subgroup_generated(a.group.degree(), gens);
                      return all_of({compare_sets(pseudocentre(a.group, threads), expected, "Q8 x| V"),
                                     compare_value(expected.size(), 72, "|Q8 x| V|")});
                    }});
  checks.push_back({"agl-2-3", 9, "P(AGL(2,3)) = SL(2,3) x| V, order 216", "matrix", [threads] {
                      const SubgroupSet expected = affine_sl(2, 3).group.elements();
                      return all_of({compare_sets(pseudocentre(affine_gl(2, 3).group, threads),
                                                  expected, "SL(2,3) x| V"),
                                     compare_value(expected.size(), 216, "|SL(2,3) x| V|")});
                    }});
  checks.push_back(
      {"sl25-f11", 12,
       "SL(2,5) x| F11^2 is perfect and P(G) <= N = F11^2; exact P(G) recorded", "matrix",
       [threads] {
         const MatrixGroup m = sl25_on_f11sq();
         const PermGroup n_group = m.translations();
         const SubgroupSet n = n_group.elements();
         const SubgroupSet p = pseudocentre(m.group, threads);
         // N is minimal normal when G permutes its nonidentity elements transitively.
         const bool minimal = conjugacy_class_size(m.group, n_group.generators()[0]) == n.size() - 1;
         std::vector<Outcome> parts{
             compare_value(m.group.order_u64(), 14520, "|G|"),
             holds(is_perfect(m.group), "G = G'"),
             holds(p.is_subset_of(n), "P(G) <= N"),
             holds(minimal, "N minimal normal"),
             compare_sets(p, n, "N")};
         return all_of(std::move(parts));
       }});
}

// Criterion 7.
void add_mclain(std::vector<Check>& checks, unsigned threads) {
  auto add = [&](std::size_t n, std::uint32_t p) {
    const std::string name = "UT(" + std::to_string(n) + "," + std::to_string(p) + ")";
    checks.push_back({"ut-" + std::to_string(n) + "-" + std::to_string(p), 7,
                      "P(" + name + ") = Z_" + std::to_string(n / 2) + "(" + name + ")", "mclain",
                      [n, p, threads] {
                        const PermGroup g = ut(n, p).group;
                        const std::vector<SubgroupSet> z = upper_central_series(g);
                        const SubgroupSet& expected = z[std::min(n / 2, z.size() - 1)];
                        return compare_sets(pseudocentre(g, threads), expected,
                                            "Z_" + std::to_string(n / 2));
                      }});
  };
  for (std::size_t n = 2; n <= 6; ++n) add(n, 2);
  for (std::size_t n = 2; n <= 5; ++n) add(n, 3);
}

Outcome wreath_case_outcome(std::uint32_t p, std::size_t n, WreathTop top, unsigned threads) {
  const WreathCase predicted = predict_wreath_case(p, n, top);
  const bool alt = top == WreathTop::Alt;
  const PermGroup k = alt ? alternating(n) : symmetric(n);
  const WreathProduct w = wreath(cyclic(p), k);
  // Refuse up front rather than after building the element list.
  if (w.group.order() > w.group.enumeration_cap()) {
    throw CapacityError(w.group.order_u64(), w.group.enumeration_cap());
  }
  const PermGroup alt_top = w.lift_top(alternating(n));
  const PermGroup alt_b = commutator_subgroup(alt_top, w.base);
  SubgroupSet expected;
  switch (predicted) {
    case WreathCase::Whole: expected = w.group.elements(); break;
    case WreathCase::Base: expected = w.base.elements(); break;
    case WreathCase::TopCommutator:
      expected = w.top_base_commutator.elements();
      break;
    case WreathCase::TopTimesCommutator:
      expected = join_groups(w.top, w.top_base_commutator);
      break;
    case WreathCase::KleinTimesCommutator: {
      const PermGroup v4(4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                             Permutation::from_cycles(4, {{0, 2}, {1, 3}})});
      expected = join_groups(w.lift_top(v4), w.top_base_commutator);
      break;
    }
    case WreathCase::AltTimesBase: expected = join_groups(alt_top, w.base); break;
    case WreathCase::AltTimesCommutator:
      expected = join_groups(alt_top, alt_b);
      break;
    case WreathCase::AltCommutator: expected = elements_of(alt_b); break;
  }
  return compare_sets(pseudocentre(w.group, threads), expected,
                      describe(predicted));
}

// Criterion 10, 11, 15.
void add_wreath(std::vector<Check>& checks, unsigned threads) {
  struct Case {
    std::uint32_t p;
    std::size_t n;
    WreathTop top;
  };
  const std::vector<Case> cases = {
      {2, 5, WreathTop::Alt}, {2, 7, WreathTop::Alt}, {3, 5, WreathTop::Alt},
      {5, 5, WreathTop::Alt}, {7, 5, WreathTop::Alt}, {5, 4, WreathTop::Alt},
      {3, 4, WreathTop::Alt}, {3, 3, WreathTop::Alt}, {2, 3, WreathTop::Alt},
      {2, 4, WreathTop::Alt}, {2, 6, WreathTop::Alt}, {2, 3, WreathTop::Sym},
      {2, 4, WreathTop::Sym}, {3, 3, WreathTop::Sym}, {5, 3, WreathTop::Sym},
      {3, 4, WreathTop::Sym}, {2, 5, WreathTop::Sym},
  };
  for (const Case& c : cases) {
    const bool alt = c.top == WreathTop::Alt;
    const std::string name = "C(" + std::to_string(c.p) + ") wr " + (alt ? "Alt(" : "Sym(") +
                             std::to_string(c.n) + ")";
    Check check;
    check.id = std::string("wr-") + (alt ? "alt" : "sym") + "-" + std::to_string(c.p) + "-" +
               std::to_string(c.n);
    check.criterion = alt ? 10 : 11;
    check.claim = "P(" + name + ") = " + describe(predict_wreath_case(c.p, c.n, c.top));
    check.suite = "wreath";
    check.run = [c, threads] { return wreath_case_outcome(c.p, c.n, c.top, threads); };
    checks.push_back(std::move(check));
  }
  for (std::size_t depth = 2; depth <= 3; ++depth) {
    checks.push_back({"iterwr-2-" + std::to_string(depth), 15,
                      "P_" + std::to_string(depth - 1) + "(G_" + std::to_string(depth) +
                          ") != G_" + std::to_string(depth) + " for G_n = IterWr(2,n)",
                      "wreath", [depth, threads] {
                        const PermGroup g = iterated_wreath(2, depth);
                        const PseudoSeries s = upper_pseudocentral_series(g, kDefaultSeriesSteps,
                                                                          threads);
                        const std::uint64_t p_prev = s.terms[std::min(depth - 1, s.terms.size() - 1)].size();
                        return all_of({holds(s.reaches_group, "series " + join_sizes(s.sizes())),
                                       holds(p_prev != g.order_u64(),
                                             "|P_" + std::to_string(depth - 1) + "| = " +
                                                 std::to_string(p_prev) + " < " +
                                                 std::to_string(g.order_u64()))});
                      }});
  }
}

nt::Mat2 random_unimodular(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<int> steps(1, 4);
  nt::Mat2 m{1, 0, 0, 1};
  const int count = steps(rng);
  for (int i = 0; i < count; ++i) {
    const int a = entry(rng);
    const nt::Mat2 upper{1, a, 0, 1};
    const nt::Mat2 lower{1, 0, entry(rng), 1};
    m = nt::mat2_mul(nt::mat2_mul(m, upper), lower);
  }
  return m;
}

// Criterion 13, 18.
void add_fib(std::vector<Check>& checks, const Options& options) {
  struct FibCase {
    std::uint32_t p;
    std::uint64_t order;
    std::uint64_t p_order;
  };
  for (const FibCase c : {FibCase{2, 12, 4}, FibCase{3, 72, 9}}) {
    const std::string name = "FibQ(" + std::to_string(c.p) + ")";
    checks.push_back({"fibq-" + std::to_string(c.p), 13,
                      name + ": order " + std::to_string(c.order) + ", P = A/A^p, class 2", "fib",
                      [c, threads = options.threads] {
                        const FibQuotient f = fib_quotient(c.p);
                        const PermGroup& g = f.affine.group;
                        const SubgroupSet a = f.affine.translations().elements();
                        const PseudoSeries s = upper_pseudocentral_series(g, kDefaultSeriesSteps,
                                                                          threads);
                        return all_of({compare_value(g.order_u64(), c.order, "|G|"),
                                       compare_sets(pseudocentre(g, threads), a, "A/A^p"),
                                       compare_value(a.size(), c.p_order, "|A/A^p|"),
                                       holds(s.reaches_group && s.terms.size() == 3,
                                             "class 2, series " + join_sizes(s.sizes()))});
                      }});
  }
  checks.push_back({"d-exceeds-t-squared", 18, "For T in 2..5 and M <= 25, some N in (M, M+10] has D(N) > T^2",
                    "fib", [] {
                      std::ostringstream out;
                      for (std::uint64_t t = 2; t <= 5; ++t) {
                        for (std::uint64_t m = 1; m <= 25; ++m) {
                          if (nt::find_d_exceeding(t, m, 10) == 0) {
                            out << "no N for T=" << t << ", M=" << m;
                            return Outcome{false, out.str()};
                          }
                        }
                      }
                      return Outcome{true, "100 (T, M) pairs"};
                    }});
  checks.push_back({"chebyshev", 18,
                    "trace(M^n) and M^n agree with the Chebyshev recurrences (100 random trials)",
                    "fib", [] {
                      std::mt19937_64 rng(20240607);
                      std::uniform_int_distribution<std::uint64_t> exponent(1, 20);
                      const std::uint64_t primes[] = {2, 3, 5, 7, 11, 13};
                      for (int trial = 0; trial < 100; ++trial) {
                        const nt::Mat2 m = random_unimodular(rng);
                        const std::uint64_t n = exponent(rng);
                        const nt::TraceResult t = nt::chebyshev_trace(m, n);
                        const nt::PowerResult pw = nt::chebyshev_power(m, n);
                        const std::uint64_t p = primes[trial % 6];
                        const nt::TraceResult tm = nt::chebyshev_trace_mod(m, n, p);
                        const nt::PowerResult pm = nt::chebyshev_power_mod(m, n, p);
                        if (t.by_power != t.by_recurrence || pw.by_power != pw.by_recurrence ||
                            tm.by_power != tm.by_recurrence || pm.by_power != pm.by_recurrence) {
                          return Outcome{false, "mismatch at trial " + std::to_string(trial) +
                                                    ", n = " + std::to_string(n)};
                        }
                      }
                      return Outcome{true, "100 trials over Z and F_p"};
                    }});
  checks.push_back({"fib-prime-square-scan", 18,
                    "scan primes p <= bound for f(p^2) = 1, f(p^2-1) = 0 mod p^2 (report only)",
                    "fib", [bound = options.remark_bound, threads = options.threads] {
                      const nt::RemarkScan scan = nt::remark_scan(bound, threads);
                      std::ostringstream out;
                      out << scan.primes_tested << " primes <= " << scan.bound << ", witnesses: ";
                      if (scan.witnesses.empty()) out << "none";
                      for (std::size_t i = 0; i < scan.witnesses.size(); ++i) {
                        out << (i ? ", " : "") << scan.witnesses[i].p;
                      }
                      return Outcome{true, out.str()};
                    }});
}

}  // namespace

const char* describe(WreathCase c) noexcept {
  switch (c) {
    case WreathCase::Whole: return "G";
    case WreathCase::Base: return "B";
    case WreathCase::TopCommutator: return "[K,B]";
    case WreathCase::TopTimesCommutator: return "K x| [K,B]";
    case WreathCase::KleinTimesCommutator: return "V4 x| [K,B]";
    case WreathCase::AltTimesBase: return "Alt(n) x| B";
    case WreathCase::AltTimesCommutator: return "Alt(n) x| [Alt(n),B]";
    case WreathCase::AltCommutator: return "[Alt(n),B]";
  }
  return "?";
}

WreathCase predict_wreath_case(std::uint32_t p, std::size_t n, WreathTop top) {
  if (!nt::is_prime(p)) throw Error(ErrorCode::InvalidParameter, "p must be prime");
  if (n < 3) throw Error(ErrorCode::InvalidParameter, "n must be at least 3");
  const bool divides = n % p == 0;
  if (top == WreathTop::Sym) {
    if (p > n) return WreathCase::Base;
    if (p == n) return WreathCase::AltCommutator;
    return divides ? WreathCase::AltTimesCommutator : WreathCase::AltTimesBase;
  }
  if (n == 3) return p == 3 ? WreathCase::TopCommutator : WreathCase::Base;
  if (n == 4) return p == 2 ? WreathCase::KleinTimesCommutator : WreathCase::Base;
  if (p > n || p + 1 == n) return WreathCase::Base;
  if (p == n) return WreathCase::TopCommutator;
  return divides ? WreathCase::TopTimesCommutator : WreathCase::Whole;
}

CheckResult check_wreath_case(std::uint32_t p, std::size_t n, WreathTop top, unsigned threads) {
  const bool alt = top == WreathTop::Alt;
  Check check{std::string("wr-") + (alt ? "alt" : "sym") + "-" + std::to_string(p) + "-" +
                  std::to_string(n),
              alt ? 10 : 11,
              std::string("P(G) = ") + describe(predict_wreath_case(p, n, top)), "wreath",
              [=] { return wreath_case_outcome(p, n, top, threads); }};
  return detail::run_check(check);
}

namespace detail {

std::vector<Check> criterion_checks(const Options& options) {
  std::vector<Check> checks;
  add_core(checks, options.threads);
  add_matrix(checks, options.threads);
  add_mclain(checks, options.threads);
  add_wreath(checks, options.threads);
  add_fib(checks, options);
  std::stable_sort(checks.begin(), checks.end(),
                   [](const Check& a, const Check& b) { return a.criterion < b.criterion; });
  return checks;
}

}  // namespace detail

}  // namespace pgt::harness
