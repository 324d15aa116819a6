#include "pgt/pgt.h"

#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <new>
#include <sstream>
#include <string>

#include <json.hpp>

#include "pgt/error.hpp"
#include "pgt/group_ops.hpp"
#include "pgt/group_spec.hpp"
#include "pgt/harness.hpp"
#include "pgt/numtheory.hpp"
#include "pgt/perm_group.hpp"
#include "pgt/pseudocentre.hpp"
#include "pgt/report.hpp"

struct pgt_group {
  pgt::PermGroup group;
};

struct pgt_subgroup {
  pgt::SubgroupSet set;
};

namespace {

struct LastError {
  std::string message;
  std::size_t offset = SIZE_MAX;
};

thread_local LastError last_error;

pgt_status fail(pgt_status status, std::string message, std::size_t offset = SIZE_MAX) {
  last_error.message = std::move(message);
  last_error.offset = offset;
  return status;
}

// Runs `body` and converts every exception into a status; nothing throws
// across the C boundary.
template <class F>
pgt_status guarded(F&& body) {
  try {
    last_error = {};
    body();
    return PGT_OK;
  } catch (const pgt::SpecError& e) {
    return fail(static_cast<pgt_status>(e.code()), e.what(), e.offset());
  } catch (const pgt::Error& e) {
    return fail(static_cast<pgt_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(PGT_ERR_CAPACITY, "out of memory");
  } catch (const std::exception& e) {
    return fail(PGT_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(PGT_ERR_INTERNAL, "unknown error");
  }
}

#define PGT_REQUIRE(ptr)                                               \
  do {                                                                 \
    if ((ptr) == nullptr) return fail(PGT_ERR_NULL_ARGUMENT, #ptr " is null"); \
  } while (0)

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

pgt::Permutation permutation_from(std::size_t degree, const std::uint16_t* images) {
  return pgt::Permutation(std::vector<pgt::Point>(images, images + degree));
}

pgt_status make_subgroup(pgt::SubgroupSet set, pgt_subgroup** out) {
  *out = new pgt_subgroup{std::move(set)};
  return PGT_OK;
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const std::string& s : items) out += (out.empty() ? "" : " ") + s;
  return out;
}

}  // namespace

extern "C" {

const char* pgt_version(void) { return "1.0.0"; }

const char* pgt_status_string(pgt_status status) {
  switch (status) {
    case PGT_OK: return "ok";
    case PGT_ERR_INVALID_PARAMETER: return "invalid parameter";
    case PGT_ERR_DEGREE_MISMATCH: return "degree mismatch";
    case PGT_ERR_CAPACITY: return "capacity exceeded";
    case PGT_ERR_NOT_A_MEMBER: return "not a member";
    case PGT_ERR_NOT_NORMAL: return "not normal";
    case PGT_ERR_SYNTAX: return "syntax error";
    case PGT_ERR_SEMANTIC: return "semantic error";
    case PGT_ERR_NULL_ARGUMENT: return "null argument";
    case PGT_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* pgt_last_error(void) { return last_error.message.c_str(); }

size_t pgt_last_error_offset(void) { return last_error.offset; }

void pgt_string_free(char* s) { std::free(s); }

uint64_t pgt_enumeration_cap(void) { return pgt::default_enumeration_cap(); }

pgt_status pgt_set_enumeration_cap(uint64_t cap) {
  return guarded([&] { pgt::set_default_enumeration_cap(cap); });
}

pgt_status pgt_spec_canonical(const char* text, char** out) {
  PGT_REQUIRE(text);
  PGT_REQUIRE(out);
  return guarded([&] { *out = duplicate(pgt::render(pgt::parse_spec(text))); });
}

pgt_status pgt_spec_warnings(const char* text, char** out) {
  PGT_REQUIRE(text);
  PGT_REQUIRE(out);
  return guarded([&] {
    std::string joined;
    for (const std::string& w : pgt::spec_warnings(pgt::parse_spec(text))) joined += w + "\n";
    *out = duplicate(joined);
  });
}

const char* pgt_spec_families(void) {
  static const std::string names = join(pgt::spec_families());
  return names.c_str();
}

pgt_status pgt_group_from_spec(const char* text, pgt_group** out) {
  PGT_REQUIRE(text);
  PGT_REQUIRE(out);
  return guarded([&] { *out = new pgt_group{pgt::build_group(std::string_view(text))}; });
}

pgt_status pgt_group_from_generators(size_t degree, const uint16_t* images, size_t count,
                                     pgt_group** out) {
  PGT_REQUIRE(out);
  if (count > 0) PGT_REQUIRE(images);
  return guarded([&] {
    if (degree == 0) throw pgt::Error(pgt::ErrorCode::InvalidParameter, "degree must be positive");
    std::vector<pgt::Permutation> gens;
    for (size_t i = 0; i < count; ++i) gens.push_back(permutation_from(degree, images + i * degree));
    *out = new pgt_group{pgt::PermGroup(degree, std::move(gens))};
  });
}

pgt_status pgt_group_from_perm_list(const char* text, pgt_group** out) {
  PGT_REQUIRE(text);
  PGT_REQUIRE(out);
  return guarded([&] { *out = new pgt_group{pgt::parse_perm_list(text)}; });
}

void pgt_group_free(pgt_group* group) { delete group; }

size_t pgt_group_degree(const pgt_group* group) { return group ? group->group.degree() : 0; }

pgt_status pgt_group_order(const pgt_group* group, char** out) {
  PGT_REQUIRE(group);
  PGT_REQUIRE(out);
  return guarded([&] { *out = duplicate(group->group.order().str()); });
}

pgt_status pgt_group_is_transitive(const pgt_group* group, int* out) {
  PGT_REQUIRE(group);
  PGT_REQUIRE(out);
  return guarded([&] { *out = pgt::is_transitive(group->group) ? 1 : 0; });
}

pgt_status pgt_pseudocentre(const pgt_group* group, unsigned threads, pgt_subgroup** out) {
  PGT_REQUIRE(group);
  PGT_REQUIRE(out);
  return guarded([&] { make_subgroup(pgt::pseudocentre(group->group, threads), out); });
}

pgt_status pgt_pseudocentre_naive(const pgt_group* group, pgt_subgroup** out) {
  PGT_REQUIRE(group);
  PGT_REQUIRE(out);
  return guarded([&] { make_subgroup(pgt::pseudocentre_naive(group->group), out); });
}

pgt_status pgt_centre(const pgt_group* group, pgt_subgroup** out) {
  PGT_REQUIRE(group);
  PGT_REQUIRE(out);
  return guarded([&] { make_subgroup(pgt::center(group->group), out); });
}

pgt_status pgt_derived_subgroup(const pgt_group* group, pgt_subgroup** out) {
  PGT_REQUIRE(group);
  PGT_REQUIRE(out);
  return guarded([&] { make_subgroup(pgt::derived_subgroup(group->group), out); });
}

void pgt_subgroup_free(pgt_subgroup* subgroup) { delete subgroup; }

size_t pgt_subgroup_order(const pgt_subgroup* subgroup) {
  return subgroup ? subgroup->set.size() : 0;
}

size_t pgt_subgroup_degree(const pgt_subgroup* subgroup) {
  return subgroup ? subgroup->set.degree() : 0;
}

pgt_status pgt_subgroup_element(const pgt_subgroup* subgroup, size_t index, uint16_t* images) {
  PGT_REQUIRE(subgroup);
  PGT_REQUIRE(images);
  if (index >= subgroup->set.size()) {
    return fail(PGT_ERR_INVALID_PARAMETER, "element index out of range");
  }
  const auto src = subgroup->set[index].images();
  std::copy(src.begin(), src.end(), images);
  return PGT_OK;
}

pgt_status pgt_subgroup_contains(const pgt_subgroup* subgroup, const uint16_t* images, int* out) {
  PGT_REQUIRE(subgroup);
  PGT_REQUIRE(images);
  PGT_REQUIRE(out);
  return guarded([&] {
    *out = subgroup->set.contains(permutation_from(subgroup->set.degree(), images)) ? 1 : 0;
  });
}

pgt_status pgt_series(const pgt_group* group, size_t max_steps, unsigned threads,
                      uint64_t* sizes, size_t capacity, size_t* length, int* reaches_group) {
  PGT_REQUIRE(group);
  PGT_REQUIRE(length);
  if (capacity > 0) PGT_REQUIRE(sizes);
  return guarded([&] {
    const pgt::PseudoSeries s = pgt::upper_pseudocentral_series(
        group->group, max_steps == 0 ? pgt::kDefaultSeriesSteps : max_steps, threads);
    const std::vector<std::uint64_t> v = s.sizes();
    for (size_t i = 0; i < v.size() && i < capacity; ++i) sizes[i] = v[i];
    *length = v.size();
    if (reaches_group) *reaches_group = s.reaches_group ? 1 : 0;
  });
}

void pgt_report_options_init(pgt_report_options* options) {
  if (options == nullptr) return;
  *options = {PGT_SCOPE_SERIES, 0, 1, 0, 0, -1};
}

pgt_status pgt_report(const pgt_group* group, const char* spec_text,
                      const pgt_report_options* options, char** out) {
  PGT_REQUIRE(group);
  PGT_REQUIRE(out);
  pgt_report_options opts;
  pgt_report_options_init(&opts);
  if (options) opts = *options;
  return guarded([&] {
    pgt::ReportOptions ro;
    switch (opts.scope) {
      case PGT_SCOPE_INFO: ro.scope = pgt::ReportScope::Info; break;
      case PGT_SCOPE_PSEUDOCENTRE: ro.scope = pgt::ReportScope::Pseudocentre; break;
      case PGT_SCOPE_SERIES: ro.scope = pgt::ReportScope::Series; break;
      default: throw pgt::Error(pgt::ErrorCode::InvalidParameter, "unknown report scope");
    }
    ro.max_steps = opts.max_steps == 0 ? pgt::kDefaultSeriesSteps : opts.max_steps;
    ro.threads = opts.threads == 0 ? 1 : opts.threads;
    ro.include_elements = opts.include_elements != 0;
    const pgt::PseudoReport r =
        pgt::pseudo_report(group->group, spec_text ? spec_text : "", ro);
    *out = duplicate(opts.json ? pgt::report_json(r, opts.indent) + "\n" : pgt::report_text(r));
  });
}

const char* pgt_suite_names(void) {
  static const std::string names = join(pgt::harness::suite_names());
  return names.c_str();
}

pgt_status pgt_verify(const char* suite, unsigned threads, int json, pgt_check_callback callback,
                      void* user, char** out, int* all_passed) {
  PGT_REQUIRE(suite);
  return guarded([&] {
    pgt::harness::Options options;
    options.threads = threads == 0 ? 1 : threads;
    if (callback) {
      options.on_result = [&](const pgt::harness::CheckResult& c) {
        callback(c.id.c_str(), c.criterion, pgt::harness::to_string(c.status), c.detail.c_str(),
                 c.ms, user);
      };
    }
    const pgt::harness::SuiteResult r = pgt::harness::run_suite(suite, options);
    if (out) *out = duplicate(json ? pgt::harness::suite_json(r, 2) + "\n" : pgt::harness::suite_text(r));
    if (all_passed) *all_passed = r.ok() ? 1 : 0;
  });
}

pgt_status pgt_fib(uint64_t n, char** out) {
  PGT_REQUIRE(out);
  return guarded([&] { *out = duplicate(pgt::nt::fib(n).str()); });
}

pgt_status pgt_fib_mod(uint64_t n, uint64_t m, uint64_t* out) {
  PGT_REQUIRE(out);
  return guarded([&] { *out = pgt::nt::fib_mod(n, m); });
}

pgt_status pgt_pisano_period(uint64_t m, uint64_t* out) {
  PGT_REQUIRE(out);
  return guarded([&] { *out = pgt::nt::pisano_period(m); });
}

pgt_status pgt_fib_condition_report(uint64_t p, int json, char** out) {
  PGT_REQUIRE(out);
  return guarded([&] {
    const pgt::nt::RemarkResult r = pgt::nt::remark_condition(p);
    if (json) {
      nlohmann::ordered_json j{{"p", r.p},
                               {"holds", r.holds},
                               {"fib_p2_mod_p2", r.fib_p2},
                               {"fib_p2_minus_1_mod_p2", r.fib_p2_minus_1}};
      *out = duplicate(j.dump(2) + "\n");
      return;
    }
    std::ostringstream s;
    s << "p = " << r.p << "\n"
      << "f(p^2) mod p^2     = " << r.fib_p2 << "\n"
      << "f(p^2 - 1) mod p^2 = " << r.fib_p2_minus_1 << "\n"
      << "condition " << (r.holds ? "holds" : "does not hold") << "\n";
    *out = duplicate(s.str());
  });
}

pgt_status pgt_fib_scan_report(uint64_t bound, unsigned threads, int json, char** out) {
  PGT_REQUIRE(out);
  return guarded([&] {
    const pgt::nt::RemarkScan scan = pgt::nt::remark_scan(bound, threads == 0 ? 1 : threads);
    if (json) {
      nlohmann::ordered_json witnesses = nlohmann::ordered_json::array();
      for (const auto& w : scan.witnesses) witnesses.push_back(w.p);
      nlohmann::ordered_json j{{"bound", scan.bound},
                               {"primes_tested", scan.primes_tested},
                               {"witnesses", witnesses}};
      *out = duplicate(j.dump(2) + "\n");
      return;
    }
    std::ostringstream s;
    s << "primes tested: " << scan.primes_tested << " (p <= " << scan.bound << ")\n"
      << "witnesses:";
    if (scan.witnesses.empty()) s << " none";
    for (const auto& w : scan.witnesses) s << " " << w.p;
    s << "\n";
    *out = duplicate(s.str());
  });
}

pgt_status pgt_fib_d_report(uint64_t t, uint64_t u, int json, char** out) {
  PGT_REQUIRE(out);
  return guarded([&] {
    const pgt::nt::DQuantity d = pgt::nt::d_quantity(t, u);
    const bool exceeds = d.d > pgt::BigInt(t) * t;
    if (json) {
      // Decimal strings: the values outgrow 64 bits quickly.
      nlohmann::ordered_json j{{"T", t},
                               {"U", u},
                               {"c1", d.c1.str()},
                               {"d1", d.d1.str()},
                               {"d2", d.d2.str()},
                               {"D", d.d.str()},
                               {"exceeds_T_squared", exceeds}};
      *out = duplicate(j.dump(2) + "\n");
      return;
    }
    std::ostringstream s;
    s << "T = " << t << ", U = " << u << "\n"
      << "c1 = " << d.c1 << "\nd1 = " << d.d1 << "\nd2 = " << d.d2 << "\nD  = " << d.d << "\n"
      << "D > T^2: " << (exceeds ? "yes" : "no") << "\n";
    *out = duplicate(s.str());
  });
}

pgt_status pgt_fib_pisano_report(uint64_t m, int json, char** out) {
  PGT_REQUIRE(out);
  return guarded([&] {
    const std::uint64_t period = pgt::nt::pisano_period(m);
    if (json) {
      nlohmann::ordered_json j{{"m", m}, {"pisano_period", period}};
      *out = duplicate(j.dump(2) + "\n");
      return;
    }
    *out = duplicate("pisano period of " + std::to_string(m) + " = " + std::to_string(period) + "\n");
  });
}

}  // extern "C"
