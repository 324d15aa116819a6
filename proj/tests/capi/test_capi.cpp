// Exercises libpgt through its C header only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <cstring>
#include <string>
#include <vector>

#include "pgt/pgt.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  pgt_string_free(s);
  return out;
}

pgt_group* from_spec(const char* text) {
  pgt_group* g = nullptr;
  REQUIRE(pgt_group_from_spec(text, &g) == PGT_OK);
  return g;
}

std::string order_of(const pgt_group* g) {
  char* s = nullptr;
  REQUIRE(pgt_group_order(g, &s) == PGT_OK);
  return take(s);
}

}  // namespace

TEST_SUITE("capi") {
  TEST_CASE("strings") {
    CHECK(std::strlen(pgt_version()) > 0);
    CHECK(std::string(pgt_status_string(PGT_ERR_CAPACITY)).size() > 0);
    CHECK(std::string(pgt_suite_names()).find("properties") != std::string::npos);
    CHECK(std::string(pgt_spec_families()).find("SL25xF11") != std::string::npos);
    char* canonical = nullptr;
    REQUIRE(pgt_spec_canonical(" Wr( C(2), S(3) ) ", &canonical) == PGT_OK);
    CHECK(take(canonical) == "Wr(C(2),S(3))");
  }

  TEST_CASE("null arguments") {
    CHECK(pgt_group_from_spec(nullptr, nullptr) == PGT_ERR_NULL_ARGUMENT);
    pgt_group* g = nullptr;
    CHECK(pgt_group_from_spec("S(3)", nullptr) == PGT_ERR_NULL_ARGUMENT);
    CHECK(pgt_pseudocentre(nullptr, 1, nullptr) == PGT_ERR_NULL_ARGUMENT);
    CHECK(g == nullptr);
    pgt_group_free(nullptr);
    pgt_subgroup_free(nullptr);
    pgt_string_free(nullptr);
  }

  TEST_CASE("spec errors") {
    pgt_group* g = nullptr;
    CHECK(pgt_group_from_spec("GL(2,4)", &g) == PGT_ERR_SEMANTIC);
    CHECK(g == nullptr);
    CHECK(pgt_last_error_offset() == 5);
    CHECK(std::string(pgt_last_error()).find("not prime") != std::string::npos);
    CHECK(pgt_group_from_spec("Wr(C(2)", &g) == PGT_ERR_SYNTAX);
    CHECK(pgt_last_error_offset() == 7);
    CHECK(pgt_group_from_spec("S(3)", &g) == PGT_OK);
    CHECK(pgt_last_error_offset() == SIZE_MAX);
    pgt_group_free(g);
  }

  TEST_CASE("groups and subgroups") {
    pgt_group* g = from_spec("S(4)");
    CHECK(pgt_group_degree(g) == 4);
    CHECK(order_of(g) == "24");
    int transitive = 0;
    CHECK(pgt_group_is_transitive(g, &transitive) == PGT_OK);
    CHECK(transitive == 1);

    pgt_subgroup* p = nullptr;
    REQUIRE(pgt_pseudocentre(g, 2, &p) == PGT_OK);
    CHECK(pgt_subgroup_order(p) == 12);
    CHECK(pgt_subgroup_degree(p) == 4);
    std::uint16_t images[4];
    REQUIRE(pgt_subgroup_element(p, 0, images) == PGT_OK);
    CHECK(images[0] == 0);
    CHECK(images[3] == 3);
    CHECK(pgt_subgroup_element(p, 12, images) == PGT_ERR_INVALID_PARAMETER);
    const std::uint16_t three_cycle[4] = {1, 2, 0, 3};
    const std::uint16_t transposition[4] = {1, 0, 2, 3};
    int in = -1;
    CHECK(pgt_subgroup_contains(p, three_cycle, &in) == PGT_OK);
    CHECK(in == 1);
    CHECK(pgt_subgroup_contains(p, transposition, &in) == PGT_OK);
    CHECK(in == 0);

    pgt_subgroup* naive = nullptr;
    REQUIRE(pgt_pseudocentre_naive(g, &naive) == PGT_OK);
    CHECK(pgt_subgroup_order(naive) == 12);
    pgt_subgroup* z = nullptr;
    REQUIRE(pgt_centre(g, &z) == PGT_OK);
    CHECK(pgt_subgroup_order(z) == 1);
    pgt_subgroup* d = nullptr;
    REQUIRE(pgt_derived_subgroup(g, &d) == PGT_OK);
    CHECK(pgt_subgroup_order(d) == 12);
    for (pgt_subgroup* s : {p, naive, z, d}) pgt_subgroup_free(s);
    pgt_group_free(g);
  }

  TEST_CASE("generators") {
    const std::uint16_t gens[] = {1, 2, 3, 4, 0, 1, 0, 2, 3, 4};
    pgt_group* g = nullptr;
    REQUIRE(pgt_group_from_generators(5, gens, 2, &g) == PGT_OK);
    CHECK(order_of(g) == "120");
    pgt_group_free(g);
    const std::uint16_t bad[] = {0, 0, 1};
    CHECK(pgt_group_from_generators(3, bad, 1, &g) == PGT_ERR_INVALID_PARAMETER);
    REQUIRE(pgt_group_from_perm_list("# Klein\n1 0 3 2\n2 3 0 1\n", &g) == PGT_OK);
    CHECK(order_of(g) == "4");
    pgt_group_free(g);
    CHECK(pgt_group_from_perm_list("1 0 2\n1 0\n", &g) == PGT_ERR_DEGREE_MISMATCH);
  }

  TEST_CASE("series") {
    pgt_group* g = from_spec("D(16)");
    std::uint64_t sizes[8] = {};
    std::size_t length = 0;
    int reaches = 0;
    REQUIRE(pgt_series(g, 30, 1, sizes, 8, &length, &reaches) == PGT_OK);
    CHECK(length == 3);
    CHECK(sizes[0] == 1);
    CHECK(sizes[1] == 4);
    CHECK(sizes[2] == 16);
    CHECK(reaches == 1);
    REQUIRE(pgt_series(g, 30, 1, sizes, 1, &length, &reaches) == PGT_OK);
    CHECK(length == 3);
    pgt_group_free(g);
  }

  TEST_CASE("capacity") {
    const std::uint64_t saved = pgt_enumeration_cap();
    CHECK(pgt_set_enumeration_cap(0) == PGT_ERR_INVALID_PARAMETER);
    REQUIRE(pgt_set_enumeration_cap(100) == PGT_OK);
    pgt_group* g = from_spec("S(6)");
    CHECK(order_of(g) == "720");
    pgt_subgroup* p = nullptr;
    CHECK(pgt_pseudocentre(g, 1, &p) == PGT_ERR_CAPACITY);
    CHECK(p == nullptr);
    pgt_group_free(g);
    REQUIRE(pgt_set_enumeration_cap(saved) == PGT_OK);
  }

  TEST_CASE("report") {
    pgt_group* g = from_spec("S(4)");
    pgt_report_options opts;
    pgt_report_options_init(&opts);
    CHECK(opts.scope == PGT_SCOPE_SERIES);
    opts.json = 1;
    char* out = nullptr;
    REQUIRE(pgt_report(g, "S(4)", &opts, &out) == PGT_OK);
    const std::string json = take(out);
    CHECK(json.find("\"pseudocentre_order\":12") != std::string::npos);
    CHECK(json.find("\"p_equals_derived\":true") != std::string::npos);
    opts.json = 0;
    opts.scope = PGT_SCOPE_INFO;
    REQUIRE(pgt_report(g, "S(4)", &opts, &out) == PGT_OK);
    CHECK(take(out).find("24") != std::string::npos);
    pgt_group_free(g);
  }

  TEST_CASE("verify") {
    int calls = 0;
    auto cb = [](const char*, int criterion, const char* status, const char*, double, void* user) {
      CHECK(criterion >= 1);
      CHECK(std::string(status) == "pass");
      ++*static_cast<int*>(user);
    };
    char* out = nullptr;
    int passed = 0;
    REQUIRE(pgt_verify("mclain", 1, 1, cb, &calls, &out, &passed) == PGT_OK);
    CHECK(passed == 1);
    CHECK(calls > 0);
    CHECK(take(out).find("\"suite\"") != std::string::npos);
    CHECK(pgt_verify("bogus", 1, 0, nullptr, nullptr, &out, &passed) == PGT_ERR_INVALID_PARAMETER);
    CHECK(std::string(pgt_last_error()).find("core") != std::string::npos);
  }

  TEST_CASE("number theory") {
    char* s = nullptr;
    REQUIRE(pgt_fib(100, &s) == PGT_OK);
    CHECK(take(s) == "354224848179261915075");
    std::uint64_t v = 0;
    CHECK(pgt_fib_mod(10, 7, &v) == PGT_OK);
    CHECK(v == 6);
    CHECK(pgt_pisano_period(10, &v) == PGT_OK);
    CHECK(v == 60);
    CHECK(pgt_pisano_period(1, &v) == PGT_ERR_INVALID_PARAMETER);
    REQUIRE(pgt_fib_d_report(2, 5, 1, &s) == PGT_OK);
    CHECK(take(s).find("\"D\"") != std::string::npos);
    REQUIRE(pgt_fib_condition_report(7, 0, &s) == PGT_OK);
    CHECK_FALSE(take(s).empty());
  }
}
