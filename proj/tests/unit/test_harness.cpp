#include <doctest.h>

#include <json.hpp>

#include "pgt/error.hpp"
#include "pgt/harness.hpp"
#include "pgt/perm_group.hpp"

using namespace pgt;
using namespace pgt::harness;

namespace {

// Restores the process-wide cap when a test lowers it.
struct CapGuard {
  std::uint64_t saved = default_enumeration_cap();
  ~CapGuard() { set_default_enumeration_cap(saved); }
};

}  // namespace

TEST_SUITE("harness") {
  TEST_CASE("suite names") {
    const auto& names = suite_names();
    CHECK(names == std::vector<std::string>{"core", "wreath", "matrix", "mclain", "fib",
                                            "properties", "all"});
  }

  TEST_CASE("unknown and empty suite names are rejected") {
    for (const char* bad : {"", "nope", "Core"}) {
      try {
        run_suite(bad);
        FAIL("accepted " << bad);
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidParameter);
        CHECK(std::string(e.what()).find("mclain") != std::string::npos);
      }
    }
  }

  TEST_CASE("wreath predictions") {
    CHECK(predict_wreath_case(2, 5, WreathTop::Alt) == WreathCase::Whole);
    CHECK(predict_wreath_case(7, 5, WreathTop::Alt) == WreathCase::Base);
    CHECK(predict_wreath_case(5, 5, WreathTop::Alt) == WreathCase::TopCommutator);
    CHECK(predict_wreath_case(2, 4, WreathTop::Alt) == WreathCase::KleinTimesCommutator);
    CHECK(predict_wreath_case(3, 3, WreathTop::Alt) == WreathCase::TopCommutator);
    CHECK(predict_wreath_case(2, 6, WreathTop::Alt) == WreathCase::TopTimesCommutator);
    CHECK(predict_wreath_case(5, 3, WreathTop::Sym) == WreathCase::Base);
    CHECK(predict_wreath_case(3, 3, WreathTop::Sym) == WreathCase::AltCommutator);
    CHECK(predict_wreath_case(2, 4, WreathTop::Sym) == WreathCase::AltTimesCommutator);
    CHECK(predict_wreath_case(2, 5, WreathTop::Sym) == WreathCase::AltTimesBase);
    CHECK(std::string(describe(WreathCase::Base)) == "B");
    CHECK_THROWS_AS(predict_wreath_case(4, 5, WreathTop::Alt), Error);
  }

  TEST_CASE("wreath check runs and passes") {
    const CheckResult r = check_wreath_case(3, 3, WreathTop::Sym);
    CHECK(r.status == Status::Pass);
    CHECK(r.criterion == 11);
  }

  TEST_CASE("capacity problems become skips") {
    CapGuard guard;
    set_default_enumeration_cap(100);
    const CheckResult r = check_wreath_case(2, 5, WreathTop::Alt);
    CHECK(r.status == Status::Skipped);
    CHECK(r.detail.find("cap") != std::string::npos);
  }

  TEST_CASE("core suite") {
    std::size_t seen = 0;
    Options opts;
    opts.on_result = [&](const CheckResult&) { ++seen; };
    const SuiteResult s = run_suite("core", opts);
    CHECK(s.ok());
    CHECK(s.count(Status::Skipped) == 0);
    CHECK(seen == s.checks.size());
    for (const CheckResult& c : s.checks) CHECK_MESSAGE(c.status == Status::Pass, c.id);

    const auto j = nlohmann::json::parse(suite_json(s));
    CHECK(j["suite"] == "core");
    CHECK(j["checks"].size() == s.checks.size());
    CHECK(suite_text(s).find("sym-3") != std::string::npos);
  }

  TEST_CASE("corpus") {
    const auto& specs = corpus_specs();
    CHECK(specs.size() >= 60);
    auto has = [&](const std::string& s) {
      return std::find(specs.begin(), specs.end(), s) != specs.end();
    };
    for (int n = 3; n <= 7; ++n) CHECK(has("S(" + std::to_string(n) + ")"));
    for (int n = 2; n <= 6; ++n) CHECK(has("UT(" + std::to_string(n) + ",2)"));
    CHECK(std::set<std::string>(specs.begin(), specs.end()).size() == specs.size());
  }
}
