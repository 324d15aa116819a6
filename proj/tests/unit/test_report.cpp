#include <doctest.h>

#include <json.hpp>

#include "pgt/constructors.hpp"
#include "pgt/group_spec.hpp"
#include "pgt/report.hpp"

using namespace pgt;

TEST_SUITE("report") {
  TEST_CASE("abelian group") {
    const PseudoReport r = pseudo_report(cyclic(6), "C(6)");
    CHECK(r.order == 6);
    CHECK(r.centre_order == 6);
    CHECK(r.derived_order == 1);
    CHECK(r.pseudocentre_order == 6);
    CHECK(r.is_pseudocentral == true);
    CHECK(r.p_equals_centre == true);
    CHECK(r.p_equals_derived == false);
    CHECK(r.series == std::vector<std::uint64_t>{1, 6});
    CHECK(r.pseudo_class == 1);
  }

  TEST_CASE("unitriangular group") {
    const PseudoReport r = pseudo_report(build_group("UT(4,2)"), "UT(4,2)");
    CHECK(r.order == 64);
    CHECK(r.pseudocentre_order == 8);
  }

  TEST_CASE("scope limits what is computed") {
    ReportOptions info;
    info.scope = ReportScope::Info;
    const PseudoReport r = pseudo_report(symmetric(4), "S(4)", info);
    CHECK(r.derived_order == 12);
    CHECK(r.second_derived_order == 4);
    CHECK_FALSE(r.pseudocentre_order.has_value());
    CHECK_FALSE(r.series.has_value());

    const auto j = nlohmann::json::parse(report_json(r));
    CHECK(j["pseudocentre_order"].is_null());
    CHECK(j["flags"]["is_pseudocentral"].is_null());
    CHECK(j["series"].is_null());
    CHECK(j["order"] == 24);
  }

  TEST_CASE("json layout") {
    ReportOptions opts;
    opts.include_elements = true;
    const PseudoReport r = pseudo_report(symmetric(4), "S(4)", opts);
    const auto j = nlohmann::json::parse(report_json(r, 2));
    for (const char* key : {"spec", "degree", "order", "centre_order", "derived_order",
                            "pseudocentre_order", "flags", "series", "class", "timings_ms",
                            "elements"}) {
      CHECK_MESSAGE(j.contains(key), key);
    }
    CHECK(j["spec"] == "S(4)");
    CHECK(j["pseudocentre_order"] == 12);
    CHECK(j["flags"]["p_equals_derived"] == true);
    CHECK(j["flags"]["p_equals_centre"] == false);
    CHECK(j["elements"].size() == 12);
    CHECK(j["elements"][0] == std::vector<int>{0, 1, 2, 3});
  }

  TEST_CASE("step limit leaves the class unset") {
    ReportOptions opts;
    opts.max_steps = 1;
    const PseudoReport r = pseudo_report(dihedral(32), "D(32)", opts);
    CHECK_FALSE(r.pseudo_class.has_value());
    CHECK(report_text(r).find("did not stabilize") != std::string::npos);
  }

  TEST_CASE("text lists the main fields") {
    const std::string text = report_text(pseudo_report(dihedral(16), "D(16)"));
    CHECK(text.find("D(16)") != std::string::npos);
    CHECK(text.find("1, 4, 16") != std::string::npos);
  }
}
