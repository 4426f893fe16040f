#include "doctest.h"

#include "codekit/code_family.hpp"
#include "codekit/report.hpp"

#include <json.hpp>

using namespace codekit;
using nlohmann::json;

TEST_CASE("report_json carries the full schema") {
    FieldTower t(3, 1, 4, 4, 2);
    auto r = verify_family(t);
    auto text = report_json(r);
    CHECK(text.back() == '\n');

    auto j = json::parse(text);
    for (const char* key :
         {"params", "case", "n", "k", "d", "weight_enumerator",
          "predicted_match", "self_orthogonal", "divisor",
          "dual_min_distance", "dual_low_weights", "bounds", "locality",
          "repair_rules", "runtime_ms"}) {
        CAPTURE(key);
        CHECK(j.contains(key));
    }
    CHECK(j.size() == 15);

    CHECK(j["params"]["p"] == 3);
    CHECK(j["params"]["s"] == 1);
    CHECK(j["params"]["q"] == 3);
    CHECK(j["params"]["m"] == 4);
    CHECK(j["params"]["m1"] == 4);
    CHECK(j["params"]["m2"] == 2);
    CHECK(j["params"]["e"] == 2);
    CHECK(j["params"]["l"] == 1);
    CHECK(j["case"] == "Thm42");
    CHECK(j["n"] == 21);
    CHECK(j["k"] == 5);
    CHECK(j["d"] == 12);
    CHECK(j["weight_enumerator"] == "1+100z^12+120z^15+20z^18+2z^21");
    CHECK(j["predicted_match"] == true);
    CHECK(j["self_orthogonal"] == true);
    CHECK(j["divisor"] == 3);
    CHECK(j["dual_min_distance"] == 3);
    CHECK(j["dual_low_weights"] == json::array({"0", "0", "20", "450"}));
    CHECK(j["bounds"]["griesmer_min_length"] == 20);
    CHECK(j["bounds"]["griesmer_optimal"] == true);
    CHECK(j["bounds"]["cm_upper"] == 5);
    CHECK(j["bounds"]["cm_verdict"] == "optimal");
    CHECK(j["locality"] == 2);

    REQUIRE(j["repair_rules"].is_array());
    REQUIRE(j["repair_rules"].size() == 21);
    for (const auto& rule : j["repair_rules"]) {
        CHECK(rule.contains("target"));
        CHECK(rule["helpers"].is_array());
        CHECK(rule["helpers"].size() == 2);
        CHECK(rule["coefficients"].is_array());
        CHECK(rule["coefficients"].size() == 2);
    }
}

TEST_CASE("report_json uses null for absent optionals") {
    // no closed prediction for this tower
    auto r1 = verify_family(FieldTower(3, 1, 4, 2, 4));
    auto j1 = json::parse(report_json(r1));
    CHECK(j1["predicted_match"].is_null());

    // repair construction infeasible here
    auto r2 = verify_family(FieldTower(3, 1, 6, 3, 2));
    auto j2 = json::parse(report_json(r2));
    CHECK(j2["predicted_match"] == true);
    CHECK(j2["repair_rules"].is_null());
}

TEST_CASE("report_json is deterministic apart from runtime") {
    auto a = verify_family(FieldTower(3, 1, 4, 4, 2));
    auto b = verify_family(FieldTower(3, 1, 4, 4, 2));
    a.runtime_ms = 0;
    b.runtime_ms = 0;
    CHECK(report_json(a) == report_json(b));
}

TEST_CASE("report_text verdict and diagnostics") {
    auto r = verify_family(FieldTower(3, 1, 4, 4, 2));
    auto text = report_text(r);
    CHECK(text.find("code: [21, 5, 12]") != std::string::npos);
    CHECK(text.find("weight_enumerator: 1+100z^12") != std::string::npos);
    CHECK(text.find("verdict: pass\n") != std::string::npos);
    CHECK(text.find("FAIL:") == std::string::npos);

    r.failures.push_back("synthetic check");
    r.flags.push_back("synthetic note");
    CHECK(!r.passed());
    auto bad = report_text(r);
    CHECK(bad.find("FAIL: synthetic check\n") != std::string::npos);
    CHECK(bad.find("note: synthetic note\n") != std::string::npos);
    CHECK(bad.find("verdict: fail\n") != std::string::npos);
}
