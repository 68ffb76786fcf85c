#include "doctest.h"

#include <nlohmann/json.hpp>

#include "snc/errors.hpp"
#include "snc/scenario.hpp"

using namespace snc;
using nlohmann::json;

TEST_CASE("parse failure modes") {
    CHECK_THROWS_AS(parse_scenario(""), ParseError);
    CHECK_THROWS_AS(parse_scenario("{not json"), ParseError);

    std::string base = serialize_scenario(registry_build("tetrahedron"));

    SUBCASE("unknown top-level field") {
        json j = json::parse(base);
        j["surprise"] = 1;
        CHECK_THROWS_AS(parse_scenario(j.dump()), SchemaError);
    }
    SUBCASE("unknown nested field") {
        json j = json::parse(base);
        j["components"][0]["color"] = "blue";
        CHECK_THROWS_AS(parse_scenario(j.dump()), SchemaError);
    }
    SUBCASE("missing required field") {
        json j = json::parse(base);
        j["components"][0].erase("kind");
        CHECK_THROWS_AS(parse_scenario(j.dump()), SchemaError);
    }
    SUBCASE("dangling component reference") {
        json j = json::parse(base);
        j["double_curves"][0]["sides"][0]["component"] = "X9";
        CHECK_THROWS_AS(parse_scenario(j.dump()), SemanticError);
    }
    SUBCASE("plan step for a curve that does not exist") {
        json j = json::parse(base);
        j["blowup_plan"] = json::array(
            {{{"curve", "L99"}, {"mode", "both_sides"}, {"points", json::array({"p"})}}});
        CHECK_THROWS_AS(parse_scenario(j.dump()), SemanticError);
    }
    SUBCASE("malformed rational") {
        json j = json::parse(base);
        j["double_curves"][0]["twist"] = {{"residue_factor", json::array({"1/0", "0"})}};
        CHECK_THROWS_AS(parse_scenario(j.dump()), ParseError);
    }
}

TEST_CASE("exact data survives serialization") {
    ScenarioFile sc = registry_build("fujita", {{"k", "3"}});
    ScenarioFile back = parse_scenario(serialize_scenario(sc));
    const auto& t = back.surface.find_curve("CB")->twist;
    REQUIRE(t.has_value());
    CHECK(t->residue_factor == -GaussianRational::i_power(3));
    CHECK(t->lattice_action.det() == 1);
    CHECK(back.surface.find_curve("CB")->geometry.tau ==
          GaussianRational{Rational(0), Rational(1)});
}

TEST_CASE("serialization round-trips byte-identically on every shipped scenario") {
    for (const auto& name : registry_names()) {
        CAPTURE(name);
        std::string once = serialize_scenario(registry_build(name));
        std::string twice = serialize_scenario(parse_scenario(once));
        CHECK(once == twice);
    }
}

TEST_CASE("every shipped scenario meets its expected block") {
    for (const auto& name : registry_names()) {
        CAPTURE(name);
        ScenarioFile sc = registry_build(name);
        CheckOutcome out = run_check(sc);
        CHECK(out.assertion_failures.empty());
        if (sc.expected.mismatch.value_or(false))
            CHECK(out.exit_code == 3);
        else
            CHECK(out.exit_code == 0);
    }
}

TEST_CASE("expected-block violations surface as assertion failures") {
    ScenarioFile sc = registry_build("tetra-blown");
    sc.expected.euler_fiber = 25; // deliberately wrong
    CheckOutcome out = run_check(sc);
    CHECK(out.exit_code == 4);
    REQUIRE(!out.assertion_failures.empty());
    CHECK(out.assertion_failures.front().find("euler_fiber") != std::string::npos);
}

TEST_CASE("registry lookups") {
    CHECK(registry_has("tetrahedron"));
    CHECK(!registry_has("dodecahedron"));
    CHECK_THROWS_AS(registry_build("dodecahedron"), SemanticError);
    CHECK(registry_names().size() >= 30);
    // parameter overrides change the built surface
    auto k0 = registry_build("fujita", {{"k", "0"}});
    auto k2 = registry_build("fujita", {{"k", "2"}});
    CHECK(h0_canonical_dimension(k0.surface) == 1);
    CHECK(h0_canonical_dimension(k2.surface) == 0);
    CHECK_THROWS_AS(registry_build("fujita", {{"k", "two"}}), ParseError);
}

TEST_CASE("report json is deterministic and carries the verdicts") {
    ScenarioFile sc = registry_build("quadric-pipeline");
    CheckOutcome out = run_check(sc);
    json a = outcome_json(sc, out);
    json b = outcome_json(sc, run_check(sc));
    CHECK(a.dump() == b.dump());
    CHECK(a["classification"] == "K3");
    CHECK(a["euler_fiber"] == 24);
    CHECK(a["d_semistable"] == true);
    CHECK(a["exit_code"] == 0);

    ScenarioFile naive = registry_build("quadric-naive");
    json n = outcome_json(naive, run_check(naive));
    CHECK(n["exit_code"] == 3);
    CHECK(!n["mismatch"].empty());
}
