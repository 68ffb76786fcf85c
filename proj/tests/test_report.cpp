#include "doctest.h"

#include "snc/report.hpp"
#include "snc/scenario.hpp"

using namespace snc;

TEST_CASE("euler characteristic of the smooth fiber") {
    CHECK(euler_fiber(registry_build("tetrahedron").surface) == 0); // 12 - 24 + 12
    ScenarioFile blown = registry_build("tetra-blown");
    CHECK(euler_fiber(run_plan(blown.surface, blown.plan).first) == 24);
    CHECK(euler_fiber(registry_build("k3-double-d2").surface) == 24);
    CHECK(euler_fiber(registry_build("torus-chain-N3-d1").surface) == 0);
    CHECK(euler_fiber(registry_build("quadric-initial").surface) == 4); // 10 - 12 + 6
}

TEST_CASE("fiber trichotomy") {
    CHECK(classify_fiber(24, std::nullopt) == FiberClass::K3);
    CHECK(classify_fiber(0, 4) == FiberClass::ComplexTorus);
    CHECK(classify_fiber(0, 3) == FiberClass::PrimaryKodaira);
    CHECK(classify_fiber(0, std::nullopt) == FiberClass::Unknown);
    CHECK(classify_fiber(12, std::nullopt) == FiberClass::Unknown);
    CHECK(to_string(FiberClass::K3) == "K3");
    CHECK(to_string(FiberClass::PrimaryKodaira) == "PrimaryKodaira");
}

TEST_CASE("full report on a passing scenario") {
    ScenarioFile sc = registry_build("tetra-blown");
    SmoothingReport r = full_report(run_plan(sc.surface, sc.plan).first, sc.declared_b1);
    CHECK(r.structure_ok);
    CHECK(r.d_semistable.ok);
    CHECK(r.residue_ok);
    CHECK(r.h0_dim == 1);
    CHECK(r.chi_fiber == 24);
    CHECK(r.classification == FiberClass::K3);
    CHECK(r.notes.empty());
}

TEST_CASE("full report withholds classification when hypotheses fail") {
    SmoothingReport tet = full_report(registry_build("tetrahedron").surface, std::nullopt);
    CHECK(tet.structure_ok);
    CHECK(!tet.d_semistable.ok);
    CHECK(tet.classification == FiberClass::Unknown);
    CHECK(!tet.notes.empty());

    SmoothingReport fk = full_report(registry_build("fujita-k3").surface, 4);
    CHECK(fk.d_semistable.ok);
    CHECK(!fk.residue_ok);
    CHECK(fk.classification == FiberClass::Unknown);
}

TEST_CASE("structurally broken surfaces stop at validation") {
    SncSurface s = registry_build("tetrahedron").surface;
    s.find_curve("L01")->sides.pop_back();
    SmoothingReport r = full_report(s, std::nullopt);
    CHECK(!r.structure_ok);
    CHECK(!r.structure_diagnostics.empty());
    CHECK(r.classification == FiberClass::Unknown);
}

TEST_CASE("component euler characteristics of the double construction") {
    for (long long d = 0; d <= 3; ++d) {
        SncSurface s = registry_build("k3-double-d" + std::to_string(d)).surface;
        CHECK(s.find_component("X1")->euler_char == 12 + 3 * d);
        CHECK(s.find_component("X2")->euler_char == 12 - 3 * d);
        SmoothingReport r = full_report(s, std::nullopt);
        CHECK(r.classification == FiberClass::K3);
        CHECK(r.d_semistable.ok);
    }
}

TEST_CASE("torus chains classify by twisting degree") {
    for (int n = 1; n <= 3; ++n) {
        SUBCASE(("N=" + std::to_string(n)).c_str()) {
            ScenarioFile flat = registry_build("torus-chain-N" + std::to_string(n) + "-d0");
            CHECK(full_report(flat.surface, flat.declared_b1).classification ==
                  FiberClass::ComplexTorus);
            ScenarioFile twisted = registry_build("torus-chain-N" + std::to_string(n) + "-d2");
            CHECK(full_report(twisted.surface, twisted.declared_b1).classification ==
                  FiberClass::PrimaryKodaira);
        }
    }
}
