#include "doctest.h"

#include <numeric>

#include "snc/blowup.hpp"
#include "snc/checks.hpp"
#include "snc/errors.hpp"
#include "snc/scenario.hpp"

using namespace snc;

namespace {

long long total_points(const BlowupPlan& plan) {
    long long n = 0;
    for (const auto& s : plan.steps) n += static_cast<long long>(s.points.size());
    return n;
}

/// Sum of canonical plus all incident double curve classes on a component;
/// the anticanonical condition is this being the zero vector.
std::vector<long long> anticanonical_defect(const SncSurface& s, const std::string& comp) {
    const Component* c = s.find_component(comp);
    std::vector<long long> total = c->canonical_class;
    for (const auto& d : s.double_curves)
        for (const auto& side : d.sides)
            if (side.component == comp)
                for (std::size_t k = 0; k < side.curve_class.size(); ++k)
                    total[k] += side.curve_class[k];
    return total;
}

} // namespace

TEST_CASE("empty plan is the identity") {
    SncSurface s = registry_build("tetrahedron").surface;
    auto [t, log] = run_plan(s, {});
    CHECK(t.components.size() == s.components.size());
    CHECK(collective_normal_class(t).per_curve == collective_normal_class(s).per_curve);
    for (const auto& entry : log) CHECK(entry.original == entry.transformed);
}

TEST_CASE("one both-sided blow-up: full bookkeeping") {
    SncSurface s = registry_build("tetrahedron").surface;
    BlowupStep step{"L01", {CurvePoint::labeled("z1"), CurvePoint::labeled("z2")},
                    BlowupMode::BothSides, ""};
    SncSurface t = blow_up(s, step);

    for (const std::string& comp : {"H0", "H1"}) {
        const Component* before = s.find_component(comp);
        const Component* after = t.find_component(comp);
        CHECK(after->euler_char == before->euler_char + 2);
        CHECK(after->class_basis.size() == before->class_basis.size() + 2);
        // K gains +1 on each new exceptional class
        CHECK(after->canonical_class.back() == 1);
        CHECK(self_intersection(*after, after->canonical_class) ==
              self_intersection(*before, before->canonical_class) - 2);
    }
    // untouched components are carried over verbatim
    CHECK(t.find_component("H2")->class_basis.size() == 1);

    const DoubleCurve* d = t.find_curve("L01");
    for (const auto& side : d->sides) {
        CHECK(side.normal_class.degree == -1); // was 1, dropped by 2
        CHECK(side.curve_class.back() == -1);
    }
    // other curves on H0/H1 are padded with zeros, classes unchanged in the
    // base block
    const DoubleCurve* other = t.find_curve("L02");
    CHECK(other->sides[0].curve_class == std::vector<long long>{1, 0, 0});
    CHECK(other->sides[0].normal_class.degree == 1);
}

TEST_CASE("blow-up preserves the anticanonical identity") {
    SncSurface s = registry_build("tetrahedron").surface;
    BlowupStep step{"L12", {CurvePoint::labeled("w")}, BlowupMode::OneSide, "H1"};
    SncSurface t = blow_up(s, step);
    for (const auto& c : t.components) {
        auto defect = anticanonical_defect(t, c.id);
        CHECK(std::all_of(defect.begin(), defect.end(),
                          [](long long v) { return v == 0; }));
    }
}

TEST_CASE("elliptic centers move the jacobian point") {
    SncSurface s = registry_build("k3-double-d1").surface;
    BlowupStep step{"C", {CurvePoint::at(Rational(1, 3), Rational(1, 5))},
                    BlowupMode::OneSide, "X1"};
    SncSurface t = blow_up(s, step);
    const auto& n = t.find_curve("C")->sides[0].normal_class;
    CHECK(n.degree == -4);
    CHECK(n.a == mod1(Rational(-1, 3)));
    CHECK(n.b == mod1(Rational(-1, 5)));
    // the other side is untouched
    CHECK(t.find_curve("C")->sides[1].normal_class.degree == 3);
}

TEST_CASE("invalid centers are rejected") {
    SncSurface s = registry_build("k3-double-d1").surface;
    SUBCASE("coordinate-free point on an elliptic curve") {
        BlowupStep step{"C", {CurvePoint::labeled("q")}, BlowupMode::BothSides, ""};
        CHECK_THROWS_AS(blow_up(s, step), CenterNotOnCurve);
    }
    SUBCASE("repeated center") {
        auto p = CurvePoint::at(Rational(1, 2), Rational(0));
        BlowupStep step{"C", {p, p}, BlowupMode::BothSides, ""};
        CHECK_THROWS(blow_up(s, step));
    }
    SUBCASE("center on a triple point") {
        SncSurface tet = registry_build("tetrahedron").surface;
        auto mark = tet.find_curve("L01")->triple_marks.front().location;
        BlowupStep step{"L01", {mark}, BlowupMode::BothSides, ""};
        CHECK_THROWS_AS(blow_up(tet, step), CenterOnTriplePoint);
    }
    SUBCASE("unknown curve") {
        BlowupStep step{"nope", {CurvePoint::labeled("q")}, BlowupMode::BothSides, ""};
        CHECK_THROWS(blow_up(s, step));
    }
}

TEST_CASE("disjoint steps commute") {
    SncSurface s = registry_build("tetrahedron").surface;
    BlowupStep a{"L01", {CurvePoint::labeled("a1")}, BlowupMode::OneSide, "H0"};
    BlowupStep b{"L23", {CurvePoint::labeled("b1")}, BlowupMode::OneSide, "H2"};
    SncSurface ab = blow_up(blow_up(s, a), b);
    SncSurface ba = blow_up(blow_up(s, b), a);
    CHECK(collective_normal_class(ab).per_curve == collective_normal_class(ba).per_curve);
    for (const auto& c : ab.components)
        CHECK(c.euler_char == ba.find_component(c.id)->euler_char);
}

TEST_CASE("run_plan reports the failing step") {
    SncSurface s = registry_build("tetrahedron").surface;
    BlowupPlan plan;
    plan.steps.push_back({"L01", {CurvePoint::labeled("ok")}, BlowupMode::BothSides, ""});
    plan.steps.push_back({"missing", {CurvePoint::labeled("x")}, BlowupMode::BothSides, ""});
    CHECK_THROWS_WITH_AS(run_plan(s, plan), doctest::Contains("step 2"), Error);
}

TEST_CASE("mismatch detection") {
    SUBCASE("naive quadric plan breaks the third line") {
        ScenarioFile sc = registry_build("quadric-naive");
        auto diags = detect_mismatch(sc.surface, sc.plan);
        REQUIRE(!diags.empty());
        bool on_c3 = false;
        for (const auto& d : diags) on_c3 = on_c3 || d.curve_id == "C3";
        CHECK(on_c3);
    }
    SUBCASE("ordered quadric plan is clean") {
        ScenarioFile sc = registry_build("quadric-pipeline");
        CHECK(detect_mismatch(sc.surface, sc.plan).empty());
    }
    SUBCASE("both-sided plans never mismatch") {
        ScenarioFile sc = registry_build("tetra-blown");
        CHECK(detect_mismatch(sc.surface, sc.plan).empty());
    }
}

TEST_CASE("planner trivializes every feasible scenario") {
    for (const auto& name : registry_names()) {
        ScenarioFile sc = registry_build(name);
        if (sc.expected.mismatch.value_or(false)) continue;
        SncSurface post = run_plan(sc.surface, sc.plan).first;
        PlannerResult r = plan_blowups_to_trivialize(post);
        CAPTURE(name);
        REQUIRE(r.plan.has_value());
        SncSurface done = run_plan(post, *r.plan).first;
        CHECK(is_d_semistable(done).ok);
    }
}

TEST_CASE("planner point counts") {
    PlannerResult tet = plan_blowups_to_trivialize(registry_build("tetrahedron").surface);
    REQUIRE(tet.plan.has_value());
    CHECK(total_points(*tet.plan) == 12);
    for (const auto& step : tet.plan->steps) {
        CHECK(step.mode == BlowupMode::BothSides);
        CHECK(step.points.size() == 2);
    }

    PlannerResult done = plan_blowups_to_trivialize(
        run_plan(registry_build("tetra-blown").surface, registry_build("tetra-blown").plan)
            .first);
    REQUIRE(done.plan.has_value());
    CHECK(done.plan->steps.empty());

    PlannerResult quad = plan_blowups_to_trivialize(registry_build("quadric-initial").surface);
    REQUIRE(quad.plan.has_value());
    CHECK(total_points(*quad.plan) == 10); // 4 + 4 + 2, all both-sided
}

TEST_CASE("planner reports obstructions") {
    SncSurface s = registry_build("k3-double-d1").surface;
    // flip the sign convention: total collective degree becomes negative
    s.find_curve("C")->sides[0].normal_class = LineBundleClass::elliptic(-4);
    auto* comp = s.find_component("X1");
    (void)comp;
    PlannerResult r = plan_blowups_to_trivialize(s);
    CHECK(!r.plan.has_value());
    CHECK(r.obstruction == "C");
}

TEST_CASE("planner solves elliptic jacobian constraints") {
    SncSurface s = registry_build("k3-double-d2").surface;
    // raise the collective degree to 2 and move the jacobian point off the
    // origin, forcing the planner to solve for its centers
    s.find_curve("C")->sides[0].normal_class =
        LineBundleClass::elliptic(-4, Rational(1, 3), Rational(2, 7));
    PlannerResult r = plan_blowups_to_trivialize(s);
    REQUIRE(r.plan.has_value());
    SncSurface done = run_plan(s, *r.plan).first;
    auto ds = is_d_semistable(done);
    CHECK(ds.ok);
}
