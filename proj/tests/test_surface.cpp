#include "doctest.h"

#include <algorithm>

#include "snc/errors.hpp"
#include "snc/scenario.hpp"
#include "snc/surface.hpp"

using namespace snc;

namespace {

bool has_diag(const std::vector<std::string>& diags, const std::string& needle) {
    return std::any_of(diags.begin(), diags.end(), [&](const std::string& d) {
        return d.find(needle) != std::string::npos;
    });
}

} // namespace

TEST_CASE("component factories carry the right numerical data") {
    auto pp = Component::projective_plane("P");
    CHECK(pp.euler_char == 3);
    CHECK(pp.canonical_class == std::vector<long long>{-3});
    CHECK(self_intersection(pp, {1}) == 1);
    CHECK(self_intersection(pp, {3}) == 9);

    auto q = Component::quadric("Q");
    CHECK(q.euler_char == 4);
    CHECK(q.canonical_class == std::vector<long long>{-2, -2});
    CHECK(intersection_pairing(q, {1, 0}, {0, 1}) == 1);
    CHECK(self_intersection(q, {1, 1}) == 2);
    CHECK(self_intersection(q, {1, 0}) == 0);

    CurveGeometry base;
    base.genus = 1;
    base.tau = GaussianRational{Rational(0), Rational(1)};
    auto r = Component::ruled_elliptic("R", 3, base);
    CHECK(r.euler_char == 0);
    CHECK(self_intersection(r, {1, 0}) == 3);  // zero section
    CHECK(self_intersection(r, {0, 1}) == -3); // section at infinity
    CHECK(intersection_pairing(r, {1, 0}, {0, 1}) == 0);
}

TEST_CASE("pre-blown planes append exceptional classes") {
    auto pp = Component::projective_plane("P", 4);
    CHECK(pp.euler_char == 7);
    CHECK(pp.class_basis.size() == 5);
    CHECK(pp.base_rank() == 1);
    CHECK(pp.canonical_class == std::vector<long long>{-3, 1, 1, 1, 1});
    CHECK(self_intersection(pp, {3, -1, -1, -1, -1}) == 5);
    // K . K drops by one per blow-up
    CHECK(self_intersection(pp, pp.canonical_class) == 5);
}

TEST_CASE("declared components need a form for intersection numbers") {
    auto d = Component::declared("D", {"A", "B"}, {-1, -1}, 7, std::nullopt);
    CHECK_THROWS_AS(self_intersection(d, {1, 0}), UndefinedForm);
    auto d2 = Component::declared("D", {"A", "B"}, {-1, -1}, 7,
                                  std::vector<std::vector<long long>>{{2, 1}, {1, 0}});
    CHECK(self_intersection(d2, {1, 1}) == 4);
}

TEST_CASE("sigma alternates") {
    TriplePoint t;
    t.id = "p";
    t.sigma[{0, 1, 2}] = -1;
    CHECK(t.sigma_at({0, 1, 2}) == -1);
    CHECK(t.sigma_at({1, 0, 2}) == 1);
    CHECK(t.sigma_at({2, 0, 1}) == -1);
}

TEST_CASE("epsilon follows component order") {
    SncSurface s = registry_build("tetrahedron").surface;
    CHECK(s.epsilon("H0", "H1") == 1);
    CHECK(s.epsilon("H1", "H0") == -1);
}

TEST_CASE("registry scenarios validate cleanly") {
    for (const auto& name : registry_names()) {
        auto diags = validate_structure(registry_build(name).surface);
        CAPTURE(name);
        CHECK(diags.empty());
    }
}

TEST_CASE("validation names the violated invariant") {
    SncSurface good = registry_build("tetrahedron").surface;

    SUBCASE("curve with a single side") {
        SncSurface s = good;
        s.find_curve("L01")->sides.pop_back();
        CHECK(has_diag(validate_structure(s), "requires two sides"));
    }
    SUBCASE("dangling component reference") {
        SncSurface s = good;
        s.find_curve("L01")->sides[0].component = "H9";
        CHECK(has_diag(validate_structure(s), "H9"));
    }
    SUBCASE("class vector of the wrong length") {
        SncSurface s = good;
        s.find_curve("L01")->sides[0].curve_class = {1, 0};
        CHECK(!validate_structure(s).empty());
    }
    SUBCASE("normal degree contradicting the intersection form") {
        SncSurface s = good;
        s.find_curve("L01")->sides[0].normal_class = LineBundleClass::rational_curve(7);
        CHECK(!validate_structure(s).empty());
    }
    SUBCASE("duplicate component id") {
        SncSurface s = good;
        s.components.push_back(s.components.front());
        CHECK(has_diag(validate_structure(s), "duplicate"));
    }
    SUBCASE("non-alternating sigma table") {
        SncSurface s = good;
        s.triple_points.front().sigma[{1, 0, 2}] =
            s.triple_points.front().sigma[{0, 1, 2}];
        CHECK(has_diag(validate_structure(s), "sigma not alternating"));
    }
    SUBCASE("elliptic mark without coordinates") {
        SncSurface s = registry_build("k3-double-d1").surface;
        auto* c = s.find_curve("C");
        c->triple_marks.push_back({"p", CurvePoint::labeled("no-coords")});
        CHECK(!validate_structure(s).empty());
    }
    SUBCASE("elliptic geometry with a real lattice") {
        SncSurface s = registry_build("k3-double-d1").surface;
        s.find_curve("C")->geometry.tau = GaussianRational{Rational(2), Rational(0)};
        CHECK(!validate_structure(s).empty());
    }
}

TEST_CASE("validation diagnostics are sorted and deduplicated") {
    SncSurface s = registry_build("tetrahedron").surface;
    s.find_curve("L01")->sides[0].component = "H9";
    s.find_curve("L23")->sides[1].component = "H9";
    auto diags = validate_structure(s);
    CHECK(std::is_sorted(diags.begin(), diags.end()));
    CHECK(std::adjacent_find(diags.begin(), diags.end()) == diags.end());
}
