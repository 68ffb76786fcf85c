#include "doctest.h"

#include <Eigen/Dense>
#include <complex>
#include <random>

#include "snc/checks.hpp"
#include "snc/errors.hpp"
#include "snc/scenario.hpp"

using namespace snc;

namespace {

std::complex<double> to_c(const GaussianRational& g) {
    return {to_double(g.re), to_double(g.im)};
}

/// Floating-point rank of rho via column-pivoted QR, used as an independent
/// cross-check of the exact elimination.
std::size_t float_rank(const RhoMatrix& m) {
    if (m.rows.empty()) return 0;
    Eigen::MatrixXcd a(m.rows.size(), m.column_ids.size());
    for (std::size_t r = 0; r < m.rows.size(); ++r)
        for (std::size_t c = 0; c < m.column_ids.size(); ++c)
            a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = to_c(m.rows[r][c]);
    Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(a);
    qr.setThreshold(1e-9);
    return static_cast<std::size_t>(qr.rank());
}

} // namespace

TEST_CASE("collective classes of the plane configurations") {
    auto tet = collective_normal_class(registry_build("tetrahedron").surface);
    REQUIRE(tet.per_curve.size() == 6);
    for (const auto& [id, cls] : tet.per_curve) {
        CAPTURE(id);
        CHECK(cls.degree == 4); // 1 + 1 + two triple marks
    }
    auto ds = is_d_semistable(registry_build("tetrahedron").surface);
    CHECK(!ds.ok);
    CHECK(ds.nontrivial_curves.size() == 6);
    CHECK(std::is_sorted(ds.nontrivial_curves.begin(), ds.nontrivial_curves.end()));
}

TEST_CASE("collective class sees the jacobian point, not just the degree") {
    SncSurface s = registry_build("k3-double-d0").surface;
    s.find_curve("C")->sides[0].normal_class =
        LineBundleClass::elliptic(0, Rational(1, 2), Rational(0));
    auto c = collective_normal_class(s).per_curve.at("C");
    CHECK(c.degree == 0);
    CHECK(!is_trivial(c));
    CHECK(!is_d_semistable(s).ok);
}

TEST_CASE("anticanonical verdicts") {
    auto tet = check_anticanonical(registry_build("tetrahedron").surface);
    for (const auto& [id, v] : tet) CHECK(v == AnticanonicalVerdict::Holds);

    // in the five-line configuration two planes only carry two lines
    auto two = check_anticanonical(registry_build("two-triple").surface);
    CHECK(two.at("H0") == AnticanonicalVerdict::Fails);
    CHECK(two.at("H3") == AnticanonicalVerdict::Fails);
    CHECK(two.at("H1") == AnticanonicalVerdict::Holds);
    CHECK(two.at("H2") == AnticanonicalVerdict::Holds);
}

TEST_CASE("declared components without class data are unverifiable") {
    SncSurface s;
    s.components.push_back(Component::declared("D", {}, {}, 5, std::nullopt));
    CHECK(check_anticanonical(s).at("D") == AnticanonicalVerdict::Unverifiable);
}

TEST_CASE("rho matrix of a plain 2-cycle") {
    RhoMatrix m = build_rho_matrix(registry_build("torus-chain-N2-d0").surface);
    REQUIRE(m.rows.size() == 2);
    REQUIRE(m.column_ids.size() == 2);
    GaussianRational one{Rational(1)}, minus{Rational(-1)};
    CHECK(m.rows[0] == std::vector<GaussianRational>{one, minus});
    CHECK(m.rows[1] == std::vector<GaussianRational>{minus, one});
    CHECK(rank(m) == 1);
    CHECK(check_residue_matching(registry_build("torus-chain-N2-d0").surface));
}

TEST_CASE("self-gluing folds both sides into one entry") {
    RhoMatrix m = build_rho_matrix(registry_build("torus-chain-N1-d0").surface);
    REQUIRE(m.rows.size() == 1);
    REQUIRE(m.rows[0].size() == 1);
    CHECK(m.rows[0][0].is_zero()); // 1 + (-1)
    CHECK(h0_canonical_dimension(registry_build("torus-chain-N1-d0").surface) == 1);
}

TEST_CASE("missing twist data is an error") {
    SncSurface s = registry_build("torus-chain-N2-d0").surface;
    s.find_curve("C1")->twist.reset();
    CHECK_THROWS_AS(build_rho_matrix(s), MissingTwist);
}

TEST_CASE("twisted 2-cycle kernel") {
    for (long long k = 0; k < 4; ++k) {
        ScenarioFile sc = registry_build("fujita", {{"k", std::to_string(k)}});
        CAPTURE(k);
        CHECK(h0_canonical_dimension(sc.surface) == (k == 0 ? 1 : 0));
        CHECK(check_residue_matching(sc.surface) == (k == 0));
    }
}

TEST_CASE("exact rank agrees with the floating-point oracle") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long long> kd(0, 3);
    for (int trial = 0; trial < 64; ++trial) {
        std::map<std::string, std::string> params{
            {"k1", std::to_string(kd(rng))}, {"k2", std::to_string(kd(rng))},
            {"k3", std::to_string(kd(rng))}, {"k4", std::to_string(kd(rng))}};
        RhoMatrix m = build_rho_matrix(registry_build("fujita-general", params).surface);
        CHECK(rank(m) == float_rank(m));
    }
}

TEST_CASE("kernel vectors actually annihilate rho") {
    RhoMatrix m = build_rho_matrix(registry_build("tetrahedron").surface);
    auto basis = kernel_basis(m);
    CHECK(basis.size() == m.column_ids.size() - rank(m));
    for (const auto& v : basis)
        for (const auto& row : m.rows) {
            GaussianRational dot;
            for (std::size_t c = 0; c < v.size(); ++c) dot = dot + row[c] * v[c];
            CHECK(dot.is_zero());
        }
}

TEST_CASE("h0 is invariant under component relabeling") {
    ScenarioFile sc = registry_build("fujita-k2");
    std::size_t before = h0_canonical_dimension(sc.surface);
    for (auto& comp : sc.surface.components) comp.id = "renamed-" + comp.id;
    for (auto& curve : sc.surface.double_curves)
        for (auto& side : curve.sides) side.component = "renamed-" + side.component;
    CHECK(h0_canonical_dimension(sc.surface) == before);
}
