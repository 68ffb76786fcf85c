#include <functional>
#include <map>

#include "snc/errors.hpp"
#include "snc/scenario.hpp"

namespace snc {

namespace {

GluingTwist default_twist() {
    GluingTwist t;
    t.residue_factor = GaussianRational(Rational(-1));
    return t;
}

CurveGeometry square_lattice() {
    CurveGeometry g;
    g.genus = 1;
    g.tau = GaussianRational{Rational(0), Rational(1)};
    return g;
}

LatticeAction rotation_power(long long k) {
    // z -> i^k z on the square lattice.
    LatticeAction r;
    r.m = {{{0, -1}, {1, 0}}};
    LatticeAction out;
    for (long long n = 0; n < ((k % 4) + 4) % 4; ++n) {
        LatticeAction next;
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                next.m[a][b] = r.m[a][0] * out.m[0][b] + r.m[a][1] * out.m[1][b];
        out = next;
    }
    return out;
}

/// Rational line D_ij between two plane components, with unit classes and the
/// standard folded twist.
DoubleCurve plane_line(const std::string& id, const std::string& ci, const std::string& cj,
                       const std::vector<std::string>& mark_ids) {
    DoubleCurve d;
    d.id = id;
    d.geometry.genus = 0;
    d.sides.push_back({ci, "", {1}, LineBundleClass::rational_curve(1)});
    d.sides.push_back({cj, "", {1}, LineBundleClass::rational_curve(1)});
    for (const auto& m : mark_ids)
        d.triple_marks.push_back({m, CurvePoint::labeled(id + ":" + m)});
    d.twist = default_twist();
    return d;
}

int levi_civita4(std::array<int, 4> p) {
    int s = 1;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            if (p[i] == p[j]) return 0;
            if (p[i] > p[j]) s = -s;
        }
    return s;
}

std::string line_id(int i, int j) {
    return "L" + std::to_string(std::min(i, j)) + std::to_string(std::max(i, j));
}

/// Configuration of four planes with a declared set of triple points; each
/// triple point lists its three plane indices.
SncSurface plane_configuration(const std::vector<std::array<int, 2>>& lines,
                               const std::vector<std::pair<std::string, std::array<int, 3>>>& triples,
                               bool tetra_sigma) {
    SncSurface s;
    for (int i = 0; i < 4; ++i)
        s.components.push_back(Component::projective_plane("H" + std::to_string(i)));

    // marks per line
    std::map<std::string, std::vector<std::string>> marks;
    for (const auto& [tid, comps] : triples) {
        marks[line_id(comps[0], comps[1])].push_back(tid);
        marks[line_id(comps[0], comps[2])].push_back(tid);
        marks[line_id(comps[1], comps[2])].push_back(tid);
    }
    for (const auto& [i, j] : lines)
        s.double_curves.push_back(plane_line(line_id(i, j), "H" + std::to_string(i),
                                             "H" + std::to_string(j), marks[line_id(i, j)]));

    for (const auto& [tid, comps] : triples) {
        TriplePoint t;
        t.id = tid;
        for (int a = 0; a < 3; ++a) {
            int m = comps[a];
            std::array<std::string, 2> curves{line_id(m, comps[(a + 1) % 3]),
                                              line_id(m, comps[(a + 2) % 3])};
            if (curves[0] > curves[1]) std::swap(curves[0], curves[1]);
            t.incident.push_back({"H" + std::to_string(m), curves});
        }
        int value = 1;
        if (tetra_sigma) {
            int missing = 0 + 1 + 2 + 3 - comps[0] - comps[1] - comps[2];
            value = levi_civita4({comps[0], comps[1], comps[2], missing});
        }
        t.sigma[{0, 1, 2}] = value;
        s.triple_points.push_back(std::move(t));
    }
    return s;
}

BlowupPlan two_per_line_plan(const SncSurface& s) {
    BlowupPlan plan;
    for (const auto& d : s.double_curves)
        plan.steps.push_back({d.id,
                              {CurvePoint::labeled(d.id + ":b1"),
                               CurvePoint::labeled(d.id + ":b2")},
                              BlowupMode::BothSides,
                              ""});
    return plan;
}

// ---- individual builders -------------------------------------------------

ScenarioFile build_tetrahedron(bool blown) {
    ScenarioFile s;
    s.name = blown ? "tetra-blown" : "tetrahedron";
    s.description = blown
                        ? "Four planes in general position, every double line blown up "
                          "at two points in both adjacent components"
                        : "Four planes in general position: six double lines, four "
                          "triple points";
    std::vector<std::array<int, 2>> lines = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    s.surface = plane_configuration(lines,
                                    {{"p3", {0, 1, 2}},
                                     {"p2", {0, 1, 3}},
                                     {"p1", {0, 2, 3}},
                                     {"p0", {1, 2, 3}}},
                                    true);
    s.expected.residue_ok = true;
    s.expected.h0_dim = 1;
    s.expected.anticanonical_all = true;
    if (blown) {
        s.plan = two_per_line_plan(s.surface);
        s.expected.d_semistable = true;
        s.expected.euler_fiber = 24;
        s.expected.classification = "K3";
        for (const auto& d : s.surface.double_curves)
            s.expected.collective_degrees[d.id] = 0;
    } else {
        s.expected.d_semistable = false;
        s.expected.classification = "Unknown";
        for (const auto& d : s.surface.double_curves)
            s.expected.collective_degrees[d.id] = 4;
    }
    return s;
}

ScenarioFile build_two_triple(bool repaired) {
    ScenarioFile s;
    s.name = repaired ? "two-triple-repaired" : "two-triple";
    std::vector<std::pair<std::string, std::array<int, 3>>> triples = {
        {"p1", {0, 1, 2}}, {"p2", {1, 2, 3}}};
    if (!repaired) {
        s.description = "Four planes with five declared double lines and two triple "
                        "points, taken at face value";
        s.surface = plane_configuration({{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}, triples,
                                        false);
        s.expected.d_semistable = false;
        s.expected.anticanonical_all = false; // H0 and H3 carry only two lines
        s.expected.classification = "Unknown";
        s.expected.collective_degrees = {
            {"L01", 3}, {"L02", 3}, {"L12", 4}, {"L13", 3}, {"L23", 3}};
    } else {
        s.description = "Completion of the five-line configuration: the sixth line and "
                        "the two further triple points forced by incidence, then two "
                        "both-sided blow-up centers per line";
        triples.push_back({"q1", {0, 1, 3}});
        triples.push_back({"q2", {0, 2, 3}});
        s.surface = plane_configuration(
            {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, triples, false);
        s.plan = two_per_line_plan(s.surface);
        s.expected.d_semistable = true;
        s.expected.anticanonical_all = true;
        s.expected.euler_fiber = 24;
        s.expected.classification = "K3";
    }
    s.expected.residue_ok = true;
    s.expected.h0_dim = 1;
    return s;
}

ScenarioFile build_three_triple(bool repaired) {
    ScenarioFile s;
    s.name = repaired ? "three-triple-repaired" : "three-triple";
    std::vector<std::pair<std::string, std::array<int, 3>>> triples = {
        {"p1", {0, 1, 3}}, {"p2", {0, 2, 3}}, {"p3", {1, 2, 3}}};
    std::vector<std::array<int, 2>> lines = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    if (!repaired) {
        s.description = "Four planes, six double lines, only three declared triple "
                        "points, taken at face value";
        s.surface = plane_configuration(lines, triples, false);
        s.expected.d_semistable = false;
        s.expected.classification = "Unknown";
        s.expected.collective_degrees = {
            {"L01", 3}, {"L02", 3}, {"L03", 4}, {"L12", 3}, {"L13", 4}, {"L23", 4}};
    } else {
        s.description = "Completion of the three-triple-point configuration: the fourth "
                        "triple point forced by incidence, then two both-sided blow-up "
                        "centers per line";
        triples.push_back({"p0", {0, 1, 2}});
        s.surface = plane_configuration(lines, triples, false);
        s.plan = two_per_line_plan(s.surface);
        s.expected.d_semistable = true;
        s.expected.euler_fiber = 24;
        s.expected.classification = "K3";
    }
    s.expected.residue_ok = true;
    s.expected.h0_dim = 1;
    s.expected.anticanonical_all = true;
    return s;
}

/// Elliptic curve side on a plane blown at n points: class 3H - E1 - ... - En.
CurveSide cubic_side(const std::string& comp, int n, long long normal_degree) {
    CurveSide s;
    s.component = comp;
    s.curve_class.assign(static_cast<std::size_t>(n) + 1, -1);
    s.curve_class[0] = 3;
    s.normal_class = LineBundleClass::elliptic(normal_degree);
    return s;
}

ScenarioFile build_k3_double(long long d) {
    ScenarioFile s;
    s.name = "k3-double-d" + std::to_string(d);
    s.description = "Two rational surfaces glued along an anticanonical elliptic curve, "
                    "opposite normal degrees " + std::to_string(3 * d);
    s.surface.components.push_back(
        Component::projective_plane("X1", static_cast<int>(9 + 3 * d)));
    s.surface.components.push_back(
        Component::projective_plane("X2", static_cast<int>(9 - 3 * d)));

    DoubleCurve c;
    c.id = "C";
    c.geometry = square_lattice();
    c.sides.push_back(cubic_side("X1", static_cast<int>(9 + 3 * d), -3 * d));
    c.sides.push_back(cubic_side("X2", static_cast<int>(9 - 3 * d), 3 * d));
    c.twist = default_twist();
    s.surface.double_curves.push_back(std::move(c));

    s.expected.d_semistable = true;
    s.expected.residue_ok = true;
    s.expected.h0_dim = 1;
    s.expected.euler_fiber = 24;
    s.expected.classification = "K3";
    s.expected.anticanonical_all = true;
    s.expected.collective_degrees = {{"C", 0}};
    s.expected.component_euler = {{"X1", 12 + 3 * d}, {"X2", 12 - 3 * d}};
    return s;
}

CurveSide ruled_side(const std::string& comp, bool at_infinity, long long d) {
    CurveSide s;
    s.component = comp;
    s.curve_class = at_infinity ? std::vector<long long>{0, 1} : std::vector<long long>{1, 0};
    s.normal_class = LineBundleClass::elliptic(at_infinity ? -d : d);
    return s;
}

ScenarioFile build_torus_chain(int n, long long d) {
    ScenarioFile s;
    s.name = "torus-chain-N" + std::to_string(n) + "-d" + std::to_string(d);
    s.description = "Cycle of " + std::to_string(n) + " elliptic ruled surfaces, twisting "
                    "degree " + std::to_string(d);
    for (int i = 1; i <= n; ++i)
        s.surface.components.push_back(Component::ruled_elliptic(
            "Y" + std::to_string(i), d, square_lattice()));
    for (int i = 1; i <= n; ++i) {
        DoubleCurve c;
        c.id = "C" + std::to_string(i);
        c.geometry = square_lattice();
        int next = i % n + 1;
        c.sides.push_back(ruled_side("Y" + std::to_string(i), true, d));
        c.sides.push_back(ruled_side("Y" + std::to_string(next), false, d));
        if (i == next) { // N = 1: the section at infinity is glued to the zero section
            c.sides[0].label = "a";
            c.sides[1].label = "b";
        }
        c.twist = default_twist();
        s.surface.double_curves.push_back(std::move(c));
    }
    s.declared_b1 = d == 0 ? 4 : 3;
    s.expected.d_semistable = true;
    s.expected.residue_ok = true;
    s.expected.h0_dim = 1;
    s.expected.euler_fiber = 0;
    s.expected.anticanonical_all = true;
    s.expected.classification = d == 0 ? "ComplexTorus" : "PrimaryKodaira";
    return s;
}

ScenarioFile build_typeII_chain(int n) {
    constexpr long long d = 1;
    ScenarioFile s;
    s.name = "typeII-chain-N" + std::to_string(n);
    s.description = "Chain of " + std::to_string(n) + " surfaces: two rational ends glued "
                    "through elliptic ruled middles";
    s.surface.components.push_back(
        Component::projective_plane("X1", static_cast<int>(9 + 3 * d)));
    for (int i = 2; i < n; ++i)
        s.surface.components.push_back(Component::ruled_elliptic(
            "Y" + std::to_string(i), 3 * d, square_lattice()));
    std::string last = "X" + std::to_string(n);
    s.surface.components.push_back(
        Component::projective_plane(last, static_cast<int>(9 - 3 * d)));

    for (int i = 1; i < n; ++i) {
        DoubleCurve c;
        c.id = "C" + std::to_string(i);
        c.geometry = square_lattice();
        if (i == 1)
            c.sides.push_back(cubic_side("X1", static_cast<int>(9 + 3 * d), -3 * d));
        else
            c.sides.push_back(ruled_side("Y" + std::to_string(i), true, 3 * d));
        if (i + 1 == n)
            c.sides.push_back(cubic_side(last, static_cast<int>(9 - 3 * d), 3 * d));
        else
            c.sides.push_back(ruled_side("Y" + std::to_string(i + 1), false, 3 * d));
        c.twist = default_twist();
        s.surface.double_curves.push_back(std::move(c));
    }
    s.expected.d_semistable = true;
    s.expected.residue_ok = true;
    s.expected.h0_dim = 1;
    s.expected.euler_fiber = 24;
    s.expected.classification = "K3";
    s.expected.anticanonical_all = true;
    return s;
}

ScenarioFile build_fujita(long long k) {
    k = ((k % 4) + 4) % 4;
    ScenarioFile s;
    s.name = "fujita";
    s.description = "Two trivial elliptic ruled surfaces glued in a cycle, one gluing "
                    "rotated by i^" + std::to_string(k);
    for (int i = 1; i <= 2; ++i)
        s.surface.components.push_back(Component::ruled_elliptic(
            "Y" + std::to_string(i), 0, square_lattice()));
    DoubleCurve a;
    a.id = "CA";
    a.geometry = square_lattice();
    a.sides.push_back(ruled_side("Y1", true, 0));
    a.sides.push_back(ruled_side("Y2", false, 0));
    a.twist = default_twist();
    s.surface.double_curves.push_back(std::move(a));

    DoubleCurve b;
    b.id = "CB";
    b.geometry = square_lattice();
    b.sides.push_back(ruled_side("Y2", true, 0));
    b.sides.push_back(ruled_side("Y1", false, 0));
    GluingTwist t;
    t.residue_factor = -GaussianRational::i_power(k);
    t.lattice_action = rotation_power(k);
    b.twist = t;
    s.surface.double_curves.push_back(std::move(b));

    s.declared_b1 = 4;
    s.expected.d_semistable = true;
    s.expected.residue_ok = (k == 0);
    s.expected.h0_dim = (k == 0) ? 1 : 0;
    s.expected.euler_fiber = 0;
    s.expected.anticanonical_all = true;
    s.expected.classification = (k == 0) ? "ComplexTorus" : "Unknown";
    return s;
}

ScenarioFile build_fujita_general(std::array<long long, 4> k) {
    ScenarioFile s;
    s.name = "fujita-general";
    s.description = "Cycle of four trivial elliptic ruled surfaces with rotation twists "
                    "i^k1, ..., i^k4";
    long long ksum = 0;
    bool all_zero = true;
    for (int i = 1; i <= 4; ++i) {
        k[static_cast<std::size_t>(i - 1)] = ((k[static_cast<std::size_t>(i - 1)] % 4) + 4) % 4;
        ksum += k[static_cast<std::size_t>(i - 1)];
        if (k[static_cast<std::size_t>(i - 1)] != 0) all_zero = false;
        s.surface.components.push_back(Component::ruled_elliptic(
            "Y" + std::to_string(i), 0, square_lattice()));
    }
    for (int i = 1; i <= 4; ++i) {
        DoubleCurve c;
        c.id = "C" + std::to_string(i);
        c.geometry = square_lattice();
        c.sides.push_back(ruled_side("Y" + std::to_string(i), true, 0));
        c.sides.push_back(ruled_side("Y" + std::to_string(i % 4 + 1), false, 0));
        GluingTwist t;
        t.residue_factor = -GaussianRational::i_power(k[static_cast<std::size_t>(i - 1)]);
        t.lattice_action = rotation_power(k[static_cast<std::size_t>(i - 1)]);
        c.twist = t;
        s.surface.double_curves.push_back(std::move(c));
    }
    s.declared_b1 = 4;
    s.expected.d_semistable = true;
    s.expected.residue_ok = all_zero;
    s.expected.h0_dim = (ksum % 4 == 0) ? 1 : 0;
    s.expected.euler_fiber = 0;
    s.expected.classification = all_zero ? "ComplexTorus" : "Unknown";
    return s;
}

/// Two planes and a quadric: the section-of-the-quadric configuration.
SncSurface quadric_surface() {
    SncSurface s;
    s.components.push_back(Component::projective_plane("H1"));
    s.components.push_back(Component::projective_plane("H2"));
    s.components.push_back(Component::quadric("H3"));

    auto conic = [](const std::string& id, const std::string& plane) {
        DoubleCurve d;
        d.id = id;
        d.geometry.genus = 0;
        d.sides.push_back({plane, "", {2}, LineBundleClass::rational_curve(4)});
        d.sides.push_back({"H3", "", {1, 1}, LineBundleClass::rational_curve(2)});
        d.triple_marks.push_back({"t1", CurvePoint::labeled(id + ":t1")});
        d.triple_marks.push_back({"t2", CurvePoint::labeled(id + ":t2")});
        d.twist = default_twist();
        return d;
    };
    s.double_curves.push_back(conic("C1", "H2"));
    s.double_curves.push_back(conic("C2", "H1"));

    DoubleCurve c3;
    c3.id = "C3";
    c3.geometry.genus = 0;
    c3.sides.push_back({"H1", "", {1}, LineBundleClass::rational_curve(1)});
    c3.sides.push_back({"H2", "", {1}, LineBundleClass::rational_curve(1)});
    c3.triple_marks.push_back({"t1", CurvePoint::labeled("C3:t1")});
    c3.triple_marks.push_back({"t2", CurvePoint::labeled("C3:t2")});
    c3.twist = default_twist();
    s.double_curves.push_back(std::move(c3));

    for (const std::string& tid : {"t1", "t2"}) {
        TriplePoint t;
        t.id = tid;
        t.incident.push_back({"H1", {"C2", "C3"}});
        t.incident.push_back({"H2", {"C1", "C3"}});
        t.incident.push_back({"H3", {"C1", "C2"}});
        t.sigma[{0, 1, 2}] = 1;
        s.triple_points.push_back(std::move(t));
    }
    return s;
}

std::vector<CurvePoint> labeled_points(const std::string& prefix, int count) {
    std::vector<CurvePoint> out;
    for (int i = 1; i <= count; ++i)
        out.push_back(CurvePoint::labeled(prefix + std::to_string(i)));
    return out;
}

ScenarioFile build_quadric(const std::string& variant) {
    ScenarioFile s;
    s.name = "quadric-" + variant;
    s.surface = quadric_surface();
    s.expected.residue_ok = true;
    s.expected.h0_dim = 1;
    s.expected.anticanonical_all = true;

    if (variant == "initial") {
        s.description = "Two planes and a quadric before any blow-up";
        s.expected.d_semistable = false;
        s.expected.classification = "Unknown";
        s.expected.collective_degrees = {{"C1", 8}, {"C2", 8}, {"C3", 4}};
        return s;
    }
    if (variant == "naive") {
        s.description = "Symmetric one-sided blow-up plan whose centers meet the triple "
                        "points, which breaks the gluing of the third line";
        auto p1 = labeled_points("P1-", 7);
        p1.push_back(CurvePoint::labeled("C1:t1")); // center on the triple locus
        s.plan.steps.push_back({"C3", labeled_points("P3-", 4), BlowupMode::OneSide, "H1"});
        s.plan.steps.push_back({"C1", p1, BlowupMode::OneSide, "H2"});
        s.plan.steps.push_back({"C2", labeled_points("P2-", 8), BlowupMode::OneSide, "H3"});
        s.expected.mismatch = true;
        return s;
    }
    // pipeline
    s.description = "Ordered one-sided blow-ups with centers away from the triple "
                    "points: first both planes, then the line in the once-blown plane";
    s.plan.steps.push_back({"C2", labeled_points("P2-", 8), BlowupMode::OneSide, "H1"});
    s.plan.steps.push_back({"C1", labeled_points("P1-", 8), BlowupMode::OneSide, "H2"});
    s.plan.steps.push_back({"C3", labeled_points("P3-", 4), BlowupMode::OneSide, "H1"});
    s.expected.d_semistable = true;
    s.expected.euler_fiber = 24;
    s.expected.classification = "K3";
    s.expected.collective_degrees = {{"C1", 0}, {"C2", 0}, {"C3", 0}};
    s.expected.component_euler = {{"H1", 15}, {"H2", 11}, {"H3", 4}};
    return s;
}

long long param_int(const std::map<std::string, std::string>& params, const std::string& key,
                    long long fallback) {
    auto it = params.find(key);
    if (it == params.end()) return fallback;
    try {
        return std::stoll(it->second);
    } catch (...) {
        throw ParseError("parameter '" + key + "' is not an integer: " + it->second);
    }
}

} // namespace

std::vector<std::string> registry_names() {
    std::vector<std::string> names = {
        "tetrahedron",      "tetra-blown",          "two-triple",
        "two-triple-repaired", "three-triple",      "three-triple-repaired",
        "quadric-initial",  "quadric-naive",        "quadric-pipeline",
        "fujita",           "fujita-general",
    };
    for (int d = 0; d <= 3; ++d) names.push_back("k3-double-d" + std::to_string(d));
    for (int n = 1; n <= 3; ++n)
        for (int d = 0; d <= 3; ++d)
            names.push_back("torus-chain-N" + std::to_string(n) + "-d" + std::to_string(d));
    for (int n = 2; n <= 5; ++n) names.push_back("typeII-chain-N" + std::to_string(n));
    for (int k = 0; k <= 3; ++k) names.push_back("fujita-k" + std::to_string(k));
    std::sort(names.begin(), names.end());
    return names;
}

bool registry_has(const std::string& name) {
    auto names = registry_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

ScenarioFile registry_build(const std::string& name,
                            const std::map<std::string, std::string>& params) {
    if (name == "tetrahedron") return build_tetrahedron(false);
    if (name == "tetra-blown") return build_tetrahedron(true);
    if (name == "two-triple") return build_two_triple(false);
    if (name == "two-triple-repaired") return build_two_triple(true);
    if (name == "three-triple") return build_three_triple(false);
    if (name == "three-triple-repaired") return build_three_triple(true);
    if (name == "quadric-initial") return build_quadric("initial");
    if (name == "quadric-naive") return build_quadric("naive");
    if (name == "quadric-pipeline") return build_quadric("pipeline");
    if (name == "fujita") return build_fujita(param_int(params, "k", 0));
    if (name == "fujita-general")
        return build_fujita_general({param_int(params, "k1", 1), param_int(params, "k2", 1),
                                     param_int(params, "k3", 1), param_int(params, "k4", 1)});
    for (int k = 0; k <= 3; ++k)
        if (name == "fujita-k" + std::to_string(k)) {
            ScenarioFile s = build_fujita(k);
            s.name = name;
            return s;
        }
    for (int d = 0; d <= 3; ++d)
        if (name == "k3-double-d" + std::to_string(d)) return build_k3_double(d);
    for (int n = 1; n <= 3; ++n)
        for (int d = 0; d <= 3; ++d)
            if (name == "torus-chain-N" + std::to_string(n) + "-d" + std::to_string(d))
                return build_torus_chain(n, d);
    for (int n = 2; n <= 5; ++n)
        if (name == "typeII-chain-N" + std::to_string(n)) return build_typeII_chain(n);
    throw SemanticError("unknown scenario '" + name + "'");
}

} // namespace snc
