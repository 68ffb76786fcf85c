#include "snc/scenario.hpp"

#include <algorithm>
#include <set>

#include "snc/checks.hpp"
#include "snc/errors.hpp"

namespace snc {

using nlohmann::json;

namespace {

void check_keys(const json& j, const std::set<std::string>& allowed,
                const std::string& where) {
    if (!j.is_object()) throw SchemaError(where + ": expected an object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key()))
            throw SchemaError(where + ": unknown field '" + it.key() + "'");
}

const json& need(const json& j, const std::string& key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(where + ": missing field '" + key + "'");
    return *it;
}

std::string need_string(const json& j, const std::string& key, const std::string& where) {
    const json& v = need(j, key, where);
    if (!v.is_string()) throw SchemaError(where + "." + key + ": expected a string");
    return v.get<std::string>();
}

long long need_int(const json& j, const std::string& key, const std::string& where) {
    const json& v = need(j, key, where);
    if (!v.is_number_integer()) throw SchemaError(where + "." + key + ": expected an integer");
    return v.get<long long>();
}

Rational field_rational(const json& v, const std::string& where) {
    if (!v.is_string()) throw SchemaError(where + ": rationals are \"p/q\" strings");
    try {
        return parse_rational(v.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what());
    }
}

GaussianRational field_complex(const json& v, const std::string& where) {
    if (!v.is_array() || v.size() != 2)
        throw SchemaError(where + ": complex numbers are two-element arrays");
    return {field_rational(v[0], where + "[0]"), field_rational(v[1], where + "[1]")};
}

CurvePoint field_point(const json& v, int genus, const std::string& where) {
    if (v.is_string()) {
        if (genus == 1)
            throw SchemaError(where + ": genus-1 points need lattice coordinates");
        return CurvePoint::labeled(v.get<std::string>());
    }
    if (v.is_array() && v.size() == 2)
        return CurvePoint::at(field_rational(v[0], where + "[0]"),
                              field_rational(v[1], where + "[1]"));
    throw SchemaError(where + ": expected a label or a two-element rational array");
}

std::vector<long long> field_int_vector(const json& v, const std::string& where) {
    if (!v.is_array()) throw SchemaError(where + ": expected an integer array");
    std::vector<long long> out;
    for (const auto& e : v) {
        if (!e.is_number_integer()) throw SchemaError(where + ": expected integers");
        out.push_back(e.get<long long>());
    }
    return out;
}

Component parse_component(const json& j) {
    const std::string where = "components[" + need_string(j, "id", "components") + "]";
    std::string kind = need_string(j, "kind", where);
    if (kind == "projective_plane") {
        check_keys(j, {"id", "kind", "preblown"}, where);
        long long preblown = j.contains("preblown") ? need_int(j, "preblown", where) : 0;
        return Component::projective_plane(j["id"].get<std::string>(),
                                           static_cast<int>(preblown));
    }
    if (kind == "quadric") {
        check_keys(j, {"id", "kind"}, where);
        return Component::quadric(j["id"].get<std::string>());
    }
    if (kind == "ruled_elliptic") {
        check_keys(j, {"id", "kind", "degree", "tau"}, where);
        CurveGeometry base;
        base.genus = 1;
        base.tau = field_complex(need(j, "tau", where), where + ".tau");
        return Component::ruled_elliptic(j["id"].get<std::string>(),
                                         need_int(j, "degree", where), base);
    }
    if (kind == "declared") {
        check_keys(j, {"id", "kind", "class_basis", "canonical_class", "euler_char",
                       "intersection_form"},
                   where);
        std::vector<std::string> basis;
        for (const auto& b : need(j, "class_basis", where)) basis.push_back(b.get<std::string>());
        std::optional<std::vector<std::vector<long long>>> form;
        if (j.contains("intersection_form")) {
            form.emplace();
            for (const auto& row : j["intersection_form"])
                form->push_back(field_int_vector(row, where + ".intersection_form"));
        }
        return Component::declared(j["id"].get<std::string>(), std::move(basis),
                                   field_int_vector(need(j, "canonical_class", where),
                                                    where + ".canonical_class"),
                                   need_int(j, "euler_char", where), std::move(form));
    }
    throw SchemaError(where + ": unknown component kind '" + kind + "'");
}

DoubleCurve parse_curve(const json& j) {
    const std::string where = "double_curves[" + need_string(j, "id", "double_curves") + "]";
    check_keys(j, {"id", "genus", "tau", "sides", "triple_marks", "twist"}, where);
    DoubleCurve d;
    d.id = j["id"].get<std::string>();
    d.geometry.genus = static_cast<int>(need_int(j, "genus", where));
    if (d.geometry.genus == 1)
        d.geometry.tau = field_complex(need(j, "tau", where), where + ".tau");
    else if (j.contains("tau"))
        throw SchemaError(where + ": tau is only valid on genus-1 curves");

    for (const auto& sj : need(j, "sides", where)) {
        const std::string swhere = where + ".sides";
        check_keys(sj, {"component", "label", "curve_class", "normal_degree", "normal_point"},
                   swhere);
        CurveSide s;
        s.component = need_string(sj, "component", swhere);
        s.label = sj.contains("label") ? sj["label"].get<std::string>() : "";
        s.curve_class = field_int_vector(need(sj, "curve_class", swhere),
                                         swhere + ".curve_class");
        long long deg = need_int(sj, "normal_degree", swhere);
        if (d.geometry.genus == 0) {
            if (sj.contains("normal_point"))
                throw SchemaError(swhere + ": normal_point is only valid on genus-1 curves");
            s.normal_class = LineBundleClass::rational_curve(deg);
        } else {
            Rational a(0), b(0);
            if (sj.contains("normal_point")) {
                CurvePoint p = field_point(sj["normal_point"], 1, swhere + ".normal_point");
                a = p.a;
                b = p.b;
            }
            s.normal_class = LineBundleClass::elliptic(deg, a, b);
        }
        d.sides.push_back(std::move(s));
    }
    if (d.sides.size() == 2 && d.sides[0].label.empty() && d.sides[1].label.empty() &&
        d.sides[0].component == d.sides[1].component) {
        d.sides[0].label = "a";
        d.sides[1].label = "b";
    }

    if (j.contains("triple_marks"))
        for (const auto& mj : j["triple_marks"]) {
            const std::string mwhere = where + ".triple_marks";
            check_keys(mj, {"triple_point", "location"}, mwhere);
            d.triple_marks.push_back(
                {need_string(mj, "triple_point", mwhere),
                 field_point(need(mj, "location", mwhere), d.geometry.genus,
                             mwhere + ".location")});
        }

    if (j.contains("twist")) {
        const json& tj = j["twist"];
        const std::string twhere = where + ".twist";
        check_keys(tj, {"residue_factor", "lattice_action"}, twhere);
        GluingTwist t;
        t.residue_factor = field_complex(need(tj, "residue_factor", twhere),
                                         twhere + ".residue_factor");
        if (tj.contains("lattice_action")) {
            const json& m = tj["lattice_action"];
            if (!m.is_array() || m.size() != 2)
                throw SchemaError(twhere + ".lattice_action: expected a 2x2 integer matrix");
            for (int r = 0; r < 2; ++r) {
                auto row = field_int_vector(m[r], twhere + ".lattice_action");
                if (row.size() != 2)
                    throw SchemaError(twhere + ".lattice_action: expected a 2x2 integer matrix");
                t.lattice_action.m[r][0] = row[0];
                t.lattice_action.m[r][1] = row[1];
            }
        }
        d.twist = t;
    }
    return d;
}

TriplePoint parse_triple(const json& j) {
    const std::string where = "triple_points[" + need_string(j, "id", "triple_points") + "]";
    check_keys(j, {"id", "incident", "sigma"}, where);
    TriplePoint t;
    t.id = j["id"].get<std::string>();
    for (const auto& ij : need(j, "incident", where)) {
        check_keys(ij, {"component", "curves"}, where + ".incident");
        TripleIncidence inc;
        inc.component = need_string(ij, "component", where + ".incident");
        const json& cs = need(ij, "curves", where + ".incident");
        if (!cs.is_array() || cs.size() != 2)
            throw SchemaError(where + ".incident.curves: expected two curve ids");
        inc.curves = {cs[0].get<std::string>(), cs[1].get<std::string>()};
        t.incident.push_back(std::move(inc));
    }
    if (j.contains("sigma"))
        for (auto it = j["sigma"].begin(); it != j["sigma"].end(); ++it) {
            const std::string& key = it.key();
            if (key.size() != 3 || !it.value().is_number_integer())
                throw SchemaError(where + ".sigma: keys are index triples like \"012\"");
            std::array<int, 3> perm{key[0] - '0', key[1] - '0', key[2] - '0'};
            t.sigma[perm] = it.value().get<int>();
        }
    return t;
}

BlowupStep parse_step(const json& j, const SncSurface& surface) {
    const std::string where = "blowup_plan";
    check_keys(j, {"curve", "points", "mode", "component"}, where);
    BlowupStep step;
    step.double_curve_id = need_string(j, "curve", where);
    const DoubleCurve* curve = surface.find_curve(step.double_curve_id);
    if (!curve)
        throw SemanticError(where + ": step references missing curve '" +
                            step.double_curve_id + "'");
    for (const auto& pj : need(j, "points", where))
        step.points.push_back(field_point(pj, curve->geometry.genus, where + ".points"));
    std::string mode = need_string(j, "mode", where);
    if (mode == "both_sides") {
        step.mode = BlowupMode::BothSides;
        if (j.contains("component"))
            throw SchemaError(where + ": component is only valid for one_side steps");
    } else if (mode == "one_side") {
        step.mode = BlowupMode::OneSide;
        step.component = need_string(j, "component", where);
    } else {
        throw SchemaError(where + ": unknown mode '" + mode + "'");
    }
    return step;
}

ExpectedBlock parse_expected(const json& j) {
    const std::string where = "expected";
    check_keys(j,
               {"d_semistable", "residue_ok", "mismatch", "anticanonical_all", "h0_dim",
                "euler_fiber", "classification", "collective_degrees", "component_euler"},
               where);
    ExpectedBlock e;
    if (j.contains("d_semistable")) e.d_semistable = j["d_semistable"].get<bool>();
    if (j.contains("residue_ok")) e.residue_ok = j["residue_ok"].get<bool>();
    if (j.contains("mismatch")) e.mismatch = j["mismatch"].get<bool>();
    if (j.contains("anticanonical_all"))
        e.anticanonical_all = j["anticanonical_all"].get<bool>();
    if (j.contains("h0_dim")) e.h0_dim = j["h0_dim"].get<long long>();
    if (j.contains("euler_fiber")) e.euler_fiber = j["euler_fiber"].get<long long>();
    if (j.contains("classification"))
        e.classification = j["classification"].get<std::string>();
    if (j.contains("collective_degrees"))
        for (auto it = j["collective_degrees"].begin(); it != j["collective_degrees"].end();
             ++it)
            e.collective_degrees[it.key()] = it.value().get<long long>();
    if (j.contains("component_euler"))
        for (auto it = j["component_euler"].begin(); it != j["component_euler"].end(); ++it)
            e.component_euler[it.key()] = it.value().get<long long>();
    return e;
}

} // namespace

ScenarioFile parse_scenario(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    check_keys(j,
               {"schema_version", "name", "description", "components", "double_curves",
                "triple_points", "blowup_plan", "declared_b1", "expected"},
               "scenario");

    ScenarioFile s;
    s.schema_version = static_cast<int>(need_int(j, "schema_version", "scenario"));
    if (s.schema_version != 1)
        throw SchemaError("unsupported schema_version " + std::to_string(s.schema_version));
    s.name = need_string(j, "name", "scenario");
    if (j.contains("description")) s.description = j["description"].get<std::string>();

    for (const auto& cj : need(j, "components", "scenario"))
        s.surface.components.push_back(parse_component(cj));
    for (const auto& dj : need(j, "double_curves", "scenario"))
        s.surface.double_curves.push_back(parse_curve(dj));
    if (j.contains("triple_points"))
        for (const auto& tj : j["triple_points"])
            s.surface.triple_points.push_back(parse_triple(tj));

    // Referential integrity beyond what validate_structure diagnoses.
    for (const auto& d : s.surface.double_curves)
        for (const auto& side : d.sides)
            if (!s.surface.find_component(side.component))
                throw SemanticError("curve '" + d.id + "' references missing component '" +
                                    side.component + "'");

    if (j.contains("blowup_plan"))
        for (const auto& bj : j["blowup_plan"])
            s.plan.steps.push_back(parse_step(bj, s.surface));
    if (j.contains("declared_b1"))
        s.declared_b1 = static_cast<int>(j["declared_b1"].get<long long>());
    if (j.contains("expected")) s.expected = parse_expected(j["expected"]);
    return s;
}

namespace {

json point_json(const CurvePoint& p) {
    if (!p.has_coords) return p.label;
    return json::array({format_rational(p.a), format_rational(p.b)});
}

json complex_json(const GaussianRational& z) {
    return json::array({format_rational(z.re), format_rational(z.im)});
}

} // namespace

json scenario_json(const ScenarioFile& s) {
    json j;
    j["schema_version"] = s.schema_version;
    j["name"] = s.name;
    if (!s.description.empty()) j["description"] = s.description;

    j["components"] = json::array();
    for (const auto& c : s.surface.components) {
        json cj;
        cj["id"] = c.id;
        switch (c.kind) {
        case ComponentKind::ProjectivePlane:
            cj["kind"] = "projective_plane";
            if (c.blowup_count > 0) cj["preblown"] = c.blowup_count;
            break;
        case ComponentKind::Quadric:
            cj["kind"] = "quadric";
            break;
        case ComponentKind::RuledElliptic:
            cj["kind"] = "ruled_elliptic";
            cj["degree"] = c.ruled_degree;
            cj["tau"] = complex_json(c.base.tau);
            break;
        case ComponentKind::Declared:
            cj["kind"] = "declared";
            cj["class_basis"] = c.class_basis;
            cj["canonical_class"] = c.canonical_class;
            cj["euler_char"] = c.euler_char;
            if (c.declared_form) cj["intersection_form"] = *c.declared_form;
            break;
        }
        j["components"].push_back(cj);
    }

    j["double_curves"] = json::array();
    for (const auto& d : s.surface.double_curves) {
        json dj;
        dj["id"] = d.id;
        dj["genus"] = d.geometry.genus;
        if (d.geometry.genus == 1) dj["tau"] = complex_json(d.geometry.tau);
        dj["sides"] = json::array();
        for (const auto& side : d.sides) {
            json sj;
            sj["component"] = side.component;
            if (!side.label.empty()) sj["label"] = side.label;
            sj["curve_class"] = side.curve_class;
            sj["normal_degree"] = side.normal_class.degree;
            if (d.geometry.genus == 1 &&
                !(side.normal_class.a == Rational(0) && side.normal_class.b == Rational(0)))
                sj["normal_point"] = json::array({format_rational(side.normal_class.a),
                                                  format_rational(side.normal_class.b)});
            dj["sides"].push_back(sj);
        }
        if (!d.triple_marks.empty()) {
            dj["triple_marks"] = json::array();
            for (const auto& m : d.triple_marks)
                dj["triple_marks"].push_back(
                    {{"triple_point", m.triple_point}, {"location", point_json(m.location)}});
        }
        if (d.twist) {
            json tj;
            tj["residue_factor"] = complex_json(d.twist->residue_factor);
            if (!(d.twist->lattice_action == LatticeAction{}))
                tj["lattice_action"] =
                    json::array({json::array({d.twist->lattice_action.m[0][0],
                                              d.twist->lattice_action.m[0][1]}),
                                 json::array({d.twist->lattice_action.m[1][0],
                                              d.twist->lattice_action.m[1][1]})});
            dj["twist"] = tj;
        }
        j["double_curves"].push_back(dj);
    }

    if (!s.surface.triple_points.empty()) {
        j["triple_points"] = json::array();
        for (const auto& t : s.surface.triple_points) {
            json tj;
            tj["id"] = t.id;
            tj["incident"] = json::array();
            for (const auto& inc : t.incident)
                tj["incident"].push_back({{"component", inc.component},
                                          {"curves", {inc.curves[0], inc.curves[1]}}});
            if (!t.sigma.empty()) {
                json sj = json::object();
                for (const auto& [perm, v] : t.sigma) {
                    std::string key;
                    for (int idx : perm) key += static_cast<char>('0' + idx);
                    sj[key] = v;
                }
                tj["sigma"] = sj;
            }
            j["triple_points"].push_back(tj);
        }
    }

    if (!s.plan.steps.empty()) {
        j["blowup_plan"] = json::array();
        for (const auto& step : s.plan.steps) {
            json bj;
            bj["curve"] = step.double_curve_id;
            bj["points"] = json::array();
            for (const auto& p : step.points) bj["points"].push_back(point_json(p));
            if (step.mode == BlowupMode::BothSides) {
                bj["mode"] = "both_sides";
            } else {
                bj["mode"] = "one_side";
                bj["component"] = step.component;
            }
            j["blowup_plan"].push_back(bj);
        }
    }

    if (s.declared_b1) j["declared_b1"] = *s.declared_b1;

    json e = json::object();
    const ExpectedBlock& x = s.expected;
    if (x.d_semistable) e["d_semistable"] = *x.d_semistable;
    if (x.residue_ok) e["residue_ok"] = *x.residue_ok;
    if (x.mismatch) e["mismatch"] = *x.mismatch;
    if (x.anticanonical_all) e["anticanonical_all"] = *x.anticanonical_all;
    if (x.h0_dim) e["h0_dim"] = *x.h0_dim;
    if (x.euler_fiber) e["euler_fiber"] = *x.euler_fiber;
    if (x.classification) e["classification"] = *x.classification;
    if (!x.collective_degrees.empty()) e["collective_degrees"] = x.collective_degrees;
    if (!x.component_euler.empty()) e["component_euler"] = x.component_euler;
    if (!e.empty()) j["expected"] = e;
    return j;
}

std::string serialize_scenario(const ScenarioFile& s) { return scenario_json(s).dump(2); }

CheckOutcome run_check(const ScenarioFile& scenario) {
    CheckOutcome out;
    out.mismatches = detect_mismatch(scenario.surface, scenario.plan);
    if (!out.mismatches.empty()) {
        out.exit_code = 3;
        out.final_surface = scenario.surface;
        return out;
    }

    auto [final_surface, log] = run_plan(scenario.surface, scenario.plan);
    (void)log;
    out.final_surface = std::move(final_surface);
    out.report = full_report(out.final_surface, scenario.declared_b1);

    const ExpectedBlock& e = scenario.expected;
    auto fail = [&out](const std::string& msg) { out.assertion_failures.push_back(msg); };
    auto check_flag = [&fail](const std::optional<bool>& want, bool got, const char* name) {
        if (want && *want != got)
            fail(std::string(name) + ": expected " + (*want ? "true" : "false"));
    };
    check_flag(e.d_semistable, out.report.d_semistable.ok, "d_semistable");
    check_flag(e.residue_ok, out.report.residue_ok, "residue_ok");
    if (e.mismatch && *e.mismatch)
        fail("mismatch: expected diagnostics but the plan was accepted");
    if (e.anticanonical_all) {
        bool all = std::all_of(out.report.anticanonical.begin(), out.report.anticanonical.end(),
                               [](const auto& kv) {
                                   return kv.second == AnticanonicalVerdict::Holds;
                               });
        if (all != *e.anticanonical_all) fail("anticanonical_all: mismatch");
    }
    if (e.h0_dim && *e.h0_dim != out.report.h0_dim)
        fail("h0_dim: expected " + std::to_string(*e.h0_dim) + ", got " +
             std::to_string(out.report.h0_dim));
    if (e.euler_fiber && *e.euler_fiber != out.report.chi_fiber)
        fail("euler_fiber: expected " + std::to_string(*e.euler_fiber) + ", got " +
             std::to_string(out.report.chi_fiber));
    if (e.classification && *e.classification != to_string(out.report.classification))
        fail("classification: expected " + *e.classification + ", got " +
             to_string(out.report.classification));
    for (const auto& [curve, deg] : e.collective_degrees) {
        auto it = out.report.collective.per_curve.find(curve);
        if (it == out.report.collective.per_curve.end())
            fail("collective_degrees: unknown curve '" + curve + "'");
        else if (it->second.degree != deg)
            fail("collective_degrees[" + curve + "]: expected " + std::to_string(deg) +
                 ", got " + std::to_string(it->second.degree));
    }
    for (const auto& [comp, chi] : e.component_euler) {
        const Component* c = out.final_surface.find_component(comp);
        if (!c)
            fail("component_euler: unknown component '" + comp + "'");
        else if (c->euler_char != chi)
            fail("component_euler[" + comp + "]: expected " + std::to_string(chi) + ", got " +
                 std::to_string(c->euler_char));
    }
    if (!out.assertion_failures.empty()) out.exit_code = 4;
    return out;
}

json outcome_json(const ScenarioFile& scenario, const CheckOutcome& outcome) {
    json j;
    j["scenario"] = scenario.name;
    j["exit_code"] = outcome.exit_code;
    if (outcome.exit_code == 3) {
        j["mismatch"] = json::array();
        for (const auto& m : outcome.mismatches)
            j["mismatch"].push_back(
                {{"curve", m.curve_id}, {"step", m.step_index}, {"message", m.message}});
        return j;
    }
    const SmoothingReport& r = outcome.report;
    j["structure_ok"] = r.structure_ok;
    if (!r.structure_diagnostics.empty()) j["structure_diagnostics"] = r.structure_diagnostics;
    json anti = json::object();
    for (const auto& [id, v] : r.anticanonical)
        anti[id] = v == AnticanonicalVerdict::Holds
                       ? "true"
                       : (v == AnticanonicalVerdict::Fails ? "false" : "unverifiable");
    j["anticanonical"] = anti;
    j["d_semistable"] = r.d_semistable.ok;
    if (!r.d_semistable.nontrivial_curves.empty())
        j["nontrivial_curves"] = r.d_semistable.nontrivial_curves;
    json coll = json::object();
    for (const auto& [id, cls] : r.collective.per_curve) {
        json c;
        c["degree"] = cls.degree;
        if (cls.genus == 1)
            c["jacobian_point"] =
                json::array({format_rational(cls.a), format_rational(cls.b)});
        coll[id] = c;
    }
    j["collective_classes"] = coll;
    j["residue_ok"] = r.residue_ok;
    j["h0_dim"] = r.h0_dim;
    j["euler_fiber"] = r.chi_fiber;
    j["classification"] = to_string(r.classification);
    if (!r.notes.empty()) j["notes"] = r.notes;
    if (!outcome.assertion_failures.empty())
        j["assertion_failures"] = outcome.assertion_failures;
    return j;
}

std::string outcome_text(const ScenarioFile& scenario, const CheckOutcome& outcome) {
    std::string s = "scenario: " + scenario.name + "\n";
    if (outcome.exit_code == 3) {
        s += "REJECTED: blow-up plan is incompatible with the gluing\n";
        for (const auto& m : outcome.mismatches)
            s += "  [step " + std::to_string(m.step_index) + "] " + m.message + "\n";
        return s;
    }
    const SmoothingReport& r = outcome.report;
    s += "structure:        " + std::string(r.structure_ok ? "ok" : "INVALID") + "\n";
    for (const auto& d : r.structure_diagnostics) s += "  - " + d + "\n";
    s += "anticanonical:    ";
    for (const auto& [id, v] : r.anticanonical)
        s += id + "=" +
             (v == AnticanonicalVerdict::Holds
                  ? "yes"
                  : (v == AnticanonicalVerdict::Fails ? "NO" : "unverifiable")) +
             " ";
    s += "\n";
    s += "d-semistable:     " + std::string(r.d_semistable.ok ? "yes" : "NO") + "\n";
    for (const auto& [id, cls] : r.collective.per_curve) {
        s += "  " + id + ": degree " + std::to_string(cls.degree);
        if (cls.genus == 1)
            s += " point (" + format_rational(cls.a) + ", " + format_rational(cls.b) + ")";
        s += "\n";
    }
    s += "residue matching: " + std::string(r.residue_ok ? "yes" : "NO") + "\n";
    s += "h0(K):            " + std::to_string(r.h0_dim) + "\n";
    s += "euler_fiber:      " + std::to_string(r.chi_fiber) + "\n";
    s += "classification:   " + to_string(r.classification) + "\n";
    for (const auto& n : r.notes) s += "note: " + n + "\n";
    for (const auto& a : outcome.assertion_failures) s += "ASSERTION FAILED: " + a + "\n";
    return s;
}

} // namespace snc
