#include <map>
#include <optional>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "snc/blowup.hpp"
#include "snc/identity_suite.hpp"
#include "snc/scenario.hpp"

namespace py = pybind11;
using StringMap = std::map<std::string, std::string>;

namespace {

/// Accepts either a registry name or raw scenario JSON.
snc::ScenarioFile load(const std::string& ref, const StringMap& params) {
    if (snc::registry_has(ref)) return snc::registry_build(ref, params);
    if (!params.empty())
        throw snc::ParseError("parameters only apply to built-in scenarios");
    return snc::parse_scenario(ref);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "checks for smoothability of normal crossing complex surfaces";

    py::register_exception<snc::Error>(m, "SncError");

    m.def("list_scenarios", &snc::registry_names, "names of the built-in scenarios");

    m.def(
        "scenario_json",
        [](const std::string& ref, const StringMap& params) {
            return snc::serialize_scenario(load(ref, params));
        },
        py::arg("ref"), py::arg("params") = StringMap{},
        "canonical JSON of a built-in scenario (or a normalization of the given JSON)");

    m.def(
        "validate",
        [](const std::string& ref) {
            return snc::validate_structure(load(ref, {}).surface);
        },
        py::arg("ref"), "structural diagnostics; empty when the surface is well-formed");

    m.def(
        "check",
        [](const std::string& ref, const StringMap& params) {
            snc::ScenarioFile sc = load(ref, params);
            return snc::outcome_json(sc, snc::run_check(sc)).dump(2);
        },
        py::arg("ref"), py::arg("params") = StringMap{},
        "run the full smoothability report, returned as a JSON string");

    m.def(
        "plan",
        [](const std::string& ref) {
            snc::ScenarioFile sc = load(ref, {});
            snc::SncSurface post = snc::run_plan(sc.surface, sc.plan).first;
            snc::PlannerResult r = snc::plan_blowups_to_trivialize(post);
            nlohmann::json j;
            j["feasible"] = r.plan.has_value();
            if (!r.plan) {
                j["obstruction"] = r.obstruction;
                return j.dump(2);
            }
            j["steps"] = nlohmann::json::array();
            for (const auto& step : r.plan->steps) {
                nlohmann::json sj;
                sj["curve"] = step.double_curve_id;
                sj["mode"] =
                    step.mode == snc::BlowupMode::BothSides ? "both_sides" : "one_side";
                if (step.mode == snc::BlowupMode::OneSide) sj["component"] = step.component;
                sj["points"] = step.points.size();
                j["steps"].push_back(sj);
            }
            return j.dump(2);
        },
        py::arg("ref"),
        "smallest blow-up plan trivializing the collective normal classes");

    m.def(
        "charts",
        [](int samples, std::optional<double> tolerance, std::uint64_t seed) {
            snc::charts::IdentityOptions o;
            o.samples = samples;
            o.tolerance = tolerance;
            o.seed = seed;
            py::list out;
            for (const auto& r : snc::charts::run_identity_suite(o)) {
                py::dict d;
                d["name"] = r.name;
                d["samples"] = r.samples;
                d["max_residual"] = r.max_residual;
                d["tolerance"] = r.tolerance;
                d["passed"] = r.passed;
                out.append(d);
            }
            return out;
        },
        py::arg("samples") = 100, py::arg("tolerance") = py::none(),
        py::arg("seed") = snc::charts::IdentityOptions{}.seed,
        "evaluate every chart identity at seeded random points");
}
