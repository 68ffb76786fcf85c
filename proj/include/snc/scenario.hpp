#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "snc/blowup.hpp"
#include "snc/report.hpp"
#include "snc/surface.hpp"

namespace snc {

/// Optional regression assertions carried by a scenario file.
struct ExpectedBlock {
    std::optional<bool> d_semistable;
    std::optional<bool> residue_ok;
    std::optional<bool> mismatch;
    std::optional<bool> anticanonical_all;
    std::optional<long long> h0_dim;
    std::optional<long long> euler_fiber;
    std::optional<std::string> classification;
    std::map<std::string, long long> collective_degrees; // post-plan
    std::map<std::string, long long> component_euler;    // post-plan
};

struct ScenarioFile {
    int schema_version = 1;
    std::string name;
    std::string description;
    SncSurface surface;
    BlowupPlan plan;
    std::optional<int> declared_b1;
    ExpectedBlock expected;
};

/// Parse the documented JSON schema.  Exact rationals are "p/q" strings,
/// complex numbers two-element arrays of rationals.  Unknown fields are
/// rejected (SchemaError); dangling ids are SemanticError.
ScenarioFile parse_scenario(const std::string& text);

/// Deterministic serialization; parse(serialize(s)) reproduces s.
std::string serialize_scenario(const ScenarioFile& s);
nlohmann::json scenario_json(const ScenarioFile& s);

// ---- registry ----------------------------------------------------------

std::vector<std::string> registry_names();
bool registry_has(const std::string& name);

/// Build a named scenario.  params may override scenario parameters
/// (e.g. k for the twisted cycles, k1..k4 for the generalized chain).
ScenarioFile registry_build(const std::string& name,
                            const std::map<std::string, std::string>& params = {});

// ---- check runner (shared by CLI, tests, bindings) ----------------------

struct CheckOutcome {
    int exit_code = 0; // 0 ok, 3 mismatch rejection, 4 assertion failure
    std::vector<MismatchDiagnostic> mismatches;
    SmoothingReport report;        // valid unless exit_code == 3
    SncSurface final_surface;      // post-plan
    std::vector<std::string> assertion_failures;
};

CheckOutcome run_check(const ScenarioFile& scenario);

nlohmann::json outcome_json(const ScenarioFile& scenario, const CheckOutcome& outcome);
std::string outcome_text(const ScenarioFile& scenario, const CheckOutcome& outcome);

} // namespace snc
