#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "snc/blowup.hpp"
#include "snc/errors.hpp"
#include "snc/identity_suite.hpp"
#include "snc/scenario.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitCharts = 5;
constexpr int kExitInfeasible = 6;

std::map<std::string, std::string> parse_params(const std::vector<std::string>& raw) {
    std::map<std::string, std::string> out;
    for (const auto& item : raw) {
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw snc::ParseError("--param expects key=value, got '" + item + "'");
        out[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return out;
}

/// Registry name, or a path to a scenario file.
snc::ScenarioFile load_scenario(const std::string& ref,
                                const std::map<std::string, std::string>& params) {
    if (snc::registry_has(ref)) return snc::registry_build(ref, params);
    std::ifstream in(ref);
    if (!in) throw snc::ParseError("no scenario named '" + ref + "' and no such file");
    std::stringstream buf;
    buf << in.rdbuf();
    return snc::parse_scenario(buf.str());
}

int cmd_list() {
    for (const auto& name : snc::registry_names()) std::cout << name << "\n";
    return 0;
}

int cmd_describe(const std::string& ref) {
    snc::ScenarioFile s = load_scenario(ref, {});
    std::cout << "name:         " << s.name << "\n";
    if (!s.description.empty()) std::cout << "description:  " << s.description << "\n";
    std::cout << "components:   " << s.surface.components.size() << "\n"
              << "double curves:" << " " << s.surface.double_curves.size() << "\n"
              << "triple points:" << " " << s.surface.triple_points.size() << "\n"
              << "plan steps:   " << s.plan.steps.size() << "\n";
    if (s.declared_b1) std::cout << "declared b1:  " << *s.declared_b1 << "\n";
    std::cout << "\n" << snc::serialize_scenario(s) << "\n";
    return 0;
}

int cmd_check(const std::string& ref, const std::string& format,
              const std::vector<std::string>& raw_params) {
    snc::ScenarioFile s = load_scenario(ref, parse_params(raw_params));
    snc::CheckOutcome outcome = snc::run_check(s);
    if (format == "json")
        std::cout << snc::outcome_json(s, outcome).dump(2) << "\n";
    else
        std::cout << snc::outcome_text(s, outcome);
    return outcome.exit_code;
}

int cmd_plan(const std::string& ref) {
    snc::ScenarioFile s = load_scenario(ref, {});
    // plan for whatever is left after the scenario's own pipeline
    snc::SncSurface surface = snc::run_plan(s.surface, s.plan).first;
    snc::PlannerResult result = snc::plan_blowups_to_trivialize(surface);
    if (!result.plan) {
        std::cout << "infeasible: " << result.obstruction << "\n";
        return kExitInfeasible;
    }
    if (result.plan->steps.empty()) {
        std::cout << "empty plan (collective classes already trivial)\n";
        return 0;
    }
    std::size_t total = 0;
    for (const auto& step : result.plan->steps) {
        total += step.points.size();
        std::cout << "blow up " << step.points.size() << " point(s) on " << step.double_curve_id
                  << (step.mode == snc::BlowupMode::BothSides
                          ? " in both adjacent components"
                          : " in component " + step.component)
                  << "\n";
    }
    std::cout << "total: " << total << " point(s) across " << result.plan->steps.size()
              << " step(s)\n";
    return 0;
}

int cmd_charts(int samples, std::optional<double> tolerance, std::uint64_t seed,
               bool seed_from_env) {
    if (samples == 0)
        std::cout << "warning: --samples 0, every identity passes vacuously\n";
    snc::charts::IdentityOptions options;
    options.samples = samples;
    options.tolerance = tolerance;
    options.seed = seed;
    auto results = snc::charts::run_identity_suite(options);
    bool ok = true;
    std::printf("seed %llu (%s), %d sample(s) per identity\n",
                static_cast<unsigned long long>(seed),
                seed_from_env ? "from SNC_SMOOTH_SEED" : "default or --seed", samples);
    for (const auto& r : results) {
        ok = ok && r.passed;
        std::printf("%-30s max residual %11.4e  tolerance %8.1e  %s\n", r.name.c_str(),
                    r.max_residual, r.tolerance, r.passed ? "pass" : "FAIL");
    }
    std::printf("%s\n", ok ? "all identities passed" : "identity failures detected");
    return ok ? 0 : kExitCharts;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"verifier for normal crossing surfaces with trivial canonical bundle"};
    app.require_subcommand(1);

    auto* list = app.add_subcommand("list", "list built-in scenarios");

    std::string describe_ref;
    auto* describe = app.add_subcommand("describe", "show a scenario and its JSON form");
    describe->add_option("name", describe_ref, "scenario name or file path")->required();

    std::string check_ref, format = "text";
    std::vector<std::string> raw_params;
    auto* check = app.add_subcommand("check", "run the smoothability checks");
    check->add_option("name", check_ref, "scenario name or file path")->required();
    check->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    check->add_option("--param", raw_params, "scenario parameter override, key=value");

    std::string plan_ref;
    auto* plan = app.add_subcommand("plan", "propose blow-ups that trivialize the "
                                            "collective normal classes");
    plan->add_option("name", plan_ref, "scenario name or file path")->required();

    int samples = 100;
    double tolerance = -1.0;
    std::uint64_t seed = snc::charts::IdentityOptions{}.seed;
    bool seed_from_env = false;
    if (const char* env = std::getenv("SNC_SMOOTH_SEED")) {
        seed = std::strtoull(env, nullptr, 10);
        seed_from_env = true;
    }
    auto* charts = app.add_subcommand("charts", "verify the local chart identities");
    charts->add_option("--samples", samples, "random points per identity")
        ->check(CLI::NonNegativeNumber);
    auto* tol_opt = charts->add_option("--tolerance", tolerance,
                                       "override every per-identity tolerance");
    charts->add_option("--seed", seed, "random seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (list->parsed()) return cmd_list();
        if (describe->parsed()) return cmd_describe(describe_ref);
        if (check->parsed()) return cmd_check(check_ref, format, raw_params);
        if (plan->parsed()) return cmd_plan(plan_ref);
        if (charts->parsed())
            return cmd_charts(samples,
                              tol_opt->count() ? std::optional<double>(tolerance)
                                               : std::nullopt,
                              seed, seed_from_env);
    } catch (const snc::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const snc::SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return kExitParse;
    } catch (const snc::SemanticError& e) {
        std::cerr << "semantic error: " << e.what() << "\n";
        return kExitParse;
    } catch (const snc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
