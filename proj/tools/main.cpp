#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qinfo/info_measures.hpp"
#include "qinfo/report.hpp"
#include "qinfo/scenarios.hpp"
#include "qinfo/state_spec.hpp"
#include "qinfo/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitUnknown = 3;

std::map<std::string, double> parse_params(const std::vector<std::string>& kv_pairs) {
    std::map<std::string, double> params;
    for (const std::string& kv : kv_pairs) {
        const std::size_t eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw qinfo::BadParameter("expected key=value, got '" + kv + "'");
        }
        const std::string key = kv.substr(0, eq);
        const std::string value = kv.substr(eq + 1);
        try {
            std::size_t consumed = 0;
            const double v = std::stod(value, &consumed);
            if (consumed != value.size()) throw std::invalid_argument(value);
            params[key] = v;
        } catch (const std::exception&) {
            throw qinfo::BadParameter("parameter '" + key +
                                      "' has a non-numeric value '" + value + "'");
        }
    }
    return params;
}

int run_info(const std::string& path, const std::string& format_name) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open '" << path << "'\n";
        return kExitValidation;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();

    const qinfo::ParsedState state = qinfo::parse_state_spec(buffer.str());
    qinfo::ScenarioResult result;
    result.scenario_name = "info";
    result.reports.emplace_back("state", qinfo::make_report(qinfo::state_density(state)));
    std::cout << qinfo::render_report(result, qinfo::parse_format(format_name));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum information and surplus-knowledge calculator"};
    app.require_subcommand(1);

    std::string format_name = "table";
    std::string spec_path;
    auto* info_cmd = app.add_subcommand("info", "Analyze a state-spec file");
    info_cmd->add_option("file", spec_path, "JSON state-spec file")->required();
    info_cmd->add_option("--format", format_name, "table, json or csv");

    std::string scenario_name;
    std::vector<std::string> raw_params;
    std::uint64_t seed = 0;
    std::string scenario_format = "table";
    auto* scenario_cmd = app.add_subcommand("scenario", "Run a named experiment");
    scenario_cmd->add_option("name", scenario_name, "scenario name")->required();
    scenario_cmd->add_option("--param", raw_params, "key=value parameter")
        ->take_all();
    scenario_cmd->add_option("--seed", seed, "64-bit seed for sampling scenarios");
    scenario_cmd->add_option("--format", scenario_format, "table, json or csv");

    double a1_sq = 0.5;
    std::uint64_t sweep_n = 1;
    std::uint64_t trials = 1;
    std::uint64_t sweep_seed = 0;
    double spread = 1.0;
    std::string sweep_format = "table";
    auto* sweep_cmd = app.add_subcommand("sweep", "Random-phase decoherence sweep");
    sweep_cmd->add_option("--a1-sq", a1_sq, "|a1|^2 of the photon")->required();
    sweep_cmd->add_option("--n", sweep_n, "ensemble members per trial")->required();
    sweep_cmd->add_option("--trials", trials, "number of trials")->required();
    sweep_cmd->add_option("--seed", sweep_seed, "64-bit master seed");
    sweep_cmd->add_option("--spread", spread,
                          "phase spread in [0,1]; 0 = all phases equal");
    sweep_cmd->add_option("--format", sweep_format, "table, json or csv");

    auto* list_cmd = app.add_subcommand("list-scenarios", "List scenario names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUnknown;
    }

    try {
        if (info_cmd->parsed()) {
            return run_info(spec_path, format_name);
        }
        if (scenario_cmd->parsed()) {
            const qinfo::ScenarioResult result =
                qinfo::run_scenario(scenario_name, parse_params(raw_params), seed);
            std::cout << qinfo::render_report(result, qinfo::parse_format(scenario_format));
            return kExitOk;
        }
        if (sweep_cmd->parsed()) {
            const qinfo::SweepStatistics stats =
                qinfo::decoherence_sweep(a1_sq, sweep_n, trials, sweep_seed, spread);
            std::cout << qinfo::render_report(stats, qinfo::parse_format(sweep_format));
            return kExitOk;
        }
        if (list_cmd->parsed()) {
            for (const std::string& name : qinfo::list_scenarios()) {
                std::cout << name << "\n";
            }
            return kExitOk;
        }
    } catch (const qinfo::UnknownScenario& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnknown;
    } catch (const qinfo::BadParameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnknown;
    } catch (const qinfo::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitOk;
}
