#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qinfo/info_measures.hpp"

namespace qinfo {

struct ScenarioResult {
    std::string scenario_name;
    std::map<std::string, double> parameters;
    std::vector<std::pair<std::string, InformationReport>> reports;
    std::map<std::string, double> derived_values;  // closed-form cross-checks
    std::vector<std::string> notes;
};

std::vector<std::string> list_scenarios();

// Runs one named experiment. Deterministic; sampling scenarios (which-way,
// eraser) use the seed. Throws UnknownScenario / BadParameter.
ScenarioResult run_scenario(const std::string& name,
                            const std::map<std::string, double>& params,
                            std::uint64_t seed = 0);

}  // namespace qinfo
