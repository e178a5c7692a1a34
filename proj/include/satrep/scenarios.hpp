#pragma once

#include <string>
#include <vector>

#include "satrep/config.hpp"
#include "satrep/output.hpp"

namespace satrep {

// One evaluation swept over an elevation or zenith grid.
struct CustomSpec {
    std::string op = "p_los";
    std::string variable = "theta_deg"; // theta_deg | phi_deg
    double min = 0.0;
    double max = 90.0;
    int points = 91;
};

const std::vector<std::string>& custom_ops();

// command: analytic | simulate | sweep | figure2..figure9.
// Figure commands pin the parameters named in the corresponding plot
// (tuning factors, gamma, admittance angles) and take everything else from
// the config; the pinned values are recorded in the table metadata.
DataTable run_scenario(const ScenarioConfig& config, const std::string& command);

DataTable run_custom(const ScenarioConfig& config, const CustomSpec& spec);

} // namespace satrep
