#include <exception>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "satrep/config.hpp"
#include "satrep/errors.hpp"
#include "satrep/output.hpp"
#include "satrep/scenarios.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfigError = 2;
constexpr int kExitNumericError = 3;

const std::map<std::string, std::string>& override_keys() {
    static const std::map<std::string, std::string> keys = {
        {"geometry.earth_radius_km", "Earth radius (km)"},
        {"geometry.altitude_km", "satellite altitude (km)"},
        {"channel.beta", "clutter LoS parameter"},
        {"channel.mu_los_db", "LoS excess loss mean (dB)"},
        {"channel.sigma_los_db", "LoS excess loss std (dB)"},
        {"channel.mu_nlos_db", "NLoS excess loss mean (dB)"},
        {"channel.sigma_nlos_db", "NLoS excess loss std (dB)"},
        {"channel.frequency_mhz", "carrier frequency (MHz)"},
        {"repetition.d0", "base duty cycle"},
        {"repetition.a", "repetition tuning factor"},
        {"repetition.theta_min_deg", "minimum elevation angle (deg)"},
        {"budget.tx_power_dbm", "device transmit power (dBm)"},
        {"budget.noise_dbm", "average noise power (dBm)"},
        {"budget.gamma_db", "SINR threshold (dB)"},
        {"budget.kappa", "coordination factor"},
        {"budget.lambda0_per_km2", "device density (per km^2)"},
        {"constellation.k", "satellite count"},
        {"sim.seed", "Monte Carlo seed"},
        {"sim.realizations", "Monte Carlo realizations / trials"},
        {"sim.device_cap", "per-realization device safety cap"},
        {"sim.outputs", "simulate outputs (comma list)"},
        {"output.path", "output file path (empty = stdout)"},
        {"output.format", "output format: csv | json"},
    };
    return keys;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"satrep - IoT-over-satellite frame-repetition coverage tool"};
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path, "scenario config file");

    std::map<std::string, std::string> overrides;
    for (const auto& [key, help] : override_keys()) {
        app.add_option_function<std::string>(
            "--" + key,
            [&overrides, key = key](const std::string& value) {
                overrides[key] = value;
            },
            help);
    }

    CLI::App* analytic = app.add_subcommand("analytic", "analytic coverage evaluation");
    CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo estimates");
    CLI::App* sweep = app.add_subcommand(
        "sweep", "grid search plus refinement over (a, theta_min)");
    CLI::App* figure = app.add_subcommand("figure", "emit data for a paper figure");
    int figure_number = 0;
    figure->add_option("number", figure_number, "figure number (2-9)")
        ->required()
        ->check(CLI::Range(2, 9));
    CLI::App* custom =
        app.add_subcommand("custom", "sweep one operation over an angle grid");
    satrep::CustomSpec spec;
    custom->add_option("--op", spec.op, "operation to evaluate")->required();
    custom->add_option("--var", spec.variable, "theta_deg | phi_deg");
    custom->add_option("--min", spec.min, "sweep start");
    custom->add_option("--max", spec.max, "sweep end");
    custom->add_option("--points", spec.points, "grid size");
    CLI::App* validate_cmd =
        app.add_subcommand("validate-config", "load, validate and hash the config");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitConfigError;
    }

    try {
        satrep::ScenarioConfig config;
        if (!config_path.empty()) config = satrep::load_config(config_path);
        for (const auto& [key, value] : overrides) {
            satrep::apply_override(config, key, value);
        }
        satrep::validate(config);

        if (validate_cmd->parsed()) {
            std::cout << "OK " << satrep::config_hash(config) << "\n";
            return kExitOk;
        }

        satrep::DataTable table;
        if (analytic->parsed()) {
            table = satrep::run_scenario(config, "analytic");
        } else if (simulate->parsed()) {
            table = satrep::run_scenario(config, "simulate");
        } else if (sweep->parsed()) {
            table = satrep::run_scenario(config, "sweep");
        } else if (figure->parsed()) {
            table = satrep::run_scenario(config,
                                         "figure" + std::to_string(figure_number));
        } else if (custom->parsed()) {
            table = satrep::run_custom(config, spec);
        }
        satrep::emit_result(table, config.output_format, config.output_path);
        return kExitOk;
    } catch (const satrep::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumericError;
    }
}
