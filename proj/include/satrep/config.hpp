#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "satrep/channel.hpp"
#include "satrep/geometry.hpp"
#include "satrep/link_analysis.hpp"
#include "satrep/montecarlo.hpp"
#include "satrep/repetition.hpp"

namespace satrep {

// Scenario description in boundary units (km, MHz, dBm, dB, degrees,
// devices per km^2). Core modules only ever see the converted SI values.
// Defaults reproduce the reference operating point: 550 km altitude,
// 2000 MHz carrier, 23 dBm transmit power, -138 dBm noise, D_o = 1e-6.
struct ScenarioConfig {
    // [geometry]
    double earth_radius_km = 6371.0;
    double altitude_km = 550.0;
    // [channel]
    double beta = 0.3;
    double mu_los_db = 1.0;
    double sigma_los_db = 2.0;
    double mu_nlos_db = 20.0;
    double sigma_nlos_db = 8.0;
    double frequency_mhz = 2000.0;
    // [repetition]
    double d0 = 1e-6;
    double a = 5e-5;
    double theta_min_deg = 10.0;
    // [budget]
    double tx_power_dbm = 23.0;
    double noise_dbm = -138.0;
    double gamma_db = -10.0;
    double kappa = 1.0;
    double lambda0_per_km2 = 0.01; // placeholder density, configurable
    // [constellation]
    long long k = 10;
    // [sim]
    std::uint64_t seed = 1;
    long long realizations = 2000;
    long long device_cap = 10'000'000;
    std::string sim_outputs = "zenith_cdf,interference,p_success,p_global";
    // [output]
    std::string output_path;
    std::string output_format = "csv";
};

// Parses the sectioned key-value format. Unknown sections/keys, malformed
// lines and bad literals raise ConfigError with the file name and line
// number; an empty file yields the all-defaults config.
ScenarioConfig load_config(const std::string& path);
ScenarioConfig parse_config(std::istream& in, const std::string& name);

// Enforces every field invariant; messages carry the section.key path.
void validate(const ScenarioConfig& config);

// Applies "section.key=value" (the CLI override form).
void apply_override(ScenarioConfig& config, const std::string& dotted_key,
                    const std::string& value);

// Canonical serialization: fixed section and key order, 17 significant
// digits, so save/load round-trips bit-identically and the hash is stable.
std::string canonical_text(const ScenarioConfig& config);
void save_config(const ScenarioConfig& config, const std::string& path);

// FNV-1a 64-bit hash of the canonical text, as fixed-width hex.
std::string config_hash(const ScenarioConfig& config);

// Conversions into the core SI/linear/radian types.
OrbitGeometry geometry_of(const ScenarioConfig& config);
ChannelParams channel_of(const ScenarioConfig& config);
RepetitionPolicy policy_of(const ScenarioConfig& config);
LinkBudget budget_of(const ScenarioConfig& config);
SimConfig sim_of(const ScenarioConfig& config);

} // namespace satrep
