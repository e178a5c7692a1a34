#include "satrep/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "satrep/errors.hpp"
#include "satrep/units.hpp"

namespace satrep {

namespace {

enum class FieldKind { f64, i64, u64, str };

struct FieldDef {
    const char* section;
    const char* key;
    FieldKind kind;
    double ScenarioConfig::*f64 = nullptr;
    long long ScenarioConfig::*i64 = nullptr;
    std::uint64_t ScenarioConfig::*u64 = nullptr;
    std::string ScenarioConfig::*str = nullptr;
};

FieldDef f64_field(const char* section, const char* key,
                   double ScenarioConfig::*member) {
    FieldDef def{section, key, FieldKind::f64};
    def.f64 = member;
    return def;
}

FieldDef i64_field(const char* section, const char* key,
                   long long ScenarioConfig::*member) {
    FieldDef def{section, key, FieldKind::i64};
    def.i64 = member;
    return def;
}

FieldDef u64_field(const char* section, const char* key,
                   std::uint64_t ScenarioConfig::*member) {
    FieldDef def{section, key, FieldKind::u64};
    def.u64 = member;
    return def;
}

FieldDef str_field(const char* section, const char* key,
                   std::string ScenarioConfig::*member) {
    FieldDef def{section, key, FieldKind::str};
    def.str = member;
    return def;
}

const std::vector<FieldDef>& fields() {
    static const std::vector<FieldDef> defs = {
        f64_field("geometry", "earth_radius_km", &ScenarioConfig::earth_radius_km),
        f64_field("geometry", "altitude_km", &ScenarioConfig::altitude_km),
        f64_field("channel", "beta", &ScenarioConfig::beta),
        f64_field("channel", "mu_los_db", &ScenarioConfig::mu_los_db),
        f64_field("channel", "sigma_los_db", &ScenarioConfig::sigma_los_db),
        f64_field("channel", "mu_nlos_db", &ScenarioConfig::mu_nlos_db),
        f64_field("channel", "sigma_nlos_db", &ScenarioConfig::sigma_nlos_db),
        f64_field("channel", "frequency_mhz", &ScenarioConfig::frequency_mhz),
        f64_field("repetition", "d0", &ScenarioConfig::d0),
        f64_field("repetition", "a", &ScenarioConfig::a),
        f64_field("repetition", "theta_min_deg", &ScenarioConfig::theta_min_deg),
        f64_field("budget", "tx_power_dbm", &ScenarioConfig::tx_power_dbm),
        f64_field("budget", "noise_dbm", &ScenarioConfig::noise_dbm),
        f64_field("budget", "gamma_db", &ScenarioConfig::gamma_db),
        f64_field("budget", "kappa", &ScenarioConfig::kappa),
        f64_field("budget", "lambda0_per_km2", &ScenarioConfig::lambda0_per_km2),
        i64_field("constellation", "k", &ScenarioConfig::k),
        u64_field("sim", "seed", &ScenarioConfig::seed),
        i64_field("sim", "realizations", &ScenarioConfig::realizations),
        i64_field("sim", "device_cap", &ScenarioConfig::device_cap),
        str_field("sim", "outputs", &ScenarioConfig::sim_outputs),
        str_field("output", "path", &ScenarioConfig::output_path),
        str_field("output", "format", &ScenarioConfig::output_format),
    };
    return defs;
}

std::string trim(const std::string& s) {
    std::size_t begin = 0;
    std::size_t end = s.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
    return s.substr(begin, end - begin);
}

[[noreturn]] void parse_fail(const std::string& name, int line,
                             const std::string& message) {
    std::ostringstream msg;
    msg << name << ":" << line << ": " << message;
    throw ConfigError(msg.str());
}

void assign(ScenarioConfig& config, const FieldDef& def,
            const std::string& raw, const std::string& name, int line) {
    const std::string value = trim(raw);
    const std::string path = std::string(def.section) + "." + def.key;
    if (def.kind == FieldKind::str) {
        config.*(def.str) = value;
        return;
    }
    if (value.empty()) parse_fail(name, line, "empty value for " + path);
    std::size_t consumed = 0;
    try {
        switch (def.kind) {
        case FieldKind::f64:
            config.*(def.f64) = std::stod(value, &consumed);
            break;
        case FieldKind::i64:
            config.*(def.i64) = std::stoll(value, &consumed);
            break;
        case FieldKind::u64:
            config.*(def.u64) = std::stoull(value, &consumed);
            break;
        case FieldKind::str:
            break;
        }
    } catch (const std::exception&) {
        parse_fail(name, line, "invalid numeric literal '" + value + "' for " + path);
    }
    if (consumed != value.size()) {
        parse_fail(name, line, "trailing characters in value '" + value + "' for " + path);
    }
}

const FieldDef* find_field(const std::string& section, const std::string& key) {
    for (const FieldDef& def : fields()) {
        if (section == def.section && key == def.key) return &def;
    }
    return nullptr;
}

bool known_section(const std::string& section) {
    for (const FieldDef& def : fields()) {
        if (section == def.section) return true;
    }
    return false;
}

std::string format_17g(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

[[noreturn]] void invariant_fail(const std::string& path, const std::string& what) {
    throw ConfigError("config validation: " + path + " " + what);
}

} // namespace

ScenarioConfig parse_config(std::istream& in, const std::string& name) {
    ScenarioConfig config;
    std::string line;
    std::string section;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string text = trim(line);
        if (text.empty() || text[0] == '#' || text[0] == ';') continue;
        if (text.front() == '[') {
            if (text.back() != ']') parse_fail(name, line_no, "unterminated section header");
            section = trim(text.substr(1, text.size() - 2));
            if (!known_section(section)) {
                parse_fail(name, line_no, "unknown section [" + section + "]");
            }
            continue;
        }
        const std::size_t eq = text.find('=');
        if (eq == std::string::npos) {
            parse_fail(name, line_no, "expected 'key = value', got '" + text + "'");
        }
        if (section.empty()) {
            parse_fail(name, line_no, "key outside of any [section]");
        }
        const std::string key = trim(text.substr(0, eq));
        const FieldDef* def = find_field(section, key);
        if (def == nullptr) {
            parse_fail(name, line_no, "unknown key " + section + "." + key);
        }
        assign(config, *def, text.substr(eq + 1), name, line_no);
    }
    validate(config);
    return config;
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    return parse_config(in, path);
}

void validate(const ScenarioConfig& c) {
    const auto finite = [](double v) { return std::isfinite(v); };
    if (!finite(c.earth_radius_km) || c.earth_radius_km <= 0.0) {
        invariant_fail("geometry.earth_radius_km", "must be finite and > 0");
    }
    if (!finite(c.altitude_km) || c.altitude_km <= 0.0) {
        invariant_fail("geometry.altitude_km", "must be finite and > 0");
    }
    if (!finite(c.beta) || c.beta <= 0.0) {
        invariant_fail("channel.beta", "must be finite and > 0");
    }
    if (!finite(c.sigma_los_db) || c.sigma_los_db < 0.0) {
        invariant_fail("channel.sigma_los_db", "must be >= 0");
    }
    if (!finite(c.sigma_nlos_db) || c.sigma_nlos_db < 0.0) {
        invariant_fail("channel.sigma_nlos_db", "must be >= 0");
    }
    if (!finite(c.mu_los_db) || !finite(c.mu_nlos_db) ||
        c.mu_nlos_db < c.mu_los_db) {
        invariant_fail("channel.mu_nlos_db",
                       "must be finite and >= channel.mu_los_db");
    }
    if (!finite(c.frequency_mhz) || c.frequency_mhz <= 0.0) {
        invariant_fail("channel.frequency_mhz", "must be finite and > 0");
    }
    if (!finite(c.d0) || c.d0 <= 0.0 || c.d0 > 1.0) {
        invariant_fail("repetition.d0", "must be in (0, 1]");
    }
    if (!finite(c.a) || c.a < 0.0 || c.a > 1.0) {
        invariant_fail("repetition.a", "must be in [0, 1]");
    }
    if (!finite(c.theta_min_deg) || c.theta_min_deg < 0.0 || c.theta_min_deg >= 90.0) {
        invariant_fail("repetition.theta_min_deg", "must be in [0, 90)");
    }
    if (!finite(c.tx_power_dbm)) invariant_fail("budget.tx_power_dbm", "must be finite");
    if (!finite(c.noise_dbm)) invariant_fail("budget.noise_dbm", "must be finite");
    if (!finite(c.gamma_db)) invariant_fail("budget.gamma_db", "must be finite");
    if (!finite(c.kappa) || c.kappa <= 0.0 || c.kappa > 1.0) {
        invariant_fail("budget.kappa", "must be in (0, 1]");
    }
    if (!finite(c.lambda0_per_km2) || c.lambda0_per_km2 <= 0.0) {
        invariant_fail("budget.lambda0_per_km2", "must be finite and > 0");
    }
    if (c.k < 1) invariant_fail("constellation.k", "must be >= 1");
    if (c.realizations < 1) invariant_fail("sim.realizations", "must be >= 1");
    if (c.device_cap < 1) invariant_fail("sim.device_cap", "must be >= 1");
    if (c.output_format != "csv" && c.output_format != "json") {
        invariant_fail("output.format", "must be 'csv' or 'json'");
    }
}

void apply_override(ScenarioConfig& config, const std::string& dotted_key,
                    const std::string& value) {
    const std::size_t dot = dotted_key.find('.');
    if (dot == std::string::npos) {
        throw ConfigError("override key must look like section.key: " + dotted_key);
    }
    const FieldDef* def =
        find_field(dotted_key.substr(0, dot), dotted_key.substr(dot + 1));
    if (def == nullptr) {
        throw ConfigError("unknown config key: " + dotted_key);
    }
    assign(config, *def, value, "<override --" + dotted_key + ">", 0);
}

std::string canonical_text(const ScenarioConfig& config) {
    std::ostringstream out;
    std::string section;
    for (const FieldDef& def : fields()) {
        if (section != def.section) {
            if (!section.empty()) out << "\n";
            section = def.section;
            out << "[" << section << "]\n";
        }
        out << def.key << " = ";
        switch (def.kind) {
        case FieldKind::f64:
            out << format_17g(config.*(def.f64));
            break;
        case FieldKind::i64:
            out << config.*(def.i64);
            break;
        case FieldKind::u64:
            out << config.*(def.u64);
            break;
        case FieldKind::str:
            out << config.*(def.str);
            break;
        }
        out << "\n";
    }
    return out.str();
}

void save_config(const ScenarioConfig& config, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write config file: " + path);
    out << canonical_text(config);
    if (!out) throw ConfigError("failed writing config file: " + path);
}

std::string config_hash(const ScenarioConfig& config) {
    const std::string text = canonical_text(config);
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (const char ch : text) {
        hash ^= static_cast<unsigned char>(ch);
        hash *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(hash));
    return buf;
}

OrbitGeometry geometry_of(const ScenarioConfig& config) {
    return make_geometry(config.earth_radius_km * 1000.0,
                         config.altitude_km * 1000.0);
}

ChannelParams channel_of(const ScenarioConfig& config) {
    return make_channel_params(config.beta, config.mu_los_db, config.sigma_los_db,
                               config.mu_nlos_db, config.sigma_nlos_db,
                               config.frequency_mhz * 1e6);
}

RepetitionPolicy policy_of(const ScenarioConfig& config) {
    return make_policy(geometry_of(config), config.d0, config.a,
                       {deg_to_rad(config.theta_min_deg)},
                       per_km2_to_per_m2(config.lambda0_per_km2));
}

LinkBudget budget_of(const ScenarioConfig& config) {
    return make_budget(dbm_to_watt(config.tx_power_dbm),
                       dbm_to_watt(config.noise_dbm),
                       db_to_linear(config.gamma_db), config.kappa,
                       per_km2_to_per_m2(config.lambda0_per_km2));
}

SimConfig sim_of(const ScenarioConfig& config) {
    SimConfig sim;
    sim.seed = config.seed;
    sim.n_realizations = config.realizations;
    sim.n_devices_cap = config.device_cap;
    return sim;
}

} // namespace satrep
