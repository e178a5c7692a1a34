#include "satrep/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <sstream>

#include "satrep/errors.hpp"
#include "satrep/sweep.hpp"
#include "satrep/units.hpp"
#include "satrep/zenith_distribution.hpp"

namespace satrep {

namespace {

std::string short_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

DataTable base_table(const ScenarioConfig& config, const std::string& command) {
    DataTable table;
    table.meta.emplace_back("tool", std::string("satrep ") + kToolVersion);
    table.meta.emplace_back("command", command);
    table.meta.emplace_back("config_hash", config_hash(config));
    return table;
}

std::vector<double> linspace(double lo, double hi, int points) {
    std::vector<double> out;
    out.reserve(points);
    if (points == 1) {
        out.push_back(lo);
        return out;
    }
    for (int i = 0; i < points; ++i) {
        out.push_back(lo + (hi - lo) * static_cast<double>(i) / (points - 1));
    }
    return out;
}

std::vector<double> logspace(double lo, double hi, int points) {
    std::vector<double> out;
    out.reserve(points);
    const double llo = std::log10(lo);
    const double lhi = std::log10(hi);
    for (int i = 0; i < points; ++i) {
        const double t =
            points == 1 ? 0.0 : static_cast<double>(i) / (points - 1);
        out.push_back(std::pow(10.0, llo + (lhi - llo) * t));
    }
    return out;
}

RepetitionPolicy policy_with(const ScenarioConfig& config,
                             const OrbitGeometry& geom, double a,
                             double theta_min_deg) {
    return make_policy(geom, config.d0, a, {deg_to_rad(theta_min_deg)},
                       per_km2_to_per_m2(config.lambda0_per_km2));
}

double empirical_cdf_at(const EmpiricalCdf& cdf, double phi) {
    const auto it = std::upper_bound(cdf.sorted_phi_rad.begin(),
                                     cdf.sorted_phi_rad.end(), phi);
    return static_cast<double>(it - cdf.sorted_phi_rad.begin()) /
           static_cast<double>(cdf.sorted_phi_rad.size());
}

// Figures 2-3: duty cycle and repetition count over the admittance region
// for tuning factors {1e-5, 2e-4, 1} and admittance angles {5, 10, 15} deg.
DataTable figure_duty_or_reps(const ScenarioConfig& config,
                              const std::string& command, bool emit_reps) {
    const OrbitGeometry geom = geometry_of(config);
    const ChannelParams params = channel_of(config);
    const std::vector<double> a_values = {1e-5, 2e-4, 1.0};
    const std::vector<double> theta_values = {5.0, 10.0, 15.0};

    DataTable table = base_table(config, command);
    table.meta.emplace_back("pinned_parameters",
                            "a in {1e-05, 0.0002, 1}; theta_min_deg in {5, 10, 15}");
    table.columns = {"phi_deg", "theta_deg"};

    std::vector<RepetitionPolicy> policies;
    for (const double theta : theta_values) {
        for (const double a : a_values) {
            policies.push_back(policy_with(config, geom, a, theta));
            table.columns.push_back((emit_reps ? "reps_a" : "duty_a") +
                                    short_number(a) + "_tmin" +
                                    short_number(theta));
        }
    }

    const double phi_hi =
        policy_with(config, geom, 0.0, theta_values.front()).phi_max_rad;
    for (const double phi : linspace(0.0, phi_hi, 181)) {
        std::vector<std::optional<double>> row;
        row.emplace_back(rad_to_deg(phi));
        row.emplace_back(rad_to_deg(elevation_from_zenith(geom, {phi}).rad));
        for (const RepetitionPolicy& policy : policies) {
            if (phi > policy.phi_max_rad) {
                row.emplace_back(std::nullopt);
            } else if (emit_reps) {
                row.emplace_back(static_cast<double>(
                    repetitions(geom, params, policy, {phi})));
            } else {
                row.emplace_back(
                    effective_duty_cycle(geom, params, policy, {phi}));
            }
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

// Figure 4: zenith CDF, analytic and Monte Carlo, for a in {0, 1e-5, 1} at
// theta_min = 10 deg.
DataTable figure_zenith_cdf(const ScenarioConfig& config) {
    const OrbitGeometry geom = geometry_of(config);
    const ChannelParams params = channel_of(config);
    const SimConfig sim = sim_of(config);
    const std::vector<double> a_values = {0.0, 1e-5, 1.0};
    const double theta_min_deg = 10.0;

    DataTable table = base_table(config, "figure4");
    table.meta.emplace_back("pinned_parameters",
                            "a in {0, 1e-05, 1}; theta_min_deg = 10");
    table.meta.emplace_back("seed", std::to_string(sim.seed));
    table.meta.emplace_back("mc_samples", std::to_string(sim.n_realizations));

    table.columns = {"phi_deg"};
    std::vector<std::unique_ptr<ZenithDistribution>> dists;
    std::vector<EmpiricalCdf> empiricals;
    for (const double a : a_values) {
        const RepetitionPolicy policy =
            policy_with(config, geom, a, theta_min_deg);
        dists.push_back(
            std::make_unique<ZenithDistribution>(geom, params, policy));
        empiricals.push_back(estimate_zenith_cdf(geom, params, policy, sim));
        table.columns.push_back("cdf_analytic_a" + short_number(a));
    }
    for (const double a : a_values) {
        table.columns.push_back("cdf_mc_a" + short_number(a));
    }

    const double phi_max = dists.front()->phi_max();
    for (const double phi : linspace(0.0, phi_max, 181)) {
        std::vector<std::optional<double>> row;
        row.emplace_back(rad_to_deg(phi));
        for (const auto& dist : dists) row.emplace_back(dist->cdf({phi}));
        for (const auto& empirical : empiricals) {
            row.emplace_back(empirical_cdf_at(empirical, phi));
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

// Figure 5: mean interference power vs tuning factor for several
// admittance angles, analytic against Monte Carlo.
DataTable figure_interference(const ScenarioConfig& config) {
    const OrbitGeometry geom = geometry_of(config);
    const ChannelParams params = channel_of(config);
    const LinkBudget budget = budget_of(config);
    const SimConfig sim = sim_of(config);
    const std::vector<double> theta_values = {5.0, 10.0, 15.0};
    const std::vector<double> a_values = logspace(1e-6, 1e-3, 13);

    DataTable table = base_table(config, "figure5");
    table.meta.emplace_back("pinned_parameters",
                            "a logspace 1e-06..0.001; theta_min_deg in {5, 10, 15}");
    table.meta.emplace_back("seed", std::to_string(sim.seed));
    table.meta.emplace_back("mc_realizations", std::to_string(sim.n_realizations));

    table.columns = {"a"};
    for (const double theta : theta_values) {
        table.columns.push_back("ei_analytic_w_tmin" + short_number(theta));
        table.columns.push_back("ei_mc_w_tmin" + short_number(theta));
        table.columns.push_back("ei_mc_stderr_w_tmin" + short_number(theta));
    }

    for (const double a : a_values) {
        std::vector<std::optional<double>> row;
        row.emplace_back(a);
        for (const double theta : theta_values) {
            try {
                const RepetitionPolicy policy =
                    policy_with(config, geom, a, theta);
                row.emplace_back(mean_interference(geom, params, policy, budget));
                const Estimate mc =
                    estimate_interference(geom, params, policy, budget, sim);
                row.emplace_back(mc.value);
                row.emplace_back(mc.std_error);
            } catch (const std::exception&) {
                row.emplace_back(std::nullopt);
                row.emplace_back(std::nullopt);
                row.emplace_back(std::nullopt);
            }
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

// Figure 6: conditional success probability over the admittance region at
// a = 2e-4, gamma = -10 dB, plus the no-repetition curve at 10 deg.
DataTable figure_conditional_success(const ScenarioConfig& config) {
    const OrbitGeometry geom = geometry_of(config);
    const ChannelParams params = channel_of(config);
    LinkBudget budget = budget_of(config);
    budget.sinr_threshold = db_to_linear(-10.0);
    const std::vector<double> theta_values = {5.0, 10.0, 15.0};
    const double a_rep = 2e-4;

    DataTable table = base_table(config, "figure6");
    table.meta.emplace_back(
        "pinned_parameters",
        "a = 0.0002 (0 for no-repetition curve); gamma_db = -10; "
        "theta_min_deg in {5, 10, 15}");

    struct Curve {
        RepetitionPolicy policy;
        double mean_i;
    };
    std::vector<Curve> curves;
    table.columns = {"phi_deg", "theta_deg"};
    for (const double theta : theta_values) {
        const RepetitionPolicy policy = policy_with(config, geom, a_rep, theta);
        curves.push_back({policy, mean_interference(geom, params, policy, budget)});
        table.columns.push_back("p_success_tmin" + short_number(theta));
    }
    {
        const RepetitionPolicy policy = policy_with(config, geom, 0.0, 10.0);
        curves.push_back({policy, mean_interference(geom, params, policy, budget)});
        table.columns.push_back("p_success_norep_tmin10");
    }

    const double phi_hi = curves.front().policy.phi_max_rad;
    for (const double phi : linspace(0.0, phi_hi, 181)) {
        std::vector<std::optional<double>> row;
        row.emplace_back(rad_to_deg(phi));
        row.emplace_back(rad_to_deg(elevation_from_zenith(geom, {phi}).rad));
        for (const Curve& curve : curves) {
            if (phi > curve.policy.phi_max_rad) {
                row.emplace_back(std::nullopt);
            } else {
                row.emplace_back(p_success_repeated_given_interference(
                    geom, params, curve.policy, budget, {phi}, curve.mean_i));
            }
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

// Figures 7-8: average and global success probability vs admittance angle
// at a = 5e-5, gamma = -10 dB.
DataTable figure_avg_or_global(const ScenarioConfig& config,
                               const std::string& command, bool with_spot) {
    const OrbitGeometry geom = geometry_of(config);
    const ChannelParams params = channel_of(config);
    LinkBudget budget = budget_of(config);
    budget.sinr_threshold = db_to_linear(-10.0);
    const double a_rep = 5e-5;
    const int k = static_cast<int>(config.k);

    DataTable table = base_table(config, command);
    std::ostringstream pinned;
    pinned << "a = 5e-05; gamma_db = -10";
    if (with_spot) pinned << "; k = " << k;
    table.meta.emplace_back("pinned_parameters", pinned.str());

    if (with_spot) {
        table.columns = {"theta_min_deg", "p_spot", "p_avg", "p_s"};
    } else {
        table.columns = {"theta_min_deg", "p_avg_repetition",
                         "p_avg_no_repetition"};
    }

    for (int theta = 1; theta <= 45; ++theta) {
        std::vector<std::optional<double>> row;
        row.emplace_back(static_cast<double>(theta));
        try {
            const RepetitionPolicy policy =
                policy_with(config, geom, a_rep, theta);
            const double avg = p_success_avg(geom, params, policy, budget);
            if (with_spot) {
                const double spot = p_spot(geom, k, {policy.phi_max_rad});
                row.emplace_back(spot);
                row.emplace_back(avg);
                row.emplace_back(spot * avg);
            } else {
                const RepetitionPolicy norep =
                    policy_with(config, geom, 0.0, theta);
                row.emplace_back(avg);
                row.emplace_back(p_success_avg(geom, params, norep, budget));
            }
        } catch (const std::exception&) {
            while (row.size() < table.columns.size()) {
                row.emplace_back(std::nullopt);
            }
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

void append_surface(DataTable& table, const SweepResult& result) {
    const auto same_point = [](const SweepPoint& x, const SweepPoint& y) {
        return x.a == y.a && x.theta_min_deg == y.theta_min_deg;
    };
    for (const SweepPoint& point : result.surface) {
        std::vector<std::optional<double>> row;
        row.emplace_back(point.a);
        row.emplace_back(point.theta_min_deg);
        if (point.ok) {
            row.emplace_back(point.p_s);
            row.emplace_back(point.p_spot);
            row.emplace_back(point.p_avg);
            row.emplace_back(point.mean_interference_w);
        } else {
            for (int i = 0; i < 4; ++i) row.emplace_back(std::nullopt);
        }
        bool frontier = false;
        for (const SweepPoint& f : result.frontier) {
            if (same_point(f, point)) frontier = true;
        }
        row.emplace_back(frontier ? 1.0 : 0.0);
        row.emplace_back(result.has_optimum && same_point(result.optimum, point)
                             ? 1.0
                             : 0.0);
        table.rows.push_back(std::move(row));
    }
}

// Figure 9 / sweep verb: p_s surface over (a, theta_min) with the
// per-theta frontier and the argmax marked.
DataTable figure_surface(const ScenarioConfig& config, const std::string& command,
                         bool refine) {
    const OrbitGeometry geom = geometry_of(config);
    const ChannelParams params = channel_of(config);
    LinkBudget budget = budget_of(config);
    budget.sinr_threshold = db_to_linear(-10.0);

    SweepGrid grid = default_grid();
    grid.satellite_count = static_cast<int>(config.k);

    DataTable table = base_table(config, command);
    table.meta.emplace_back("pinned_parameters",
                            "gamma_db = -10; a logspace 1e-06..0.01 (25); "
                            "theta_min_deg 1..45");
    table.meta.emplace_back("tie_breaking",
                            "smallest theta_min_deg, then smallest a");
    table.columns = {"a",      "theta_min_deg", "p_s",        "p_spot",
                     "p_avg",  "mean_interference_w", "is_frontier",
                     "is_optimum"};

    const SweepResult coarse = run_sweep(geom, params, budget, config.d0, grid);
    SweepResult final = coarse;
    if (refine && coarse.has_optimum) {
        final = refine_optimum(geom, params, budget, config.d0, grid, coarse, 3);
        table.meta.emplace_back("refine_levels", "3");
    }
    if (final.has_optimum) {
        table.meta.emplace_back("optimum_a", format_number(final.optimum.a));
        table.meta.emplace_back("optimum_theta_min_deg",
                                format_number(final.optimum.theta_min_deg));
        table.meta.emplace_back("optimum_p_s", format_number(final.optimum.p_s));
    }
    append_surface(table, coarse);
    return table;
}

DataTable run_analytic(const ScenarioConfig& config) {
    const OrbitGeometry geom = geometry_of(config);
    const ChannelParams params = channel_of(config);
    const RepetitionPolicy policy = policy_of(config);
    const LinkBudget budget = budget_of(config);

    const CoverageResult result =
        p_global(geom, params, policy, budget, static_cast<int>(config.k));

    DataTable table = base_table(config, "analytic");
    table.meta.emplace_back("method", result.meta.method);
    table.meta.emplace_back("quadrature_rel_tol",
                            format_number(result.meta.tolerance));
    table.meta.emplace_back("mean_interference_w",
                            format_number(result.mean_interference_w));
    table.meta.emplace_back("p_success_avg", format_number(result.p_success_avg));
    table.meta.emplace_back("p_spot", format_number(result.p_spot));
    table.meta.emplace_back("p_global", format_number(result.p_global));

    table.columns = {"phi_deg", "theta_deg", "n_repetitions", "p_single",
                     "p_repeated"};
    for (const ConditionalSuccessRow& row : result.p_success_conditional) {
        table.rows.push_back(
            {rad_to_deg(row.phi_rad),
             rad_to_deg(elevation_from_zenith(geom, {row.phi_rad}).rad),
             static_cast<double>(row.n_repetitions), row.p_single,
             row.p_repeated});
    }
    return table;
}

DataTable run_simulate(const ScenarioConfig& config) {
    const OrbitGeometry geom = geometry_of(config);
    const ChannelParams params = channel_of(config);
    const RepetitionPolicy policy = policy_of(config);
    const LinkBudget budget = budget_of(config);
    const SimConfig sim = sim_of(config);
    const auto wants = [&](const char* what) {
        return config.sim_outputs.find(what) != std::string::npos;
    };

    DataTable table = base_table(config, "simulate");
    table.meta.emplace_back("method", "montecarlo");
    table.meta.emplace_back("seed", std::to_string(sim.seed));
    table.meta.emplace_back("realizations", std::to_string(sim.n_realizations));
    table.label_column = "quantity";
    table.columns = {"value", "std_error", "n", "analytic"};

    const auto add_row = [&](const std::string& label, const Estimate& est,
                             std::optional<double> analytic) {
        table.row_labels.push_back(label);
        table.rows.push_back({est.value, est.std_error,
                              static_cast<double>(est.n), analytic});
    };

    if (wants("interference")) {
        const Estimate est =
            estimate_interference(geom, params, policy, budget, sim);
        add_row("interference_w", est,
                mean_interference(geom, params, policy, budget));
    }
    if (wants("p_success")) {
        const ZenithAngle phi_mid{0.5 * policy.phi_max_rad};
        add_row("p_success_at_mid_phi",
                estimate_success_at(geom, params, policy, budget, sim, phi_mid),
                p_success_repeated(geom, params, policy, budget, phi_mid));
        add_row("p_success_avg",
                estimate_success_avg(geom, params, policy, budget, sim),
                p_success_avg(geom, params, policy, budget));
    }
    if (wants("p_global")) {
        const double spot =
            p_spot(geom, static_cast<int>(config.k), {policy.phi_max_rad});
        Estimate est = estimate_success_avg(geom, params, policy, budget, sim);
        est.value *= spot;
        est.std_error *= spot;
        add_row("p_global", est,
                spot * p_success_avg(geom, params, policy, budget));
    }
    if (wants("zenith_cdf")) {
        const ZenithDistribution dist(geom, params, policy);
        const EmpiricalCdf empirical =
            estimate_zenith_cdf(geom, params, policy, sim);
        Estimate est;
        est.value = ks_distance(
            empirical, [&](double phi) { return dist.cdf({phi}); });
        est.n = sim.n_realizations;
        add_row("zenith_cdf_ks_distance", est, std::nullopt);
    }
    return table;
}

} // namespace

const std::vector<std::string>& custom_ops() {
    static const std::vector<std::string> ops = {
        "p_los",         "fspl_gain",    "mean_excess_gain",
        "slant_range_m", "duty_cycle",   "repetitions",
        "effective_density_per_m2",      "zenith_cdf",
        "zenith_pdf",    "p_success_single", "p_success_repeated",
    };
    return ops;
}

DataTable run_custom(const ScenarioConfig& config, const CustomSpec& spec) {
    if (std::find(custom_ops().begin(), custom_ops().end(), spec.op) ==
        custom_ops().end()) {
        throw ConfigError("unknown custom op: " + spec.op);
    }
    if (spec.variable != "theta_deg" && spec.variable != "phi_deg") {
        throw ConfigError("custom variable must be theta_deg or phi_deg");
    }
    if (spec.points < 1) throw ConfigError("custom points must be >= 1");

    const OrbitGeometry geom = geometry_of(config);
    const ChannelParams params = channel_of(config);
    const RepetitionPolicy policy = policy_of(config);
    const LinkBudget budget = budget_of(config);

    // Lazily built context for the heavier ops.
    std::unique_ptr<ZenithDistribution> dist;
    std::optional<double> mean_i;
    const auto need_dist = [&]() -> ZenithDistribution& {
        if (!dist) {
            dist = std::make_unique<ZenithDistribution>(geom, params, policy);
        }
        return *dist;
    };
    const auto need_mean_i = [&]() {
        if (!mean_i) mean_i = mean_interference(geom, params, policy, budget);
        return *mean_i;
    };

    DataTable table = base_table(config, "custom");
    table.meta.emplace_back("op", spec.op);
    table.meta.emplace_back("variable", spec.variable);
    table.columns = {"phi_deg", "theta_deg", spec.op};

    for (const double v : linspace(spec.min, spec.max, spec.points)) {
        std::vector<std::optional<double>> row;
        try {
            double phi;
            if (spec.variable == "theta_deg") {
                phi = zenith_from_elevation(geom, {deg_to_rad(v)}).rad;
            } else {
                phi = deg_to_rad(v);
            }
            row.emplace_back(rad_to_deg(phi));
            row.emplace_back(
                rad_to_deg(elevation_from_zenith(geom, {phi}).rad));
            const ZenithAngle z{phi};
            double value;
            if (spec.op == "p_los") {
                value = p_los(geom, params, z);
            } else if (spec.op == "fspl_gain") {
                value = fspl_gain(geom, params, z);
            } else if (spec.op == "mean_excess_gain") {
                value = mean_excess_gain(geom, params, z);
            } else if (spec.op == "slant_range_m") {
                value = slant_range(geom, z);
            } else if (spec.op == "duty_cycle") {
                value = effective_duty_cycle(geom, params, policy, z);
            } else if (spec.op == "repetitions") {
                value = static_cast<double>(repetitions(geom, params, policy, z));
            } else if (spec.op == "effective_density_per_m2") {
                value = effective_density(geom, params, policy, z);
            } else if (spec.op == "zenith_cdf") {
                value = need_dist().cdf(z);
            } else if (spec.op == "zenith_pdf") {
                value = need_dist().pdf(z);
            } else if (spec.op == "p_success_single") {
                value = p_success_single_given_interference(
                    geom, params, policy, budget, z, need_mean_i());
            } else {
                value = p_success_repeated_given_interference(
                    geom, params, policy, budget, z, need_mean_i());
            }
            row.emplace_back(value);
        } catch (const std::exception&) {
            while (row.size() < table.columns.size()) {
                row.emplace_back(std::nullopt);
            }
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

DataTable run_scenario(const ScenarioConfig& config, const std::string& command) {
    validate(config);
    if (command == "analytic") return run_analytic(config);
    if (command == "simulate") return run_simulate(config);
    if (command == "sweep") return figure_surface(config, "sweep", true);
    if (command == "figure2") return figure_duty_or_reps(config, command, false);
    if (command == "figure3") return figure_duty_or_reps(config, command, true);
    if (command == "figure4") return figure_zenith_cdf(config);
    if (command == "figure5") return figure_interference(config);
    if (command == "figure6") return figure_conditional_success(config);
    if (command == "figure7") return figure_avg_or_global(config, command, false);
    if (command == "figure8") return figure_avg_or_global(config, command, true);
    if (command == "figure9") return figure_surface(config, command, false);
    throw ConfigError("unknown command: " + command);
}

} // namespace satrep
