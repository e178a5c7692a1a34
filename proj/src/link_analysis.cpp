#include "satrep/link_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "satrep/errors.hpp"
#include "satrep/units.hpp"

namespace satrep {

namespace {

double success_from_cdf(const OrbitGeometry& geom, const ChannelParams& params,
                        const LinkBudget& budget, ZenithAngle phi_o,
                        double mean_i_w) {
    const double gain = fspl_gain(geom, params, phi_o);
    const double threshold =
        budget.sinr_threshold * (mean_i_w + budget.noise_power_w) /
        (budget.tx_power_w * gain);
    const double plos = p_los(geom, params, phi_o);
    return 1.0 - excess_gain_cdf_for_plos(params, plos, threshold);
}

double repeated_from_single(double p1, long long n) {
    if (p1 <= 0.0) return 0.0;
    if (p1 >= 1.0) return 1.0;
    // 1 - (1 - p1)^n without precision loss for small p1 or large n.
    return -std::expm1(static_cast<double>(n) * std::log1p(-p1));
}

} // namespace

LinkBudget make_budget(double tx_power_w, double noise_power_w,
                       double sinr_threshold, double kappa, double lambda0) {
    if (!(tx_power_w > 0.0) || !(noise_power_w > 0.0)) {
        throw std::invalid_argument("budget: powers must be > 0");
    }
    if (!(sinr_threshold > 0.0)) {
        throw std::invalid_argument("budget: SINR threshold must be > 0");
    }
    if (!(kappa > 0.0 && kappa <= 1.0)) {
        throw std::invalid_argument("budget: kappa must be in (0, 1]");
    }
    if (!(lambda0 > 0.0)) {
        throw std::invalid_argument("budget: device density must be > 0");
    }
    return {tx_power_w, noise_power_w, sinr_threshold, kappa, lambda0};
}

double mean_interference(const OrbitGeometry& geom, const ChannelParams& params,
                         const RepetitionPolicy& policy, const LinkBudget& budget) {
    const double r = geom.earth_radius_m;
    const auto integral = integrate(
        [&](double phi) {
            const ZenithAngle z{phi};
            return mean_excess_gain(geom, params, z) * fspl_gain(geom, params, z) *
                   std::sin(phi) * effective_duty_cycle(geom, params, policy, z);
        },
        0.0, policy.phi_max_rad, {});
    return budget.kappa * budget.tx_power_w * 2.0 * kPi * r * r *
           budget.lambda0 * integral.value;
}

double p_success_single_given_interference(const OrbitGeometry& geom,
                                           const ChannelParams& params,
                                           const RepetitionPolicy& policy,
                                           const LinkBudget& budget,
                                           ZenithAngle phi_o, double mean_i_w) {
    if (!(phi_o.rad >= 0.0 && phi_o.rad <= policy.phi_max_rad)) {
        throw std::domain_error("p_success: zenith angle outside admittance region");
    }
    return success_from_cdf(geom, params, budget, phi_o, mean_i_w);
}

double p_success_single(const OrbitGeometry& geom, const ChannelParams& params,
                        const RepetitionPolicy& policy, const LinkBudget& budget,
                        ZenithAngle phi_o) {
    return p_success_single_given_interference(
        geom, params, policy, budget, phi_o,
        mean_interference(geom, params, policy, budget));
}

double p_success_repeated_given_interference(const OrbitGeometry& geom,
                                             const ChannelParams& params,
                                             const RepetitionPolicy& policy,
                                             const LinkBudget& budget,
                                             ZenithAngle phi_o, double mean_i_w) {
    const double p1 = p_success_single_given_interference(geom, params, policy,
                                                          budget, phi_o, mean_i_w);
    return repeated_from_single(p1, repetitions(geom, params, policy, phi_o));
}

double p_success_repeated(const OrbitGeometry& geom, const ChannelParams& params,
                          const RepetitionPolicy& policy, const LinkBudget& budget,
                          ZenithAngle phi_o) {
    return p_success_repeated_given_interference(
        geom, params, policy, budget, phi_o,
        mean_interference(geom, params, policy, budget));
}

double p_success_avg(const OrbitGeometry& geom, const ChannelParams& params,
                     const RepetitionPolicy& policy, const LinkBudget& budget) {
    return p_success_avg_given_interference(
        geom, params, policy, budget,
        mean_interference(geom, params, policy, budget));
}

double p_success_avg_given_interference(const OrbitGeometry& geom,
                                        const ChannelParams& params,
                                        const RepetitionPolicy& policy,
                                        const LinkBudget& budget,
                                        double mean_i_w) {
    const double mean_i = mean_i_w;
    const double phi_max = policy.phi_max_rad;

    const auto norm = integrate(
        [&](double phi) {
            return std::sin(phi) * effective_duty_cycle(geom, params, policy, {phi});
        },
        0.0, phi_max, {});

    const auto piece_integrand = [&](double phi, long long n) {
        const double p1 = success_from_cdf(geom, params, budget, {phi}, mean_i);
        return repeated_from_single(p1, n) * std::sin(phi) *
               effective_duty_cycle(geom, params, policy, {phi}) / norm.value;
    };

    // The repetition count is a step function of phi, so integrate piecewise
    // between the duty-cycle breakpoints where N is constant. Narrow pieces
    // take a single Gauss-Kronrod panel; wide ones get the adaptive path.
    const long long n_max = repetitions(geom, params, policy, {phi_max});
    QuadratureOptions piece_opts;
    piece_opts.relative_tolerance = 1e-9;
    piece_opts.absolute_floor = 1e-13;
    piece_opts.scale_hint = 1.0;

    double total = 0.0;
    double piece_start = 0.0;
    for (long long n = 2; n <= n_max && piece_start < phi_max; ++n) {
        double piece_end =
            duty_cycle_breakpoint(geom, params, policy, static_cast<double>(n) * policy.d0);
        piece_end = std::min(piece_end, phi_max);
        if (n == n_max) piece_end = phi_max;
        if (piece_end <= piece_start) continue;
        const long long reps = n;
        if (piece_end - piece_start < 1e-4) {
            total += integrate_panel(
                [&](double phi) { return piece_integrand(phi, reps); },
                piece_start, piece_end);
        } else {
            total += integrate([&](double phi) { return piece_integrand(phi, reps); },
                               piece_start, piece_end, piece_opts)
                         .value;
        }
        piece_start = piece_end;
    }
    if (n_max == 1) {
        total = integrate([&](double phi) { return piece_integrand(phi, 1); }, 0.0,
                          phi_max, piece_opts)
                    .value;
    }
    return std::clamp(total, 0.0, 1.0);
}

double p_spot(const OrbitGeometry& geom, int satellite_count, ZenithAngle phi_max) {
    (void)geom;
    if (satellite_count < 1) {
        throw std::invalid_argument("p_spot: satellite count must be >= 1");
    }
    const double value = satellite_count * cap_fraction(phi_max);
    if (value > 1.0 + 1e-12) {
        std::ostringstream msg;
        msg << "p_spot: " << satellite_count
            << " non-overlapping spots of cap fraction " << cap_fraction(phi_max)
            << " would cover " << value << " > 1 of the sphere";
        throw NumericError(msg.str());
    }
    return std::min(value, 1.0);
}

CoverageResult p_global(const OrbitGeometry& geom, const ChannelParams& params,
                        const RepetitionPolicy& policy, const LinkBudget& budget,
                        int satellite_count) {
    CoverageResult result;
    result.mean_interference_w = mean_interference(geom, params, policy, budget);

    constexpr int kTablePoints = 65;
    result.p_success_conditional.reserve(kTablePoints);
    for (int i = 0; i < kTablePoints; ++i) {
        const double phi =
            policy.phi_max_rad * static_cast<double>(i) / (kTablePoints - 1);
        ConditionalSuccessRow row;
        row.phi_rad = phi;
        row.p_single = p_success_single_given_interference(
            geom, params, policy, budget, {phi}, result.mean_interference_w);
        row.n_repetitions = repetitions(geom, params, policy, {phi});
        row.p_repeated = p_success_repeated_given_interference(
            geom, params, policy, budget, {phi}, result.mean_interference_w);
        result.p_success_conditional.push_back(row);
    }

    result.p_success_avg = p_success_avg_given_interference(
        geom, params, policy, budget, result.mean_interference_w);
    result.p_spot = p_spot(geom, satellite_count, {policy.phi_max_rad});
    result.p_global = result.p_spot * result.p_success_avg;
    result.meta.method = "analytic";
    result.meta.tolerance = QuadratureOptions{}.relative_tolerance;
    return result;
}

} // namespace satrep
