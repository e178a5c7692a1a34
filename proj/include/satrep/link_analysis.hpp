#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "satrep/quadrature.hpp"
#include "satrep/repetition.hpp"
#include "satrep/zenith_distribution.hpp"

namespace satrep {

// Uplink power budget. All values linear SI; the CLI converts from
// dBm/dB/per-km2 at the boundary.
struct LinkBudget {
    double tx_power_w = 0.2;
    double noise_power_w = 1.58e-17;
    double sinr_threshold = 0.1; // linear
    double kappa = 1.0;          // coordination factor, (0, 1]
    double lambda0 = 1e-8;       // device density per m^2
};

LinkBudget make_budget(double tx_power_w, double noise_power_w,
                       double sinr_threshold, double kappa, double lambda0);

struct ConditionalSuccessRow {
    double phi_rad = 0.0;
    double p_single = 0.0;
    double p_repeated = 0.0;
    long long n_repetitions = 1;
};

struct ResultMeta {
    std::string method; // "analytic" or "montecarlo"
    std::uint64_t seed = 0;
    long long sample_count = 0;
    double tolerance = 0.0;
};

struct CoverageResult {
    double mean_interference_w = 0.0;
    std::vector<ConditionalSuccessRow> p_success_conditional;
    double p_success_avg = 0.0;
    double p_spot = 0.0;
    double p_global = 0.0;
    ResultMeta meta;
};

// Campbell mean of the aggregate interference power:
// E[I] = kappa p_t 2 pi R^2 lambda0 * integral zeta_bar(phi) l(phi) sin(phi) D(phi) dphi.
double mean_interference(const OrbitGeometry& geom, const ChannelParams& params,
                         const RepetitionPolicy& policy, const LinkBudget& budget);

// Single-transmission success probability at zenith angle phi_o:
// p(1) = 1 - F_zeta(gamma (I_bar + W) / (p_t l(phi_o))).
double p_success_single(const OrbitGeometry& geom, const ChannelParams& params,
                        const RepetitionPolicy& policy, const LinkBudget& budget,
                        ZenithAngle phi_o);

// p(N) = 1 - (1 - p(1))^N with N = repetitions(phi_o).
double p_success_repeated(const OrbitGeometry& geom, const ChannelParams& params,
                          const RepetitionPolicy& policy, const LinkBudget& budget,
                          ZenithAngle phi_o);

// Variants taking a precomputed interference mean, to keep sweeps from
// re-integrating it per point.
double p_success_single_given_interference(const OrbitGeometry& geom,
                                           const ChannelParams& params,
                                           const RepetitionPolicy& policy,
                                           const LinkBudget& budget,
                                           ZenithAngle phi_o, double mean_i_w);
double p_success_repeated_given_interference(const OrbitGeometry& geom,
                                             const ChannelParams& params,
                                             const RepetitionPolicy& policy,
                                             const LinkBudget& budget,
                                             ZenithAngle phi_o, double mean_i_w);

// Average success over the admittance region, deconditioned with the
// zenith density of active devices.
double p_success_avg(const OrbitGeometry& geom, const ChannelParams& params,
                     const RepetitionPolicy& policy, const LinkBudget& budget);
double p_success_avg_given_interference(const OrbitGeometry& geom,
                                        const ChannelParams& params,
                                        const RepetitionPolicy& policy,
                                        const LinkBudget& budget,
                                        double mean_i_w);

// Probability that a device lies inside some satellite's admittance cap,
// k (1 - cos phi_max)/2 for k non-overlapping spots. Throws NumericError
// when the spots would overlap (value above 1).
double p_spot(const OrbitGeometry& geom, int satellite_count, ZenithAngle phi_max);

// Full analytic coverage evaluation, p_global = p_spot * p_success_avg.
CoverageResult p_global(const OrbitGeometry& geom, const ChannelParams& params,
                        const RepetitionPolicy& policy, const LinkBudget& budget,
                        int satellite_count);

} // namespace satrep
