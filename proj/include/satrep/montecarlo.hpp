#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "satrep/link_analysis.hpp"
#include "satrep/rng.hpp"

namespace satrep {

struct SimConfig {
    std::uint64_t seed = 1;
    long long n_realizations = 2000;
    long long n_devices_cap = 10'000'000;
    // Sensitivity switch: draw a fresh interference field per repeat instead
    // of testing against the analytic mean.
    bool resample_interference_per_repeat = false;
};

struct Estimate {
    double value = 0.0;
    double std_error = 0.0;
    long long n = 0;
};

// Samples the thinned device field on the admittance cap: the devices
// concurrently on-air form a Poisson process with intensity
// lambda0 * D(phi), so the count is Poisson(K(phi_max)) and positions follow
// the cap law accepted with probability D(phi)/D(phi_max).
class DeviceFieldSampler {
public:
    DeviceFieldSampler(const OrbitGeometry& geom, const ChannelParams& params,
                       const RepetitionPolicy& policy, double field_lambda0,
                       long long n_devices_cap);

    void sample(RandomStream& rng, std::vector<ZenithAngle>& out) const;
    double mean_count() const { return mean_count_; }

private:
    OrbitGeometry geom_;
    ChannelParams params_;
    RepetitionPolicy policy_;
    double cos_phi_max_ = 1.0;
    double duty_max_ = 0.0;
    double mean_count_ = 0.0;
    long long cap_ = 0;
};

// One-shot field draw with the intensity taken from budget.lambda0.
std::vector<ZenithAngle> sample_device_field(const OrbitGeometry& geom,
                                             const ChannelParams& params,
                                             const RepetitionPolicy& policy,
                                             const LinkBudget& budget,
                                             RandomStream& rng);

// Empirical mean of the aggregate interference power over
// sim.n_realizations independent field realizations.
Estimate estimate_interference(const OrbitGeometry& geom, const ChannelParams& params,
                               const RepetitionPolicy& policy, const LinkBudget& budget,
                               const SimConfig& sim);

// Success probability at a fixed zenith angle: each trial repeats the frame
// N(phi_o) times with independent excess gains, succeeding if any repeat
// clears the SINR threshold. std_error is the Wilson-interval half width.
Estimate estimate_success_at(const OrbitGeometry& geom, const ChannelParams& params,
                             const RepetitionPolicy& policy, const LinkBudget& budget,
                             const SimConfig& sim, ZenithAngle phi_o);

// Success probability averaged over the zenith distribution of active devices.
Estimate estimate_success_avg(const OrbitGeometry& geom, const ChannelParams& params,
                              const RepetitionPolicy& policy, const LinkBudget& budget,
                              const SimConfig& sim);

struct EmpiricalCdf {
    std::vector<double> sorted_phi_rad;
};

// sim.n_realizations zenith samples of active devices, sorted ascending.
EmpiricalCdf estimate_zenith_cdf(const OrbitGeometry& geom, const ChannelParams& params,
                                 const RepetitionPolicy& policy, const SimConfig& sim);

// Kolmogorov-Smirnov distance between the empirical samples and a CDF.
double ks_distance(const EmpiricalCdf& empirical,
                   const std::function<double(double)>& cdf);

// Deterministic pairwise summation in index order.
double pairwise_sum(const std::vector<double>& values);

} // namespace satrep
