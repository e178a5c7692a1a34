#include "satrep/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "satrep/errors.hpp"
#include "satrep/units.hpp"
#include "satrep/zenith_distribution.hpp"

namespace satrep {

namespace {

double pairwise_sum_range(const std::vector<double>& v, std::size_t lo,
                          std::size_t hi) {
    const std::size_t n = hi - lo;
    if (n <= 8) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += v[i];
        return s;
    }
    const std::size_t mid = lo + n / 2;
    return pairwise_sum_range(v, lo, mid) + pairwise_sum_range(v, mid, hi);
}

Estimate mean_estimate(const std::vector<double>& values) {
    Estimate est;
    est.n = static_cast<long long>(values.size());
    if (values.empty()) return est;
    est.value = pairwise_sum(values) / static_cast<double>(values.size());
    std::vector<double> sq(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double d = values[i] - est.value;
        sq[i] = d * d;
    }
    if (values.size() > 1) {
        const double var =
            pairwise_sum(sq) / static_cast<double>(values.size() - 1);
        est.std_error = std::sqrt(var / static_cast<double>(values.size()));
    }
    return est;
}

// Wilson score half width at one standard normal unit.
Estimate bernoulli_estimate(long long successes, long long trials) {
    Estimate est;
    est.n = trials;
    if (trials == 0) return est;
    const double n = static_cast<double>(trials);
    const double p_hat = static_cast<double>(successes) / n;
    est.value = p_hat;
    const double denom = 1.0 + 1.0 / n;
    est.std_error =
        std::sqrt(p_hat * (1.0 - p_hat) / n + 1.0 / (4.0 * n * n)) / denom;
    return est;
}

} // namespace

double pairwise_sum(const std::vector<double>& values) {
    return pairwise_sum_range(values, 0, values.size());
}

DeviceFieldSampler::DeviceFieldSampler(const OrbitGeometry& geom,
                                       const ChannelParams& params,
                                       const RepetitionPolicy& policy,
                                       double field_lambda0,
                                       long long n_devices_cap)
    : geom_(geom), params_(params), policy_(policy), cap_(n_devices_cap) {
    cos_phi_max_ = std::cos(policy.phi_max_rad);
    duty_max_ = effective_duty_cycle(geom, params, policy, {policy.phi_max_rad});
    RepetitionPolicy field_policy = policy;
    field_policy.lambda0 = field_lambda0;
    mean_count_ =
        avg_point_count(geom, params, field_policy, {policy.phi_max_rad});
}

void DeviceFieldSampler::sample(RandomStream& rng,
                                std::vector<ZenithAngle>& out) const {
    out.clear();
    const long long count = rng.poisson(mean_count_);
    if (count > cap_) {
        std::ostringstream msg;
        msg << "device field realization of " << count
            << " devices exceeds the safety cap of " << cap_;
        throw NumericError(msg.str());
    }
    out.reserve(static_cast<std::size_t>(count));
    for (long long i = 0; i < count; ++i) {
        // Cap-law proposal thinned by D(phi)/D(phi_max); D is non-decreasing.
        for (;;) {
            const double cos_phi = rng.uniform(cos_phi_max_, 1.0);
            const double phi = std::acos(std::min(cos_phi, 1.0));
            const double duty =
                effective_duty_cycle(geom_, params_, policy_, {phi});
            if (rng.uniform() * duty_max_ < duty) {
                out.push_back({phi});
                break;
            }
        }
    }
}

std::vector<ZenithAngle> sample_device_field(const OrbitGeometry& geom,
                                             const ChannelParams& params,
                                             const RepetitionPolicy& policy,
                                             const LinkBudget& budget,
                                             RandomStream& rng) {
    const DeviceFieldSampler sampler(geom, params, policy, budget.lambda0,
                                     SimConfig{}.n_devices_cap);
    std::vector<ZenithAngle> field;
    sampler.sample(rng, field);
    return field;
}

Estimate estimate_interference(const OrbitGeometry& geom, const ChannelParams& params,
                               const RepetitionPolicy& policy, const LinkBudget& budget,
                               const SimConfig& sim) {
    const DeviceFieldSampler sampler(geom, params, policy, budget.lambda0,
                                     sim.n_devices_cap);
    std::vector<double> totals(static_cast<std::size_t>(sim.n_realizations));
    std::vector<ZenithAngle> field;
    for (long long r = 0; r < sim.n_realizations; ++r) {
        RandomStream pos_rng(sim.seed, static_cast<std::uint64_t>(r),
                             StreamPurpose::device_position);
        RandomStream gain_rng(sim.seed, static_cast<std::uint64_t>(r),
                              StreamPurpose::channel_gain);
        sampler.sample(pos_rng, field);
        double total = 0.0;
        for (const ZenithAngle& phi : field) {
            const double zeta = sample_excess_gain(geom, params, phi, gain_rng);
            total += budget.kappa * budget.tx_power_w * zeta *
                     fspl_gain(geom, params, phi);
        }
        totals[static_cast<std::size_t>(r)] = total;
    }
    return mean_estimate(totals);
}

namespace {

// One frame attempt with N(phi_o) repeats against a fixed mean interference,
// or against freshly drawn interference fields when resampling is enabled.
bool run_success_trial(const OrbitGeometry& geom, const ChannelParams& params,
                       const RepetitionPolicy& policy, const LinkBudget& budget,
                       const SimConfig& sim, const DeviceFieldSampler& sampler,
                       ZenithAngle phi_o, double mean_i_w, RandomStream& rng) {
    const double gain = fspl_gain(geom, params, phi_o);
    const double plos = p_los(geom, params, phi_o);
    const long long reps = repetitions(geom, params, policy, phi_o);
    const double fixed_threshold = budget.sinr_threshold *
                                   (mean_i_w + budget.noise_power_w) /
                                   (budget.tx_power_w * gain);

    std::vector<ZenithAngle> field;
    for (long long k = 0; k < reps; ++k) {
        double threshold = fixed_threshold;
        if (sim.resample_interference_per_repeat) {
            sampler.sample(rng, field);
            double interference = 0.0;
            for (const ZenithAngle& phi : field) {
                interference += budget.kappa * budget.tx_power_w *
                                sample_excess_gain(geom, params, phi, rng) *
                                fspl_gain(geom, params, phi);
            }
            threshold = budget.sinr_threshold *
                        (interference + budget.noise_power_w) /
                        (budget.tx_power_w * gain);
        }
        const double zeta = sample_excess_gain_for_plos(params, plos, rng);
        if (zeta > threshold) return true;
    }
    return false;
}

} // namespace

Estimate estimate_success_at(const OrbitGeometry& geom, const ChannelParams& params,
                             const RepetitionPolicy& policy, const LinkBudget& budget,
                             const SimConfig& sim, ZenithAngle phi_o) {
    const double mean_i = mean_interference(geom, params, policy, budget);
    const DeviceFieldSampler sampler(geom, params, policy, budget.lambda0,
                                     sim.n_devices_cap);
    long long successes = 0;
    for (long long t = 0; t < sim.n_realizations; ++t) {
        RandomStream rng(sim.seed, static_cast<std::uint64_t>(t),
                         StreamPurpose::success_trial);
        if (run_success_trial(geom, params, policy, budget, sim, sampler, phi_o,
                              mean_i, rng)) {
            ++successes;
        }
    }
    return bernoulli_estimate(successes, sim.n_realizations);
}

Estimate estimate_success_avg(const OrbitGeometry& geom, const ChannelParams& params,
                              const RepetitionPolicy& policy, const LinkBudget& budget,
                              const SimConfig& sim) {
    const double mean_i = mean_interference(geom, params, policy, budget);
    const DeviceFieldSampler sampler(geom, params, policy, budget.lambda0,
                                     sim.n_devices_cap);
    const ZenithDistribution dist(geom, params, policy);
    long long successes = 0;
    for (long long t = 0; t < sim.n_realizations; ++t) {
        RandomStream zenith_rng(sim.seed, static_cast<std::uint64_t>(t),
                                StreamPurpose::zenith_sample);
        RandomStream trial_rng(sim.seed, static_cast<std::uint64_t>(t),
                               StreamPurpose::success_trial);
        const ZenithAngle phi_o = dist.sample(zenith_rng);
        if (run_success_trial(geom, params, policy, budget, sim, sampler, phi_o,
                              mean_i, trial_rng)) {
            ++successes;
        }
    }
    return bernoulli_estimate(successes, sim.n_realizations);
}

EmpiricalCdf estimate_zenith_cdf(const OrbitGeometry& geom, const ChannelParams& params,
                                 const RepetitionPolicy& policy, const SimConfig& sim) {
    EmpiricalCdf result;
    result.sorted_phi_rad.reserve(static_cast<std::size_t>(sim.n_realizations));
    RandomStream rng(sim.seed, 0, StreamPurpose::zenith_sample);
    const double cos_phi_max = std::cos(policy.phi_max_rad);
    const double duty_max =
        effective_duty_cycle(geom, params, policy, {policy.phi_max_rad});
    for (long long i = 0; i < sim.n_realizations; ++i) {
        for (;;) {
            const double cos_phi = rng.uniform(cos_phi_max, 1.0);
            const double phi = std::acos(std::min(cos_phi, 1.0));
            const double duty = effective_duty_cycle(geom, params, policy, {phi});
            if (rng.uniform() * duty_max < duty) {
                result.sorted_phi_rad.push_back(phi);
                break;
            }
        }
    }
    std::sort(result.sorted_phi_rad.begin(), result.sorted_phi_rad.end());
    return result;
}

double ks_distance(const EmpiricalCdf& empirical,
                   const std::function<double(double)>& cdf) {
    const std::size_t n = empirical.sorted_phi_rad.size();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double f = cdf(empirical.sorted_phi_rad[i]);
        const double lo = static_cast<double>(i) / static_cast<double>(n);
        const double hi = static_cast<double>(i + 1) / static_cast<double>(n);
        worst = std::max({worst, std::abs(f - lo), std::abs(f - hi)});
    }
    return worst;
}

} // namespace satrep
