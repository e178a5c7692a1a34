#include "satrep/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "satrep/errors.hpp"
#include "satrep/units.hpp"

namespace satrep {

namespace {

// CDF of a lognormal gain whose dB-valued loss is N(mu_db, sigma_db^2):
// log-space mean is -rho*mu_db and log-space stddev is rho*sigma_db.
double lognormal_gain_cdf(double x, double mu_db, double sigma_db) {
    const double m = -kRho * mu_db;
    if (sigma_db == 0.0) return std::log(x) >= m ? 1.0 : 0.0;
    const double s = kRho * sigma_db;
    return 0.5 * (1.0 + std::erf((std::log(x) - m) / (s * std::sqrt(2.0))));
}

double lognormal_gain_mean(double mu_db, double sigma_db) {
    const double s = kRho * sigma_db;
    return std::exp(-kRho * mu_db + 0.5 * s * s);
}

} // namespace

ChannelParams make_channel_params(double beta, double mu_los_db,
                                  double sigma_los_db, double mu_nlos_db,
                                  double sigma_nlos_db, double frequency_hz) {
    if (!(std::isfinite(beta) && beta > 0.0)) {
        throw std::invalid_argument("channel: beta must be finite and > 0");
    }
    if (!(sigma_los_db >= 0.0) || !(sigma_nlos_db >= 0.0)) {
        throw std::invalid_argument("channel: sigma values must be >= 0");
    }
    if (!(mu_nlos_db >= mu_los_db)) {
        throw std::invalid_argument(
            "channel: NLoS excess loss must be at least the LoS excess loss");
    }
    if (!(std::isfinite(frequency_hz) && frequency_hz > 0.0)) {
        throw std::invalid_argument("channel: frequency must be finite and > 0");
    }
    return {beta, mu_los_db, sigma_los_db, mu_nlos_db, sigma_nlos_db,
            frequency_hz};
}

double p_los(const OrbitGeometry& geom, const ChannelParams& params,
             ZenithAngle phi) {
    const double ratio = zenith_cot_ratio(geom, phi);
    if (std::isinf(ratio)) return 0.0;
    return std::exp(-params.beta * ratio);
}

double fspl_gain(const OrbitGeometry& geom, const ChannelParams& params,
                 ZenithAngle phi) {
    const double d = slant_range(geom, phi);
    const double x = kSpeedOfLight / (4.0 * kPi * d * params.frequency_hz);
    return x * x;
}

double mean_excess_gain_for_plos(const ChannelParams& params, double plos) {
    return plos * lognormal_gain_mean(params.mu_los_db, params.sigma_los_db) +
           (1.0 - plos) *
               lognormal_gain_mean(params.mu_nlos_db, params.sigma_nlos_db);
}

double mean_excess_gain(const OrbitGeometry& geom, const ChannelParams& params,
                        ZenithAngle phi) {
    return mean_excess_gain_for_plos(params, p_los(geom, params, phi));
}

double excess_gain_cdf_for_plos(const ChannelParams& params, double plos,
                                double x) {
    if (!(x > 0.0)) {
        throw std::domain_error("excess_gain_cdf: gain must be > 0");
    }
    return plos * lognormal_gain_cdf(x, params.mu_los_db, params.sigma_los_db) +
           (1.0 - plos) *
               lognormal_gain_cdf(x, params.mu_nlos_db, params.sigma_nlos_db);
}

double excess_gain_cdf(const OrbitGeometry& geom, const ChannelParams& params,
                       ZenithAngle phi, double x) {
    return excess_gain_cdf_for_plos(params, p_los(geom, params, phi), x);
}

double sample_excess_gain_for_plos(const ChannelParams& params, double plos,
                                   RandomStream& rng) {
    double loss_db;
    if (rng.bernoulli(plos)) {
        loss_db = params.sigma_los_db == 0.0
                      ? params.mu_los_db
                      : rng.normal(params.mu_los_db, params.sigma_los_db);
    } else {
        loss_db = params.sigma_nlos_db == 0.0
                      ? params.mu_nlos_db
                      : rng.normal(params.mu_nlos_db, params.sigma_nlos_db);
    }
    return std::pow(10.0, -loss_db / 10.0);
}

double sample_excess_gain(const OrbitGeometry& geom, const ChannelParams& params,
                          ZenithAngle phi, RandomStream& rng) {
    return sample_excess_gain_for_plos(params, p_los(geom, params, phi), rng);
}

} // namespace satrep
