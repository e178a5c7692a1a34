#pragma once

#include "satrep/geometry.hpp"
#include "satrep/rng.hpp"

namespace satrep {

// ln(10)/10: converts a dB-valued normal variable into the log-space
// parameters of the corresponding lognormal gain.
inline constexpr double kRho = 0.23025850929940457;

// Clutter and carrier parameters of the satellite-to-ground channel. The
// mu/sigma pairs describe the excess path *loss* in dB for the LoS and
// NLoS states; everything leaving this module is a linear power gain.
struct ChannelParams {
    double beta = 0.3;
    double mu_los_db = 1.0;
    double sigma_los_db = 2.0;
    double mu_nlos_db = 20.0;
    double sigma_nlos_db = 8.0;
    double frequency_hz = 2.0e9;
};

ChannelParams make_channel_params(double beta, double mu_los_db,
                                  double sigma_los_db, double mu_nlos_db,
                                  double sigma_nlos_db, double frequency_hz);

// exp(-beta * sin(phi)/(cos(phi) - alpha)); equals exp(-beta * cot(theta)).
// Returns the limit value 0 at phi == phi_horizon.
double p_los(const OrbitGeometry& geom, const ChannelParams& params,
             ZenithAngle phi);

// Reciprocal free-space path loss (c / (4 pi d f))^2 at the slant range of phi.
double fspl_gain(const OrbitGeometry& geom, const ChannelParams& params,
                 ZenithAngle phi);

// Mean of the LoS/NLoS lognormal mixture of the excess path gain.
double mean_excess_gain(const OrbitGeometry& geom, const ChannelParams& params,
                        ZenithAngle phi);

// CDF of the excess path gain mixture at gain x (x > 0).
double excess_gain_cdf(const OrbitGeometry& geom, const ChannelParams& params,
                       ZenithAngle phi, double x);

// One draw: Bernoulli(p_los) state, normal dB excess loss, linear gain.
double sample_excess_gain(const OrbitGeometry& geom, const ChannelParams& params,
                          ZenithAngle phi, RandomStream& rng);

// Mixture-weight variants used where p_los has already been evaluated.
double mean_excess_gain_for_plos(const ChannelParams& params, double plos);
double excess_gain_cdf_for_plos(const ChannelParams& params, double plos,
                                double x);
double sample_excess_gain_for_plos(const ChannelParams& params, double plos,
                                   RandomStream& rng);

} // namespace satrep
