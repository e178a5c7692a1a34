#pragma once

#include "satrep/channel.hpp"
#include "satrep/geometry.hpp"

namespace satrep {

// Elevation-dependent repetition policy: devices deeper toward the
// admittance edge repeat more, inflating their on-air duty cycle from the
// base value d0 up to at most 1.
struct RepetitionPolicy {
    double d0 = 1e-6;        // base duty cycle
    double a = 0.0;          // tuning factor in [0, 1]
    double phi_max_rad = 0.0; // admittance bound (zenith angle)
    double lambda0 = 0.0;    // ground device density, devices per m^2
};

// Builds a policy whose admittance bound is the zenith angle of the given
// minimum elevation. theta_min = 0 is clamped just inside the horizon so
// that downstream integrands stay finite.
RepetitionPolicy make_policy(const OrbitGeometry& geom, double d0, double a,
                             ElevationAngle theta_min, double lambda0);

// D(phi) = d0 + (1 - d0) * (1 - exp(-a * beta * sin(phi)/(cos(phi)-alpha))).
double effective_duty_cycle(const OrbitGeometry& geom, const ChannelParams& params,
                            const RepetitionPolicy& policy, ZenithAngle phi);

// N(phi) = ceil(D(phi) / d0), snapped to the nearest integer first when the
// ratio is within 1e-9 of one.
long long repetitions(const OrbitGeometry& geom, const ChannelParams& params,
                      const RepetitionPolicy& policy, ZenithAngle phi);

// Density of concurrently on-air devices: lambda0 * D(phi).
double effective_density(const OrbitGeometry& geom, const ChannelParams& params,
                         const RepetitionPolicy& policy, ZenithAngle phi);

// Zenith angle at which D(phi) reaches the given duty cycle, or phi_max when
// the level is never reached. Closed-form inverse of the shaping function.
double duty_cycle_breakpoint(const OrbitGeometry& geom, const ChannelParams& params,
                             const RepetitionPolicy& policy, double duty_level);

} // namespace satrep
