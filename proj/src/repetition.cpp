#include "satrep/repetition.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace satrep {

namespace {

void check_admittance(const RepetitionPolicy& policy, ZenithAngle phi,
                      const char* op) {
    if (!(phi.rad >= 0.0 && phi.rad <= policy.phi_max_rad)) {
        std::ostringstream msg;
        msg << op << ": zenith angle " << phi.rad
            << " rad outside admittance region [0, " << policy.phi_max_rad
            << "]";
        throw std::domain_error(msg.str());
    }
}

} // namespace

RepetitionPolicy make_policy(const OrbitGeometry& geom, double d0, double a,
                             ElevationAngle theta_min, double lambda0) {
    if (!(d0 > 0.0 && d0 <= 1.0)) {
        throw std::invalid_argument("policy: base duty cycle must be in (0, 1]");
    }
    if (!(a >= 0.0 && a <= 1.0)) {
        throw std::invalid_argument("policy: tuning factor must be in [0, 1]");
    }
    if (!(lambda0 > 0.0)) {
        throw std::invalid_argument("policy: device density must be > 0");
    }
    double phi_max = zenith_from_elevation(geom, theta_min).rad;
    phi_max = std::min(phi_max, geom.phi_horizon_rad - 1e-9);
    return {d0, a, phi_max, lambda0};
}

double effective_duty_cycle(const OrbitGeometry& geom, const ChannelParams& params,
                            const RepetitionPolicy& policy, ZenithAngle phi) {
    check_admittance(policy, phi, "effective_duty_cycle");
    if (policy.a == 0.0) return policy.d0;
    const double ratio = zenith_cot_ratio(geom, phi);
    if (std::isinf(ratio)) return 1.0;
    const double shaping = -std::expm1(-policy.a * params.beta * ratio);
    return policy.d0 + (1.0 - policy.d0) * shaping;
}

long long repetitions(const OrbitGeometry& geom, const ChannelParams& params,
                      const RepetitionPolicy& policy, ZenithAngle phi) {
    double ratio = effective_duty_cycle(geom, params, policy, phi) / policy.d0;
    // Snap near-integers before the ceiling so floating error cannot add a
    // spurious repetition.
    const double rounded = std::round(ratio);
    if (std::abs(ratio - rounded) < 1e-9) ratio = rounded;
    return std::max(1LL, static_cast<long long>(std::ceil(ratio)));
}

double effective_density(const OrbitGeometry& geom, const ChannelParams& params,
                         const RepetitionPolicy& policy, ZenithAngle phi) {
    return policy.lambda0 * effective_duty_cycle(geom, params, policy, phi);
}

double duty_cycle_breakpoint(const OrbitGeometry& geom, const ChannelParams& params,
                             const RepetitionPolicy& policy, double duty_level) {
    if (duty_level <= policy.d0) return 0.0;
    if (policy.a == 0.0) return policy.phi_max_rad;
    const double shaping = (duty_level - policy.d0) / (1.0 - policy.d0);
    if (shaping >= 1.0) return policy.phi_max_rad;
    // Invert the shaping function: r = -ln(1 - shaping)/(a*beta), then solve
    // sin(phi)/(cos(phi) - alpha) = r for phi in [0, phi_horizon):
    // phi = atan(r) - asin(alpha * r / sqrt(1 + r^2)).
    const double r = -std::log1p(-shaping) / (policy.a * params.beta);
    const double phi =
        std::atan(r) - std::asin(geom.alpha * r / std::sqrt(1.0 + r * r));
    return std::clamp(phi, 0.0, policy.phi_max_rad);
}

} // namespace satrep
