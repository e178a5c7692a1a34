#include "satrep/geometry.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "satrep/errors.hpp"
#include "satrep/units.hpp"

namespace satrep {

namespace {

void check_zenith_domain(const OrbitGeometry& geom, ZenithAngle phi,
                         const char* op) {
    if (!(phi.rad >= 0.0 && phi.rad <= geom.phi_horizon_rad)) {
        std::ostringstream msg;
        msg << op << ": zenith angle " << phi.rad << " rad outside [0, "
            << geom.phi_horizon_rad << "]";
        throw std::domain_error(msg.str());
    }
}

} // namespace

OrbitGeometry make_geometry(double earth_radius_m, double altitude_m) {
    if (!(std::isfinite(earth_radius_m) && earth_radius_m > 0.0)) {
        throw std::invalid_argument("make_geometry: earth radius must be finite and > 0");
    }
    if (!(std::isfinite(altitude_m) && altitude_m > 0.0)) {
        throw std::invalid_argument("make_geometry: altitude must be finite and > 0");
    }
    OrbitGeometry geom;
    geom.earth_radius_m = earth_radius_m;
    geom.altitude_m = altitude_m;
    geom.alpha = earth_radius_m / (earth_radius_m + altitude_m);
    geom.phi_horizon_rad = std::acos(geom.alpha);
    return geom;
}

double zenith_cot_ratio(const OrbitGeometry& geom, ZenithAngle phi) {
    check_zenith_domain(geom, phi, "zenith_cot_ratio");
    const double denom = std::cos(phi.rad) - geom.alpha;
    if (denom <= 0.0) return std::numeric_limits<double>::infinity();
    return std::sin(phi.rad) / denom;
}

ElevationAngle elevation_from_zenith(const OrbitGeometry& geom, ZenithAngle phi) {
    check_zenith_domain(geom, phi, "elevation_from_zenith");
    // atan2(cos(phi) - alpha, sin(phi)) == acot(sin(phi)/(cos(phi) - alpha))
    // on this domain, and lands exactly on the endpoint values.
    const double denom = std::cos(phi.rad) - geom.alpha;
    if (denom <= 0.0) return {0.0};
    const double theta = std::atan2(denom, std::sin(phi.rad));
    return {std::min(theta, kPi / 2.0)};
}

ZenithAngle zenith_from_elevation(const OrbitGeometry& geom, ElevationAngle theta) {
    if (!(theta.rad >= 0.0 && theta.rad <= kPi / 2.0)) {
        std::ostringstream msg;
        msg << "zenith_from_elevation: elevation " << theta.rad
            << " rad outside [0, pi/2]";
        throw std::domain_error(msg.str());
    }
    if (theta.rad == 0.0) return {geom.phi_horizon_rad};
    if (theta.rad >= kPi / 2.0) return {0.0};

    // Elevation is strictly decreasing in phi; bisect until the bracket is
    // below 1e-13 rad.
    double lo = 0.0;
    double hi = geom.phi_horizon_rad;
    while (hi - lo > 1e-13) {
        const double mid = 0.5 * (lo + hi);
        if (elevation_from_zenith(geom, {mid}).rad > theta.rad) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return {0.5 * (lo + hi)};
}

double slant_range(const OrbitGeometry& geom, ZenithAngle phi) {
    check_zenith_domain(geom, phi, "slant_range");
    // Law of cosines rearranged as h^2 + 4 R (R+h) sin^2(phi/2); exact at
    // phi = 0 and free of cancellation.
    const double r = geom.earth_radius_m;
    const double s = r + geom.altitude_m;
    const double half_sin = std::sin(0.5 * phi.rad);
    return std::sqrt(geom.altitude_m * geom.altitude_m +
                     4.0 * r * s * half_sin * half_sin);
}

double cap_fraction(ZenithAngle phi_max) {
    if (!(phi_max.rad >= 0.0 && phi_max.rad <= kPi)) {
        throw std::domain_error("cap_fraction: angle outside [0, pi]");
    }
    return 0.5 * (1.0 - std::cos(phi_max.rad));
}

} // namespace satrep
