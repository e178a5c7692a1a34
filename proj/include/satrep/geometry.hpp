#pragma once

namespace satrep {

// Earth-centered geometry for a satellite on a circular orbit at a fixed
// altitude. alpha = R/(R+h); phi_horizon is the zenith angle at which the
// satellite sits on the device's horizon.
struct OrbitGeometry {
    double earth_radius_m = 0.0;
    double altitude_m = 0.0;
    double alpha = 0.0;
    double phi_horizon_rad = 0.0;
};

// Angle at the Earth's center between the sub-satellite point and the device.
struct ZenithAngle {
    double rad = 0.0;
};

// Angle between the satellite direction and the local horizon at the device.
struct ElevationAngle {
    double rad = 0.0;
};

OrbitGeometry make_geometry(double earth_radius_m, double altitude_m);

// theta = acot(sin(phi) / (cos(phi) - alpha)), strictly decreasing on
// [0, phi_horizon]; phi = 0 maps to pi/2 (satellite at zenith) and
// phi = phi_horizon maps to 0 (satellite at the horizon).
ElevationAngle elevation_from_zenith(const OrbitGeometry& geom, ZenithAngle phi);

// Inverse of elevation_from_zenith: the unique phi in [0, phi_horizon].
ZenithAngle zenith_from_elevation(const OrbitGeometry& geom, ElevationAngle theta);

// Distance from device to satellite in meters; slant_range(0) == altitude.
double slant_range(const OrbitGeometry& geom, ZenithAngle phi);

// Area of the spherical cap of half-angle phi_max as a fraction of the
// full sphere: (1 - cos(phi_max)) / 2.
double cap_fraction(ZenithAngle phi_max);

// cot(theta) expressed in zenith form: sin(phi)/(cos(phi) - alpha).
// Returns +inf at phi == phi_horizon.
double zenith_cot_ratio(const OrbitGeometry& geom, ZenithAngle phi);

} // namespace satrep
