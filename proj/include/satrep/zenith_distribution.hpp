#pragma once

#include <vector>

#include "satrep/quadrature.hpp"
#include "satrep/repetition.hpp"
#include "satrep/rng.hpp"

namespace satrep {

// Distribution of the serving satellite's zenith angle over concurrently
// active (repetition-weighted) devices in the admittance region:
//   f(phi) = sin(phi) D(phi) / integral_0^phi_max sin D.
// Immutable after construction; concurrent reads are safe.
class ZenithDistribution {
public:
    ZenithDistribution(const OrbitGeometry& geom, const ChannelParams& params,
                       const RepetitionPolicy& policy,
                       QuadratureOptions opts = {});

    double cdf(ZenithAngle phi) const;
    double pdf(ZenithAngle phi) const;

    // Inverse-CDF sampling: table bracket plus bisection to 1e-12 rad.
    ZenithAngle sample(RandomStream& rng) const;

    double normalizer() const { return total_; }
    double phi_max() const { return policy_.phi_max_rad; }
    double quadrature_tolerance() const { return opts_.relative_tolerance; }

private:
    double weight(double phi) const; // sin(phi) * D(phi)
    double partial_from(int cell, double phi) const;

    OrbitGeometry geom_;
    ChannelParams params_;
    RepetitionPolicy policy_;
    QuadratureOptions opts_;
    std::vector<double> grid_;       // cell boundaries, 1025 points
    std::vector<double> cumulative_; // unnormalized integral up to grid_[i]
    double total_ = 0.0;
};

// Average number of active devices within zenith angle phi (Campbell):
// K(phi) = integral_0^phi 2 pi R^2 lambda0 D(phi') sin(phi') dphi'.
double avg_point_count(const OrbitGeometry& geom, const ChannelParams& params,
                       const RepetitionPolicy& policy, ZenithAngle phi,
                       const QuadratureOptions& opts = {});

} // namespace satrep
