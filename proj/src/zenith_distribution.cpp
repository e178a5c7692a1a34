#include "satrep/zenith_distribution.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "satrep/errors.hpp"
#include "satrep/units.hpp"

namespace satrep {

namespace {
constexpr int kTableCells = 1024;
}

ZenithDistribution::ZenithDistribution(const OrbitGeometry& geom,
                                       const ChannelParams& params,
                                       const RepetitionPolicy& policy,
                                       QuadratureOptions opts)
    : geom_(geom), params_(params), policy_(policy), opts_(opts) {
    const double phi_max = policy_.phi_max_rad;
    if (!(phi_max > 0.0)) {
        throw std::invalid_argument("zenith distribution: phi_max must be > 0");
    }

    // Adaptive pass establishes the normalizer under the tolerance contract.
    const auto full = integrate([this](double p) { return weight(p); }, 0.0,
                                phi_max, opts_);

    grid_.resize(kTableCells + 1);
    cumulative_.resize(kTableCells + 1);
    cumulative_[0] = 0.0;
    for (int i = 0; i <= kTableCells; ++i) {
        grid_[i] = phi_max * static_cast<double>(i) / kTableCells;
    }
    for (int i = 0; i < kTableCells; ++i) {
        const double piece = integrate_panel(
            [this](double p) { return weight(p); }, grid_[i], grid_[i + 1]);
        cumulative_[i + 1] = cumulative_[i] + piece;
    }
    total_ = cumulative_.back();

    if (!(total_ > 0.0) ||
        std::abs(total_ - full.value) > 1e-9 * std::abs(full.value)) {
        std::ostringstream msg;
        msg << "zenith distribution: cumulative table disagrees with adaptive "
               "normalizer ("
            << total_ << " vs " << full.value << ")";
        throw QuadratureError(msg.str());
    }
}

double ZenithDistribution::weight(double phi) const {
    return std::sin(phi) *
           effective_duty_cycle(geom_, params_, policy_, {phi});
}

double ZenithDistribution::partial_from(int cell, double phi) const {
    return integrate_panel([this](double p) { return weight(p); }, grid_[cell],
                           phi);
}

double ZenithDistribution::cdf(ZenithAngle phi) const {
    if (!(phi.rad >= 0.0 && phi.rad <= policy_.phi_max_rad)) {
        throw std::domain_error("zenith cdf: angle outside [0, phi_max]");
    }
    if (phi.rad == 0.0) return 0.0;
    if (phi.rad == policy_.phi_max_rad) return 1.0;
    const auto it = std::upper_bound(grid_.begin(), grid_.end(), phi.rad);
    const int cell = static_cast<int>(it - grid_.begin()) - 1;
    const double value =
        (cumulative_[cell] + partial_from(cell, phi.rad)) / total_;
    return std::clamp(value, 0.0, 1.0);
}

double ZenithDistribution::pdf(ZenithAngle phi) const {
    if (!(phi.rad >= 0.0 && phi.rad <= policy_.phi_max_rad)) {
        throw std::domain_error("zenith pdf: angle outside [0, phi_max]");
    }
    return weight(phi.rad) / total_;
}

ZenithAngle ZenithDistribution::sample(RandomStream& rng) const {
    const double target = rng.uniform() * total_;
    const auto it =
        std::upper_bound(cumulative_.begin(), cumulative_.end(), target);
    int cell = static_cast<int>(it - cumulative_.begin()) - 1;
    cell = std::clamp(cell, 0, kTableCells - 1);

    double lo = grid_[cell];
    double hi = grid_[cell + 1];
    const double base = cumulative_[cell];
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        if (base + partial_from(cell, mid) < target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return {0.5 * (lo + hi)};
}

double avg_point_count(const OrbitGeometry& geom, const ChannelParams& params,
                       const RepetitionPolicy& policy, ZenithAngle phi,
                       const QuadratureOptions& opts) {
    if (!(phi.rad >= 0.0 && phi.rad <= policy.phi_max_rad)) {
        throw std::domain_error("avg_point_count: angle outside [0, phi_max]");
    }
    if (phi.rad == 0.0) return 0.0;
    const double r = geom.earth_radius_m;
    const auto result = integrate(
        [&](double p) {
            return std::sin(p) * effective_duty_cycle(geom, params, policy, {p});
        },
        0.0, phi.rad, opts);
    return 2.0 * kPi * r * r * policy.lambda0 * result.value;
}

} // namespace satrep
