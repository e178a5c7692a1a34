#include "satrep/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <exception>

#include "satrep/units.hpp"

namespace satrep {

namespace {

// Strict ordering for the argmax: higher p_s wins, ties go to smaller
// theta_min, then smaller a.
bool better(const SweepPoint& candidate, const SweepPoint& incumbent) {
    if (!candidate.ok) return false;
    if (!incumbent.ok) return true;
    if (candidate.p_s != incumbent.p_s) return candidate.p_s > incumbent.p_s;
    if (candidate.theta_min_deg != incumbent.theta_min_deg) {
        return candidate.theta_min_deg < incumbent.theta_min_deg;
    }
    return candidate.a < incumbent.a;
}

} // namespace

SweepGrid default_grid() {
    SweepGrid grid;
    constexpr int kAPoints = 25;
    for (int i = 0; i < kAPoints; ++i) {
        const double exponent =
            -6.0 + 4.0 * static_cast<double>(i) / (kAPoints - 1);
        grid.a_values.push_back(std::pow(10.0, exponent));
    }
    for (int t = 1; t <= 45; ++t) grid.theta_min_deg.push_back(t);
    grid.satellite_count = 10;
    return grid;
}

SweepResult run_sweep_with(const PointEvaluator& eval, const SweepGrid& grid) {
    SweepResult result;
    result.surface.reserve(grid.a_values.size() * grid.theta_min_deg.size());
    for (double theta : grid.theta_min_deg) {
        bool row_has_best = false;
        SweepPoint row_best;
        for (double a : grid.a_values) {
            const SweepPoint point = eval(a, theta);
            result.surface.push_back(point);
            if (point.ok && (!row_has_best || better(point, row_best))) {
                row_best = point;
                row_has_best = true;
            }
            if (better(point, result.optimum)) {
                result.optimum = point;
                result.has_optimum = true;
            }
        }
        if (row_has_best) result.frontier.push_back(row_best);
    }
    return result;
}

SweepResult refine_optimum_with(const PointEvaluator& eval, const SweepGrid& grid,
                                const SweepResult& coarse, int levels) {
    SweepResult result = coarse;
    if (levels <= 0 || !coarse.has_optimum) return result;

    const double a_lo = grid.a_values.front();
    const double a_hi = grid.a_values.back();
    const double theta_lo = grid.theta_min_deg.front();
    const double theta_hi = grid.theta_min_deg.back();

    // Initial half widths: one coarse grid cell in each direction.
    double log_a_width =
        grid.a_values.size() > 1 && result.optimum.a > 0.0
            ? std::log10(a_hi / a_lo) / static_cast<double>(grid.a_values.size() - 1)
            : 0.0;
    double theta_width =
        grid.theta_min_deg.size() > 1
            ? (theta_hi - theta_lo) / static_cast<double>(grid.theta_min_deg.size() - 1)
            : 0.0;

    constexpr int kSide = 7;
    for (int level = 0; level < levels; ++level) {
        log_a_width /= 4.0;
        theta_width /= 4.0;
        const SweepPoint before = result.optimum;
        const double log_a_center =
            result.optimum.a > 0.0 ? std::log10(result.optimum.a) : 0.0;
        for (int i = 0; i < kSide; ++i) {
            for (int j = 0; j < kSide; ++j) {
                double a = result.optimum.a;
                if (result.optimum.a > 0.0 && log_a_width > 0.0) {
                    const double offset =
                        log_a_width * (2.0 * i / (kSide - 1) - 1.0);
                    a = std::pow(10.0, std::clamp(log_a_center + offset,
                                                  std::log10(a_lo),
                                                  std::log10(a_hi)));
                }
                double theta = result.optimum.theta_min_deg;
                if (theta_width > 0.0) {
                    const double offset =
                        theta_width * (2.0 * j / (kSide - 1) - 1.0);
                    theta = std::clamp(result.optimum.theta_min_deg + offset,
                                       theta_lo, theta_hi);
                }
                const SweepPoint point = eval(a, theta);
                if (better(point, result.optimum)) {
                    result.optimum = point;
                    result.has_optimum = true;
                }
            }
        }
        if (result.optimum.p_s - before.p_s < 1e-6) break;
    }
    return result;
}

PointEvaluator analytic_evaluator(const OrbitGeometry& geom,
                                  const ChannelParams& params,
                                  const LinkBudget& budget, double d0,
                                  int satellite_count) {
    return [geom, params, budget, d0, satellite_count](
               double a, double theta_min_deg) -> SweepPoint {
        SweepPoint point;
        point.a = a;
        point.theta_min_deg = theta_min_deg;
        try {
            const RepetitionPolicy policy = make_policy(
                geom, d0, a, {deg_to_rad(theta_min_deg)}, budget.lambda0);
            point.mean_interference_w =
                mean_interference(geom, params, policy, budget);
            point.p_avg = p_success_avg_given_interference(
                geom, params, policy, budget, point.mean_interference_w);
            point.p_spot = p_spot(geom, satellite_count, {policy.phi_max_rad});
            point.p_s = point.p_spot * point.p_avg;
            point.ok = true;
        } catch (const std::exception& e) {
            point.ok = false;
            point.error = e.what();
        }
        return point;
    };
}

SweepResult run_sweep(const OrbitGeometry& geom, const ChannelParams& params,
                      const LinkBudget& budget, double d0, const SweepGrid& grid) {
    return run_sweep_with(
        analytic_evaluator(geom, params, budget, d0, grid.satellite_count), grid);
}

SweepResult refine_optimum(const OrbitGeometry& geom, const ChannelParams& params,
                           const LinkBudget& budget, double d0,
                           const SweepGrid& grid, const SweepResult& coarse,
                           int levels) {
    return refine_optimum_with(
        analytic_evaluator(geom, params, budget, d0, grid.satellite_count), grid,
        coarse, levels);
}

} // namespace satrep
