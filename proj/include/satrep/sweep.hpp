#pragma once

#include <functional>
#include <string>
#include <vector>

#include "satrep/link_analysis.hpp"

namespace satrep {

// Grid over the tuning factor a (log-spaced) and the minimum elevation
// angle (degrees at this interface, like the CLI).
struct SweepGrid {
    std::vector<double> a_values;
    std::vector<double> theta_min_deg;
    int satellite_count = 10;
    int refine_levels = 0;
};

struct SweepPoint {
    double a = 0.0;
    double theta_min_deg = 0.0;
    double p_s = 0.0;
    double p_spot = 0.0;
    double p_avg = 0.0;
    double mean_interference_w = 0.0;
    bool ok = false;
    std::string error;
};

struct SweepResult {
    std::vector<SweepPoint> surface; // theta-major, a-minor order
    bool has_optimum = false;
    SweepPoint optimum;
    std::vector<SweepPoint> frontier; // best a per theta_min
};

using PointEvaluator = std::function<SweepPoint(double a, double theta_min_deg)>;

// 25 log-spaced a in [1e-6, 1e-2] x theta_min in {1..45} degrees, k = 10.
SweepGrid default_grid();

// Evaluates the grid with the given point function. Failed points stay in
// the surface with ok = false and are excluded from the argmax. Ties break
// to the smallest theta_min, then the smallest a.
SweepResult run_sweep_with(const PointEvaluator& eval, const SweepGrid& grid);

// Local refinement around the coarse optimum: each level evaluates a 7x7
// sub-grid in a box that shrinks 4x per level (log-space in a), clamped to
// the original grid bounds. The incumbent never regresses; refinement stops
// early once a level improves p_s by less than 1e-6.
SweepResult refine_optimum_with(const PointEvaluator& eval, const SweepGrid& grid,
                                const SweepResult& coarse, int levels);

// Analytic p_global evaluator for a scenario.
PointEvaluator analytic_evaluator(const OrbitGeometry& geom,
                                  const ChannelParams& params,
                                  const LinkBudget& budget, double d0,
                                  int satellite_count);

SweepResult run_sweep(const OrbitGeometry& geom, const ChannelParams& params,
                      const LinkBudget& budget, double d0, const SweepGrid& grid);

SweepResult refine_optimum(const OrbitGeometry& geom, const ChannelParams& params,
                           const LinkBudget& budget, double d0,
                           const SweepGrid& grid, const SweepResult& coarse,
                           int levels);

} // namespace satrep
