#pragma once

#include <functional>

namespace satrep {

struct IntegralResult {
    double value = 0.0;
    double error_estimate = 0.0;
};

struct QuadratureOptions {
    double relative_tolerance = 1e-10;
    double absolute_floor = 1e-14; // accept when error <= floor * scale
    double scale_hint = 0.0;       // 0 -> use |value| as the scale
    int max_depth = 17;
};

// Adaptive Gauss-Kronrod integration of f over [a, b]. Throws
// QuadratureError when the error estimate misses both tolerances.
IntegralResult integrate(const std::function<double(double)>& f, double a,
                         double b, const QuadratureOptions& opts = {});

// Single non-adaptive 15-point Gauss-Kronrod panel; used where the caller
// guarantees a smooth integrand on a narrow interval.
double integrate_panel(const std::function<double(double)>& f, double a,
                       double b);

} // namespace satrep
