#include "satrep/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "satrep/errors.hpp"

namespace satrep {

using GK15 = boost::math::quadrature::gauss_kronrod<double, 15>;

IntegralResult integrate(const std::function<double(double)>& f, double a,
                         double b, const QuadratureOptions& opts) {
    if (a == b) return {0.0, 0.0};

    double error = 0.0;
    const double value = GK15::integrate(f, a, b, opts.max_depth,
                                         opts.relative_tolerance, &error);

    const double scale =
        opts.scale_hint > 0.0 ? opts.scale_hint : std::abs(value);
    const double bound = std::max(opts.relative_tolerance * scale,
                                  opts.absolute_floor * std::max(scale, 1.0));
    if (!std::isfinite(value) || (error > bound && error > opts.absolute_floor)) {
        std::ostringstream msg;
        msg << "quadrature did not converge on [" << a << ", " << b
            << "]: value=" << value << " error=" << error
            << " bound=" << bound;
        throw QuadratureError(msg.str());
    }
    return {value, error};
}

double integrate_panel(const std::function<double(double)>& f, double a,
                       double b) {
    if (a == b) return 0.0;
    return GK15::integrate(f, a, b, 0);
}

} // namespace satrep
