#include "fmhd/bump.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <cmath>

namespace fmhd {

double bump(double t) {
    if (t <= -1.0 || t >= 1.0) return 0.0;
    return std::exp(-1.0 / (1.0 - t * t));
}

namespace {
using gauss64 = boost::math::quadrature::gauss<double, 64>;
}

double bump_mass() {
    static const double mass = gauss64::integrate(bump, -1.0, 1.0);
    return mass;
}

double smooth_step(double t) {
    if (t <= -1.0) return 0.0;
    if (t >= 1.0) return 1.0;
    return gauss64::integrate(bump, -1.0, t) / bump_mass();
}

}  // namespace fmhd
