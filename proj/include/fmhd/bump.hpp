#pragma once

namespace fmhd {

/// The standard compactly supported bump exp(-1/(1-t^2)) on (-1, 1), 0 outside.
double bump(double t);

/// Integral of bump over (-1, 1).
double bump_mass();

/// Smooth monotone step: 0 for t <= -1, 1 for t >= 1, equal to the normalized
/// running integral of bump in between. C-infinity with flat ends.
double smooth_step(double t);

}  // namespace fmhd
