#pragma once

#include <limits>

#include "fmhd/field.hpp"

namespace fmhd {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// L^p norm over the torus by Riemann-sum quadrature of the grid samples
/// (pointwise Euclidean magnitude over components). p = infinity is the grid
/// maximum. Exact for p = 2 on band-limited fields (matches Plancherel).
double lebesgue_norm(const SpectralField& f, double p);

/// Sobolev norm at p = 2. Homogeneous: ||Lambda^s f||_2. Inhomogeneous:
/// multiplier (1 + 4 pi^2 |k/L|^2)^{s/2}. Homogeneous with s < 0 requires a
/// zero-mean field.
double sobolev_norm(const SpectralField& f, double s, bool homogeneous);

/// Weak Lorentz quasinorm ||f||_{p,inf} = sup_t t^{1/p} f*(t) where f* is the
/// decreasing rearrangement of the grid cell values, each cell of volume
/// (L/M)^d. For step functions the sup is attained at the rearrangement
/// breakpoints t_i = i * cellvol, so the sup reduces to a max over i.
double lorentz_weak_quasinorm(const SpectralField& f, double p);

/// Decreasing rearrangement values (cell magnitudes sorted descending).
std::vector<double> decreasing_rearrangement(const SpectralField& f);

}  // namespace fmhd
