#pragma once

#include "fmhd/field.hpp"
#include "fmhd/grid.hpp"

namespace fmhd {

/// Zero-mode handling for negative-order fractional Laplacians.
enum class ZeroModePolicy {
    require_zero_mean,  // default: error if the field has a nonzero mean
    annihilate,         // diagnostic opt-in: map the zero mode to 0
};

/// Fractional Laplacian Lambda^s: multiplier (2 pi |k| / L)^s per mode.
/// Lambda^0 is the identity (zero mode included); for s > 0 the zero mode
/// maps to 0; for s < 0 the zero-mode policy applies.
SpectralField fractional_laplacian(const SpectralField& f, double s,
                                   ZeroModePolicy policy = ZeroModePolicy::require_zero_mean);

/// Leray projection onto divergence-free fields,
/// P(u)^ = (I - k kT / |k|^2) u^; the zero mode passes through unchanged.
SpectralField leray_project(const SpectralField& v);

/// Sharp truncation S_R: zero all coefficients with |k|/L > R.
SpectralField fourier_truncate(const SpectralField& f, const TruncationSpec& trunc);

/// True if every coefficient outside K_R is exactly zero.
bool supported_in(const SpectralField& f, const TruncationSpec& trunc);

/// d/dx_axis, multiplier 2 pi i k_axis / L.
SpectralField spectral_derivative(const SpectralField& f, int axis);

/// Divergence of a vector field (c = d) -> scalar field.
SpectralField divergence(const SpectralField& v);

/// Divergence of a 2-tensor along its first index:
///   (div T)^k = sum_j d_j T^{jk},
/// the adjoint of -grad with (grad v)^{jk} = d_j v^k, so that
/// <div T, v> = -<T, grad v> holds exactly.
SpectralField tensor_divergence(const SpectralField& T);

/// (grad v)^{jk} = d_j v^k for a vector field v -> 2-tensor.
SpectralField vector_gradient(const SpectralField& v);

/// Pointwise physical-space product of two scalar fields followed by S_R.
/// With both inputs supported in K_R and M >= 3 K_max + 1, the result equals
/// the exact coefficient convolution restricted to K_R (no aliasing inside).
SpectralField alias_safe_product(const SpectralField& f, const SpectralField& g,
                                 const TruncationSpec& trunc);

/// S_R(u (x) v) for vector fields u, v: tensor with entries S_R(u^j v^k).
SpectralField alias_safe_outer_product(const SpectralField& u, const SpectralField& v,
                                       const TruncationSpec& trunc);

/// Max |div v| over the physical grid.
double max_divergence(const SpectralField& v);

/// Max pointwise magnitude over the physical grid (Euclidean over components).
double max_pointwise(const SpectralField& f);

}  // namespace fmhd
