#pragma once

#include <vector>

#include "fmhd/field.hpp"
#include "fmhd/grid.hpp"

namespace fmhd {

/// Forward transform of real samples on the uniform grid (row-major,
/// components outermost). Coefficients follow the series convention
/// c_k = (1/M^d) sum_x f(x) exp(-2 pi i k.x / L), so inverse(forward(f)) = f.
SpectralField forward_transform(const std::vector<double>& samples, const GridSpec& grid,
                                int components = 1);

/// Inverse transform to complex samples (plain synthesis sum, no scaling).
std::vector<complexd> inverse_transform(const SpectralField& f);

/// Inverse transform of a Hermitian-symmetric field to real samples.
/// Throws if the imaginary residue exceeds 1e-10 of the field scale.
std::vector<double> inverse_transform_real(const SpectralField& f);

}  // namespace fmhd
