#pragma once

#include <string>

#include "fmhd/field.hpp"

namespace fmhd {

/// Binary snapshot format (little-endian):
///   magic   "FMHD" (4 bytes)
///   version u32    (currently 1)
///   d       u32
///   M       u32
///   L       f64
///   c       u32    (component count)
///   real    u32    (real_valued flag, 0 or 1)
/// followed by c * M^d complex128 coefficients (re, im), components outermost,
/// modes row-major in FFT index order (per axis: 0 .. M/2-1, -M/2 .. -1).
void write_snapshot(const std::string& path, const SpectralField& f);
SpectralField read_snapshot(const std::string& path);

}  // namespace fmhd
