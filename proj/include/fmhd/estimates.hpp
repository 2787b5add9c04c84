#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fmhd/grid.hpp"
#include "fmhd/regime.hpp"

namespace fmhd {

/// Outcome of an empirical inequality measurement: per-trial LHS/RHS ratios
/// over seeded random band-limited fields. Inequalities with unquantified
/// constants are operationally checked as "max ratio stays stable under
/// refinement".
struct RatioReport {
    std::string name;
    int trials = 0;
    int skipped = 0;  // degenerate (zero-norm) trials
    double max_ratio = 0.0;
    double min_ratio = 0.0;
    std::vector<double> ratios;
};

/// ||fg||_2 <= C ||f||_{d/(d+1-2a),inf}^{1-t1} ||f||_{Ha}^{t1}
///                ||g||_2^{1-t2} ||g||_{Hb}^{t2}
/// measured on random fields with |k|^-sigma spectra (sigma alternates 1, 2).
RatioReport product_estimate_check(double alpha, double beta, const ExponentSelection& sel,
                                   int trials, const GridSpec& grid, std::uint64_t seed);

/// Gagliardo-Nirenberg: ||Lambda^{s0} f||_p <= C ||f||_{p1}^{1-theta} ||Lambda^s f||_2^theta
/// with 1/p - s0/d = (1-theta)/p1 + theta (1/2 - s/d) and theta >= s0/s.
/// Throws if the index relation fails.
RatioReport gagliardo_check(int d, double s0, double s, double p, double p1, double theta,
                            int trials, const GridSpec& grid, std::uint64_t seed);

/// Sobolev-Lorentz interpolation, checked on the computable chain via L^p
/// (||f||_p <= ||f||_{p,1}): ||f||_p <= C ||f||_{p1,inf}^{1-theta} ||Lambda^s f||_2^theta
/// with 1/p = (1-theta)/p1 + theta (1/2 - s/d), 1/p1 != 1/2 - s/d.
RatioReport sobolev_lorentz_check(int d, double s, double p, double p1, double theta, int trials,
                                  const GridSpec& grid, std::uint64_t seed);

/// Fractional Leibniz bound: ||Lambda^s(fg)||_2 <= C ||f||_{H^s} ||g||_{H^gamma}
/// for gamma > d/2 and 0 < s <= gamma.
RatioReport commutator_check(int d, double s, double gamma, int trials, const GridSpec& grid,
                             std::uint64_t seed);

}  // namespace fmhd
