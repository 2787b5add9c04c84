#pragma once

#include <cstdint>
#include <vector>

#include "fmhd/evolver.hpp"

namespace fmhd {

/// Cauchy-in-R convergence study: for each R in r_list, run the truncated
/// system at cutoffs R and 2R from the same initial data in lockstep and
/// measure e(R) = ||b_{2R} - b_R||_{L^2(0,T;L^2)} (rectangle rule in time).
/// The grid must be alias-exact for 2 * max(r_list).
struct ConvergenceReport {
    std::vector<double> r_values;
    std::vector<double> errors;  // e(R), same order as r_values
    bool strictly_decreasing = false;
};

ConvergenceReport convergence_study(const ModelParams& base, const std::vector<double>& r_list,
                                    const SpectralField& b0);

/// Perturbation/uniqueness experiment: evolve b from b0 and b~ from
/// b0 + delta * (unit-norm divergence-free perturbation) in lockstep.
/// Records D(t) = ||b - b~||_2^2 and Phi(t) = int_0^t phi with
///   phi = 1 + ||L^a u1||^2 + ||L^a u2||^2 + ||L^b b1||^2 + ||L^b b2||^2,
/// then fits the smallest Gronwall constant C with
/// log D(t) - log D(0) <= C Phi(t) for all recorded t.
struct StabilityReport {
    bool in_uniqueness_regime = false;  // else the report is out-of-theory
    // interpolation exponents of the two Gronwall branches: lambda drives the
    // alpha >= 1 branch, mu = (1-alpha)/beta the alpha < 1 branch
    double lambda_exponent = 0.0;  // (d + 2 - 2 alpha) / (4 beta)
    double mu_exponent = 0.0;      // max(0, (1 - alpha) / beta)
    double delta = 0.0;
    std::vector<double> times;
    std::vector<double> D;    // squared L2 distance
    std::vector<double> Phi;  // integrated phi
    double fitted_C = 0.0;
    double envelope_sup = 0.0;  // sup_t D(t) / (D(0) e^{C Phi(t)}), <= 1 by the fit
    double final_D = 0.0;
};

StabilityReport stability_experiment(const ModelParams& params, const SpectralField& b0,
                                     double delta, std::uint64_t perturbation_seed);

}  // namespace fmhd
