#pragma once

#include <optional>
#include <utility>

#include "fmhd/field.hpp"
#include "fmhd/random_fields.hpp"

namespace fmhd {

/// Dyadic bump pair for the Littlewood-Paley decomposition.
///
/// chi(r) is a smooth radial cutoff, 1 for r <= inner (3/4) and 0 for
/// r >= outer (4/3). The low-pass profile is psi = chi and the annular bump is
/// phi(xi) = chi(|xi|/2) - chi(|xi|), supported in {3/4 <= |xi| <= 8/3}. The
/// dyadic family telescopes exactly:
///   psi(xi) + sum_{j=0..J} phi(2^-j xi) = chi(2^-(J+1) |xi|).
struct LPBumpSpec {
    double inner = 0.75;
    double outer = 4.0 / 3.0;

    double chi(double r) const;
    double psi(double r) const { return chi(r); }
    double phi(double r) const { return chi(0.5 * r) - chi(r); }
};

/// Annular block Delta_j f: multiplier phi(2^-j |k|/L).
SpectralField lp_block(const SpectralField& f, int j, const LPBumpSpec& bumps);

/// Low-pass block S_j f: multiplier psi(2^-j |k|/L).
SpectralField lp_low(const SpectralField& f, int j, const LPBumpSpec& bumps);

/// Empirical Bernstein-inequality measurement on random fields supported in
/// the dyadic annulus {2^(j-1) < |k|/L <= 2^j} (so R = 2^j):
///   r1 = ||D^k u||_q / (R^{k + d(1/p - 1/q)} ||u||_p)
///   r2 = ||D^k u||_p / (R^k ||u||_p)       (the two-sided equivalence)
/// where ||D^k u||_q = max over multi-indices |gamma| = k.
struct BernsteinReport {
    int j = 0;
    int k = 0;
    double p = 2.0;
    double q = 2.0;
    int trials = 0;
    int skipped = 0;  // degenerate (zero) fields
    double r1_min = 0.0, r1_max = 0.0;
    double r2_min = 0.0, r2_max = 0.0;
};

BernsteinReport bernstein_check(int d, int j, double p, double q, int k, int trials, Rng& rng);

/// One field's Bernstein ratio pair (r1, r2) at scale R = 2^j, or nothing for
/// a degenerate (zero) field; bernstein_check aggregates these.
std::optional<std::pair<double, double>> bernstein_ratios(const SpectralField& u, int j, double p,
                                                          double q, int k);

}  // namespace fmhd
