#include "fmhd/estimates.hpp"

#include <cmath>
#include <stdexcept>

#include "fmhd/norms.hpp"
#include "fmhd/operators.hpp"
#include "fmhd/random_fields.hpp"
#include "fmhd/transforms.hpp"

namespace fmhd {

namespace {

// Random fields alternate between rough (sigma = 1) and smooth (sigma = 2)
// spectra; the band scales with the grid so refinement admits rougher fields.
// kmax <= (M-1)/4 keeps pointwise products alias-free on their full support
// (the product spectrum reaches 2 kmax, its square 4 kmax < M).
SpectralField trial_field(const GridSpec& grid, int trial, Rng& rng) {
    int kmax = (grid.M - 1) / 4;
    double sigma = (trial % 2 == 0) ? 1.0 : 2.0;
    return random_real_field(grid, 1, kmax, sigma, rng);
}

// Exact pointwise product of two band-limited scalars (no truncation).
SpectralField exact_product(const SpectralField& f, const SpectralField& g) {
    std::vector<double> a = inverse_transform_real(f);
    std::vector<double> b = inverse_transform_real(g);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] *= b[i];
    return forward_transform(a, f.grid(), 1);
}

void push_ratio(RatioReport& rep, double lhs, double rhs) {
    if (rhs <= 0.0 || lhs <= 0.0) {
        ++rep.skipped;
        return;
    }
    double r = lhs / rhs;
    if (rep.ratios.empty()) {
        rep.max_ratio = rep.min_ratio = r;
    } else {
        rep.max_ratio = std::max(rep.max_ratio, r);
        rep.min_ratio = std::min(rep.min_ratio, r);
    }
    rep.ratios.push_back(r);
}

}  // namespace

RatioReport product_estimate_check(double alpha, double beta, const ExponentSelection& sel,
                                   int trials, const GridSpec& grid, std::uint64_t seed) {
    if (sel.alpha != alpha || sel.beta != beta || sel.d != grid.d)
        throw std::invalid_argument("product_estimate_check: selection does not match parameters");
    if (exponent_selection_defect(sel) > 1e-10)
        throw std::invalid_argument("product_estimate_check: invalid exponent selection");

    double lorentz_p = grid.d / (grid.d + 1.0 - 2.0 * alpha);
    Rng rng(seed);

    RatioReport rep;
    rep.name = "product_estimate";
    rep.trials = trials;
    for (int t = 0; t < trials; ++t) {
        SpectralField f = trial_field(grid, t, rng);
        SpectralField g = trial_field(grid, t + 1, rng);
        double lhs = exact_product(f, g).l2_norm();
        double rhs = std::pow(lorentz_weak_quasinorm(f, lorentz_p), 1.0 - sel.theta1) *
                     std::pow(sobolev_norm(f, alpha, true), sel.theta1) *
                     std::pow(g.l2_norm(), 1.0 - sel.theta2) *
                     std::pow(sobolev_norm(g, beta, true), sel.theta2);
        push_ratio(rep, lhs, rhs);
    }
    return rep;
}

RatioReport gagliardo_check(int d, double s0, double s, double p, double p1, double theta,
                            int trials, const GridSpec& grid, std::uint64_t seed) {
    if (!(0.0 <= s0 && s0 < s) || !(p > 1.0) || !(p1 > 1.0))
        throw std::invalid_argument("gagliardo_check: index ranges violated");
    if (!(theta > 0.0 && theta < 1.0) || theta < s0 / s - 1e-12)
        throw std::invalid_argument("gagliardo_check: theta constraint violated (theta >= s0/s)");
    double relation = 1.0 / p - s0 / d - ((1.0 - theta) / p1 + theta * (0.5 - s / d));
    if (std::abs(relation) > 1e-9)
        throw std::invalid_argument("gagliardo_check: index relation violated");

    Rng rng(seed);
    RatioReport rep;
    rep.name = "gagliardo_nirenberg";
    rep.trials = trials;
    for (int t = 0; t < trials; ++t) {
        SpectralField f = trial_field(grid, t, rng);
        double lhs = lebesgue_norm(fractional_laplacian(f, s0), p);
        double rhs = std::pow(lebesgue_norm(f, p1), 1.0 - theta) *
                     std::pow(sobolev_norm(f, s, true), theta);
        push_ratio(rep, lhs, rhs);
    }
    return rep;
}

RatioReport sobolev_lorentz_check(int d, double s, double p, double p1, double theta, int trials,
                                  const GridSpec& grid, std::uint64_t seed) {
    if (!(s > 0.0) || !(p > 1.0) || !(p1 > 1.0) || !(theta > 0.0 && theta < 1.0))
        throw std::invalid_argument("sobolev_lorentz_check: index ranges violated");
    if (std::abs(1.0 / p1 - (0.5 - s / d)) < 1e-12)
        throw std::invalid_argument("sobolev_lorentz_check: need 1/p1 != 1/2 - s/d");
    double relation = 1.0 / p - ((1.0 - theta) / p1 + theta * (0.5 - s / d));
    if (std::abs(relation) > 1e-9)
        throw std::invalid_argument("sobolev_lorentz_check: index relation violated");

    Rng rng(seed);
    RatioReport rep;
    rep.name = "sobolev_lorentz";
    rep.trials = trials;
    for (int t = 0; t < trials; ++t) {
        SpectralField f = trial_field(grid, t, rng);
        double lhs = lebesgue_norm(f, p);
        double rhs = std::pow(lorentz_weak_quasinorm(f, p1), 1.0 - theta) *
                     std::pow(sobolev_norm(f, s, true), theta);
        push_ratio(rep, lhs, rhs);
    }
    return rep;
}

RatioReport commutator_check(int d, double s, double gamma, int trials, const GridSpec& grid,
                             std::uint64_t seed) {
    if (!(gamma > 0.5 * d))
        throw std::invalid_argument("commutator_check: need gamma > d/2");
    if (!(s > 0.0 && s <= gamma))
        throw std::invalid_argument("commutator_check: need 0 < s <= gamma");

    Rng rng(seed);
    RatioReport rep;
    rep.name = "fractional_leibniz";
    rep.trials = trials;
    for (int t = 0; t < trials; ++t) {
        SpectralField f = trial_field(grid, t, rng);
        SpectralField g = trial_field(grid, t + 1, rng);
        if (t % 2 == 0) {
            // exercise the mean-dominant smooth g branch as well
            g.at(0, 0) += complexd{1.0, 0.0};
        }
        double lhs = sobolev_norm(exact_product(f, g), s, true);
        double rhs = sobolev_norm(f, s, false) * sobolev_norm(g, gamma, false);
        push_ratio(rep, lhs, rhs);
    }
    return rep;
}

}  // namespace fmhd
