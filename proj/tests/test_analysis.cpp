#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fmhd/estimates.hpp"
#include "fmhd/evolver.hpp"
#include "fmhd/experiments.hpp"
#include "fmhd/random_fields.hpp"
#include "fmhd/norms.hpp"
#include "fmhd/operators.hpp"
#include "fmhd/regime.hpp"
#include "fmhd/transforms.hpp"

#include "test_helpers.hpp"

using namespace fmhd;
using namespace fmhd::test;

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

TEST_CASE("regime classification on the marquee parameter points") {
    RegimeReport a = classify_regime(3, 1.0, 1.0);
    CHECK(a.existence);
    CHECK_FALSE(a.uniqueness);
    CHECK(a.min_combination == doctest::Approx(2.0));

    RegimeReport b = classify_regime(2, 1.0, 1.0);
    CHECK(b.existence);
    CHECK(b.uniqueness);
    CHECK(b.remark_cases.find('c') != std::string::npos);

    RegimeReport c = classify_regime(2, 0.6, 0.3);
    CHECK_FALSE(c.existence);
    CHECK(c.min_combination == doctest::Approx(0.5));
}

TEST_CASE("regime boundaries: strict for existence, non-strict for uniqueness") {
    // min = d/2 exactly: existence fails (strict)
    CHECK_FALSE(classify_regime(3, 1.0, 0.5).existence);
    // min = d/2 + 1 exactly: uniqueness holds (non-strict)
    RegimeReport r = classify_regime(3, 1.0, 1.5);
    CHECK(r.existence);
    CHECK(r.uniqueness);
    // alpha range boundaries are strict
    CHECK_FALSE(classify_regime(2, 0.5, 2.0).existence);
    CHECK_FALSE(classify_regime(2, 1.5, 2.0).existence);
    // beta = 1 boundary is admissible for uniqueness
    CHECK(classify_regime(2, 1.5 - 1e-9, 1.0).uniqueness);
}

TEST_CASE("uniqueness implies existence on a parameter sweep") {
    for (int d : {2, 3}) {
        for (double alpha = 0.55; alpha < 0.5 * (d + 1); alpha += 0.07) {
            for (double beta = 0.1; beta < 3.0; beta += 0.13) {
                RegimeReport r = classify_regime(d, alpha, beta);
                if (r.uniqueness) CHECK(r.existence);
            }
        }
    }
}

TEST_CASE("regime rejects nonpositive parameters") {
    CHECK_THROWS_AS(classify_regime(2, -1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(classify_regime(1, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("exponent search reproduces the worked examples") {
    // d = 2, alpha = beta = 1: large-p branch, lower endpoint 2 -> p = 4
    ExponentSelection s1 = exponent_search(2, 1.0, 1.0, 0.0);
    CHECK(s1.p == doctest::Approx(4.0));
    CHECK(s1.theta1 == doctest::Approx(0.5));
    CHECK(s1.theta2 == doctest::Approx(0.5));
    CHECK(s1.constraint_slack == doctest::Approx(0.0).epsilon(1e-12));

    // the identity theta1 + theta2 + 1/beta = 2 holds for every feasible p here
    for (double p : {2.5, 3.0, 5.0, 8.0, 17.0}) {
        double theta1 = (2.0 + 1.0 - 2.0 - 2.0 / p) / (1.0 + 1.0 - 1.0);
        double theta2 = 2.0 / p;
        CHECK(theta1 + theta2 + 1.0 == doctest::Approx(2.0).epsilon(1e-14));
    }

    // d = 3, alpha = 1, beta = 2: bounded branch (2, 6), midpoint p = 4
    ExponentSelection s2 = exponent_search(3, 1.0, 2.0, 0.0);
    CHECK(s2.p == doctest::Approx(4.0));
    CHECK(s2.theta1 == doctest::Approx(5.0 / 6.0));
    CHECK(exponent_selection_defect(s2) < 1e-12);

    // alpha >= d/2 branch with small beta: finite p with beta > d/p
    ExponentSelection s3 = exponent_search(2, 1.2, 0.5, 0.0);
    CHECK(s3.p > 2.0);
    CHECK(s3.beta > s3.d / s3.p);
    CHECK(exponent_selection_defect(s3) < 1e-12);
}

TEST_CASE("exponent search rejects infeasible parameter sets") {
    CHECK_THROWS_AS(exponent_search(2, 0.4, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(exponent_search(2, 0.6, 0.3, 0.0), std::invalid_argument);  // a+b <= d/2
    CHECK_THROWS_AS(exponent_search(2, 1.0, 1.0, 0.5), std::invalid_argument);  // mu guarantee
    CHECK_THROWS_AS(exponent_search(2, 1.0, 1.0, -0.1), std::invalid_argument);
}

TEST_CASE("exponent selections verify on random feasible parameters") {
    Rng rng(31);
    int found = 0;
    while (found < 50) {
        int d = (rng.raw() % 2 == 0) ? 2 : 3;
        double alpha = 0.5 + (0.5 * (d + 1) - 0.5) * rng.uniform();
        double beta = 0.05 + 3.0 * rng.uniform();
        double mu = (rng.raw() % 2 == 0) ? 0.0 : rng.uniform();
        if (!(alpha > 0.5 && alpha < 0.5 * (d + 1))) continue;
        if (!(alpha + beta > 0.5 * d)) continue;
        if (mu > 0.0 && !(alpha + (1.0 - mu) * beta >= 0.5 * d + 1.0)) continue;
        ExponentSelection sel = exponent_search(d, alpha, beta, mu);
        CHECK(exponent_selection_defect(sel) < 1e-12);
        // the slack guarantee needs the mu-hypothesis a + (1-mu) b >= d/2 + 1
        if (alpha + (1.0 - mu) * beta >= 0.5 * d + 1.0)
            CHECK(sel.constraint_slack >= -1e-12);
        ++found;
    }
}

TEST_CASE("product estimate ratio is invariant under amplitude scaling") {
    GridSpec g{2, 32, two_pi};
    ExponentSelection sel = exponent_search(2, 1.0, 1.0, 0.0);
    Rng rng(99);
    SpectralField f = random_real_field(g, 1, 7, 1.0, rng);
    SpectralField h = random_real_field(g, 1, 7, 2.0, rng);
    double lorentz_p = 2.0 / (2.0 + 1.0 - 2.0);

    auto ratio_of = [&](const SpectralField& a, const SpectralField& b) {
        std::vector<double> as = inverse_transform_real(a);
        std::vector<double> bs = inverse_transform_real(b);
        for (std::size_t i = 0; i < as.size(); ++i) as[i] *= bs[i];
        double lhs = forward_transform(as, g, 1).l2_norm();
        double rhs = std::pow(lorentz_weak_quasinorm(a, lorentz_p), 1.0 - sel.theta1) *
                     std::pow(sobolev_norm(a, 1.0, true), sel.theta1) *
                     std::pow(b.l2_norm(), 1.0 - sel.theta2) *
                     std::pow(sobolev_norm(b, 1.0, true), sel.theta2);
        return lhs / rhs;
    };
    double base = ratio_of(f, h);
    double scaled = ratio_of(2.0 * f, 3.0 * h);
    CHECK(scaled == doctest::Approx(base).epsilon(1e-12));
}

TEST_CASE("single-mode Gagliardo-Nirenberg ratio matches the closed form") {
    GridSpec g{2, 32, two_pi};
    SpectralField f(g, 1, true);
    f.at_freq(0, {3, 0, 0}) = complexd{0.5, 0.0};
    f.at_freq(0, {-3, 0, 0}) = complexd{0.5, 0.0};
    double s0 = 0.5, s = 1.0, p = 4.0, p1 = 2.0, theta = 0.5;
    double kappa = two_pi * 3.0 / g.L;  // |2 pi xi| of the mode
    // Lambda^{s0} acts by the scalar kappa^{s0} on a single mode
    double lhs = lebesgue_norm(fractional_laplacian(f, s0), p);
    CHECK(lhs == doctest::Approx(std::pow(kappa, s0) * lebesgue_norm(f, p)).epsilon(1e-12));
    double rhs = std::pow(lebesgue_norm(f, p1), 1.0 - theta) *
                 std::pow(std::pow(kappa, s) * f.l2_norm(), theta);
    double ratio = lhs / rhs;
    CHECK(std::isfinite(ratio));
    CHECK(ratio > 0.0);
}

TEST_CASE("product estimate max ratio is stable under grid doubling (small)") {
    GridSpec coarse{2, 32, two_pi};
    GridSpec fine{2, 64, two_pi};
    ExponentSelection sel = exponent_search(2, 1.0, 1.0, 0.0);
    RatioReport rc = product_estimate_check(1.0, 1.0, sel, 30, coarse, 4242);
    RatioReport rf = product_estimate_check(1.0, 1.0, sel, 30, fine, 4242);
    CHECK(rf.max_ratio < 2.0 * rc.max_ratio);
}

TEST_CASE("gagliardo check validates indices and yields finite ratios") {
    GridSpec g{2, 32, two_pi};
    // s0 = 0, s = 1, p = 4, p1 = 2, theta solves 1/4 = (1-t)/2 + t(1/2 - 1/2) -> t = 1/2
    RatioReport rep = gagliardo_check(2, 0.0, 1.0, 4.0, 2.0, 0.5, 10, g, 7);
    CHECK(rep.ratios.size() == 10);
    CHECK(rep.max_ratio > 0.0);
    CHECK(rep.max_ratio < 1e3);
    // theta below s0/s is refused
    CHECK_THROWS_AS(gagliardo_check(2, 0.5, 1.0, 4.0, 2.0, 0.25, 5, g, 7),
                    std::invalid_argument);
    // index relation violation is refused
    CHECK_THROWS_AS(gagliardo_check(2, 0.0, 1.0, 4.0, 2.0, 0.7, 5, g, 7),
                    std::invalid_argument);
}

TEST_CASE("sobolev-lorentz chain check runs and respects the index gate") {
    GridSpec g{2, 32, two_pi};
    // s = 1, p1 = 2, theta = 1/2 -> 1/p = (1/2)(1/2) + (1/2)(0) = 1/4
    RatioReport rep = sobolev_lorentz_check(2, 1.0, 4.0, 2.0, 0.5, 10, g, 11);
    CHECK(rep.max_ratio > 0.0);
    CHECK(rep.max_ratio < 1e3);
    CHECK_THROWS_AS(sobolev_lorentz_check(2, 1.0, 4.0, 2.0, 0.3, 5, g, 11),
                    std::invalid_argument);
}

TEST_CASE("fractional Leibniz check: single-mode sanity and empirical constant") {
    GridSpec g{2, 32, two_pi};
    RatioReport rep = commutator_check(2, 1.0, 1.5, 10, g, 13);
    CHECK(rep.ratios.size() == 10);
    CHECK(rep.max_ratio > 0.0);
    CHECK(rep.max_ratio < 1e2);
    CHECK_THROWS_AS(commutator_check(2, 1.0, 0.9, 5, g, 13), std::invalid_argument);
    CHECK_THROWS_AS(commutator_check(2, 2.0, 1.5, 5, g, 13), std::invalid_argument);
}

TEST_CASE("convergence study: single-mode data in the smallest cutoff gives zero error") {
    ModelParams p;
    p.grid = GridSpec{2, 64, two_pi};
    p.trunc = TruncationSpec{4.0 / two_pi};
    p.dt = 1e-2;
    p.t_final = 0.1;
    SpectralField b0(p.grid, 2, true);
    b0.at_freq(0, {0, 1, 0}) = complexd{0.0, -0.5};
    b0.at_freq(0, {0, -1, 0}) = complexd{0.0, 0.5};
    ConvergenceReport rep = convergence_study(p, {2.0 / two_pi, 4.0 / two_pi}, b0);
    for (double e : rep.errors) CHECK(e < 1e-14);
}

TEST_CASE("convergence study requires an increasing R list and alias headroom") {
    ModelParams p;
    p.grid = GridSpec{2, 32, two_pi};
    p.trunc = TruncationSpec{4.0 / two_pi};
    p.dt = 1e-2;
    p.t_final = 0.05;
    SpectralField b0(p.grid, 2, true);
    CHECK_THROWS_AS(convergence_study(p, {2.0, 1.0}, b0), std::invalid_argument);
    // 2 * max(R) = 12/L needs M >= 37 > 32
    CHECK_THROWS_AS(convergence_study(p, {6.0 / two_pi}, b0), std::invalid_argument);
}

TEST_CASE("stability experiment: zero perturbation stays identically zero") {
    ModelParams p;
    p.grid = GridSpec{2, 32, two_pi};
    p.trunc = TruncationSpec{4.0 / two_pi};
    p.dt = 1e-2;
    p.t_final = 0.1;
    Rng rng(17);
    SpectralField b0 = random_divfree_field(p.grid, 4, 1.0, rng);
    b0 *= 1.0 / b0.l2_norm();
    StabilityReport rep = stability_experiment(p, b0, 0.0, 555);
    for (double D : rep.D) CHECK(D == 0.0);
}

TEST_CASE("stability experiment: quadratic scaling and the Gronwall envelope") {
    ModelParams p;
    p.grid = GridSpec{2, 32, two_pi};
    p.trunc = TruncationSpec{4.0 / two_pi};
    p.dt = 5e-3;
    p.t_final = 0.25;
    Rng rng(19);
    SpectralField b0 = random_divfree_field(p.grid, 4, 1.0, rng);
    b0 *= 2.0 / b0.l2_norm();

    StabilityReport full = stability_experiment(p, b0, 1e-3, 555);
    StabilityReport half = stability_experiment(p, b0, 5e-4, 555);
    CHECK(full.in_uniqueness_regime);
    // Gronwall branch exponents surfaced: (d+2-2a)/(4b) = 1/2 at (2,1,1)
    CHECK(full.lambda_exponent == doctest::Approx(0.5));
    CHECK(full.mu_exponent == 0.0);
    double ratio = full.final_D / half.final_D;
    CHECK(ratio > 3.2);
    CHECK(ratio < 4.8);
    CHECK(full.envelope_sup <= 1.0 + 1e-9);
    CHECK(full.fitted_C < 1e2);
}

TEST_CASE("convergence study: doubling the horizon keeps e(R) decreasing") {
    ModelParams p;
    p.grid = GridSpec{2, 64, 1.0};
    p.trunc = TruncationSpec{3.0};
    p.alpha = p.beta = p.nu = p.eta = 1.0;
    p.dt = 1e-3;
    p.t_final = 0.05;
    Rng rng(37);
    SpectralField b0 = random_divfree_field(p.grid, 10, 1.0, rng);
    b0 *= 2.0 / b0.l2_norm();

    ConvergenceReport short_run = convergence_study(p, {3.0, 6.0}, b0);
    p.t_final = 0.1;
    ConvergenceReport long_run = convergence_study(p, {3.0, 6.0}, b0);
    CHECK(short_run.strictly_decreasing);
    CHECK(long_run.strictly_decreasing);
}
