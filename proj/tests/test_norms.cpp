#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fmhd/norms.hpp"
#include "fmhd/operators.hpp"
#include "fmhd/random_fields.hpp"

#include "test_helpers.hpp"

using namespace fmhd;
using namespace fmhd::test;

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

TEST_CASE("lebesgue norm of a constant is |c| L^{d/p}") {
    GridSpec g{2, 16, 2.0};
    auto f = field_from_fn(g, 1, [](const auto&, int) { return -3.0; });
    for (double p : {1.0, 2.0, 3.5}) {
        CHECK(lebesgue_norm(f, p) ==
              doctest::Approx(3.0 * std::pow(g.L, g.d / p)).epsilon(1e-12));
    }
    CHECK(lebesgue_norm(f, kInfinity) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("lebesgue norm at p = 2 agrees with Plancherel") {
    GridSpec g{2, 32, 1.3};
    Rng rng(1);
    SpectralField f = random_real_field(g, 1, 9, 1.0, rng);
    CHECK(lebesgue_norm(f, 2.0) == doctest::Approx(f.l2_norm()).epsilon(1e-10));
}

TEST_CASE("sup norm of a cosine is exactly 1 when M is divisible by 4") {
    GridSpec g{2, 32, 1.0};
    auto f = field_from_fn(g, 1,
                           [&](const auto& x, int) { return std::cos(two_pi * x[0] / g.L); });
    CHECK(lebesgue_norm(f, kInfinity) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("lebesgue norm rejects p < 1") {
    GridSpec g{2, 16, 1.0};
    SpectralField f(g, 1, true);
    CHECK_THROWS_AS(lebesgue_norm(f, 0.5), std::invalid_argument);
}

TEST_CASE("homogeneous sobolev norm of a single mode") {
    GridSpec g{2, 16, 2.0};
    SpectralField f(g, 1, true);
    f.at_freq(0, {2, 1, 0}) = complexd{0.3, -0.1};
    f.at_freq(0, {-2, -1, 0}) = complexd{0.3, 0.1};
    double k = std::sqrt(5.0);
    for (double s : {-1.0, 0.5, 2.0}) {
        double expected = std::pow(two_pi * k / g.L, s) * f.l2_norm();
        CHECK(sobolev_norm(f, s, true) == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("sobolev norm at s = 0 reduces to the L2 norm in both flavors") {
    GridSpec g{2, 32, 1.0};
    Rng rng(2);
    SpectralField f = random_real_field(g, 1, 10, 1.0, rng);
    CHECK(sobolev_norm(f, 0.0, true) == doctest::Approx(f.l2_norm()).epsilon(1e-13));
    CHECK(sobolev_norm(f, 0.0, false) == doctest::Approx(f.l2_norm()).epsilon(1e-13));
}

TEST_CASE("inhomogeneous/homogeneous equivalence constants for s = 1, 2") {
    GridSpec g{2, 32, 2.0};
    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        SpectralField f = random_real_field(g, 1, 12, trial % 2 ? 1.0 : 2.0, rng);
        f.at_freq(0, {0, 0, 0}) = complexd{0.4, 0.0};  // nonzero mean stresses the bound
        for (double s : {1.0, 2.0}) {
            double split = f.l2_norm_sq() + std::pow(sobolev_norm(f, s, true), 2);
            double inhom = std::pow(sobolev_norm(f, s, false), 2);
            CHECK(split <= inhom * (1.0 + 1e-12));
            CHECK(inhom <= std::pow(2.0, s - 1.0) * split * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("homogeneous sobolev norm with s < 0 requires zero mean") {
    GridSpec g{2, 16, 1.0};
    auto f = field_from_fn(g, 1, [](const auto&, int) { return 1.0; });
    CHECK_THROWS_AS(sobolev_norm(f, -0.5, true), std::invalid_argument);
}

TEST_CASE("weak lorentz quasinorm of an indicator is c m^{1/p}") {
    GridSpec g{2, 16, 2.0};
    // indicator of a block of 3x2 grid cells, scaled by c
    const double c = 2.5;
    const std::size_t n = g.points();
    std::vector<double> samples(n, 0.0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 2; ++j) samples[static_cast<std::size_t>(i) * g.M + j] = c;
    SpectralField f = forward_transform(samples, g, 1);
    double measure = 6.0 * g.cell_volume();
    for (double p : {1.0, 2.0, 3.0}) {
        CHECK(lorentz_weak_quasinorm(f, p) ==
              doctest::Approx(c * std::pow(measure, 1.0 / p)).epsilon(1e-12));
    }
}

TEST_CASE("weak lorentz quasinorm is dominated by the lebesgue norm") {
    GridSpec g{2, 32, 1.7};
    Rng rng(4);
    for (int trial = 0; trial < 20; ++trial) {
        SpectralField f = random_real_field(g, 1, 10, 1.0, rng);
        for (double p : {1.5, 2.0, 4.0})
            CHECK(lorentz_weak_quasinorm(f, p) <= lebesgue_norm(f, p) * (1.0 + 1e-12));
    }
}

TEST_CASE("weak lorentz quasinorm is positively homogeneous") {
    GridSpec g{2, 32, 1.0};
    Rng rng(5);
    SpectralField f = random_real_field(g, 1, 8, 1.0, rng);
    SpectralField f2 = 2.0 * f;
    CHECK(lorentz_weak_quasinorm(f2, 2.5) ==
          doctest::Approx(2.0 * lorentz_weak_quasinorm(f, 2.5)).epsilon(1e-12));
}

TEST_CASE("decreasing rearrangement is nonincreasing") {
    GridSpec g{2, 16, 1.0};
    Rng rng(6);
    SpectralField f = random_real_field(g, 1, 6, 1.0, rng);
    auto star = decreasing_rearrangement(f);
    for (std::size_t i = 1; i < star.size(); ++i) CHECK(star[i] <= star[i - 1]);
}
