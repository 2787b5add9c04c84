#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

#include "fmhd/norms.hpp"
#include "fmhd/operators.hpp"
#include "fmhd/random_fields.hpp"
#include "fmhd/snapshot.hpp"
#include "fmhd/transforms.hpp"

#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace fmhd;
using namespace fmhd::test;

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

TEST_CASE("forward transform: constant field has only the DC mode") {
    GridSpec g{2, 16, 2.0};
    auto f = field_from_fn(g, 1, [](const auto&, int) { return 3.0; });
    CHECK(std::abs(f.at_freq(0, {0, 0, 0}) - complexd{3.0, 0.0}) < 1e-14);
    f.at_freq(0, {0, 0, 0}) = 0.0;
    CHECK(max_coeff_abs(f) < 1e-14);
}

TEST_CASE("forward transform: single cosine splits into the +-k pair") {
    GridSpec g{2, 16, 3.0};
    auto f = field_from_fn(g, 1,
                           [&](const auto& x, int) { return std::cos(two_pi * x[0] / g.L); });
    CHECK(std::abs(f.at_freq(0, {1, 0, 0}) - complexd{0.5, 0.0}) < 1e-14);
    CHECK(std::abs(f.at_freq(0, {-1, 0, 0}) - complexd{0.5, 0.0}) < 1e-14);
    f.at_freq(0, {1, 0, 0}) = 0.0;
    f.at_freq(0, {-1, 0, 0}) = 0.0;
    CHECK(max_coeff_abs(f) < 1e-14);
}

TEST_CASE("transform round trip on random fields") {
    for (int d : {2, 3}) {
        GridSpec g{d, d == 2 ? 32 : 16, 1.7};
        Rng rng(11 + d);
        SpectralField f = random_real_field(g, 2, g.M / 2 - 1, 1.0, rng);
        std::vector<double> samples = inverse_transform_real(f);
        SpectralField back = forward_transform(samples, g, 2);
        double scale = max_coeff_abs(f);
        CHECK(max_coeff_diff(f, back) < 1e-12 * scale);
    }
}

TEST_CASE("transform rejects mismatched sample counts") {
    GridSpec g{2, 16, 1.0};
    std::vector<double> samples(100, 0.0);
    CHECK_THROWS_AS(forward_transform(samples, g, 1), std::invalid_argument);
}

TEST_CASE("fractional laplacian: cosine eigenmode at s = 2 matches -Laplace") {
    GridSpec g{2, 16, 2.5};
    auto f = field_from_fn(g, 1,
                           [&](const auto& x, int) { return std::cos(two_pi * x[0] / g.L); });
    SpectralField lf = fractional_laplacian(f, 2.0);
    double factor = std::pow(two_pi / g.L, 2);
    SpectralField expected = factor * f;
    CHECK(max_coeff_diff(lf, expected) < 1e-13 * factor);
}

TEST_CASE("fractional laplacian: s = 0 is the identity including the mean") {
    GridSpec g{2, 16, 1.0};
    auto f = field_from_fn(g, 1, [&](const auto& x, int) {
        return 2.0 + std::sin(two_pi * x[1] / g.L);
    });
    CHECK(max_coeff_diff(fractional_laplacian(f, 0.0), f) == 0.0);
}

TEST_CASE("fractional laplacian: per-mode multiplier on a two-cosine field") {
    GridSpec g{2, 32, 2.0};
    auto f = field_from_fn(g, 1, [&](const auto& x, int) {
        return std::cos(two_pi * x[0] / g.L) + std::cos(2.0 * two_pi * x[0] / g.L);
    });
    SpectralField lf = fractional_laplacian(f, 1.0);
    auto expected = field_from_fn(g, 1, [&](const auto& x, int) {
        return (two_pi / g.L) * std::cos(two_pi * x[0] / g.L) +
               (2.0 * two_pi / g.L) * std::cos(2.0 * two_pi * x[0] / g.L);
    });
    CHECK(max_coeff_diff(lf, expected) < 1e-13);
}

TEST_CASE("fractional laplacian: negative order zero-mode policy") {
    GridSpec g{2, 16, 1.0};
    auto f = field_from_fn(g, 1, [&](const auto& x, int) {
        return 1.0 + std::cos(two_pi * x[0] / g.L);
    });
    CHECK_THROWS_AS(fractional_laplacian(f, -1.0), std::invalid_argument);
    SpectralField lf = fractional_laplacian(f, -1.0, ZeroModePolicy::annihilate);
    CHECK(std::abs(lf.at_freq(0, {0, 0, 0})) == 0.0);
}

TEST_CASE("semigroup property Lambda^s Lambda^t = Lambda^{s+t} on mean-zero fields") {
    GridSpec g{2, 32, 2.0};
    Rng rng(5);
    SpectralField f = random_real_field(g, 1, 10, 1.0, rng);
    for (double s : {-4.0, -1.3, 0.7, 4.0}) {
        for (double t : {-2.1, 0.9, 3.3}) {
            SpectralField a = fractional_laplacian(fractional_laplacian(f, s), t);
            SpectralField b = fractional_laplacian(f, s + t);
            CHECK(max_coeff_diff(a, b) < 1e-10 * std::max(1.0, max_coeff_abs(b)));
        }
    }
}

TEST_CASE("leray projection annihilates gradients") {
    GridSpec g{2, 16, 2.0};
    // v = grad psi for psi = cos(2 pi x1 / L)
    auto v = field_from_fn(g, 2, [&](const auto& x, int c) {
        return c == 0 ? -(two_pi / g.L) * std::sin(two_pi * x[0] / g.L) : 0.0;
    });
    CHECK(max_coeff_abs(leray_project(v)) < 1e-14);
}

TEST_CASE("leray projection: (sin(2 pi x1/L), 0) is a pure gradient in d = 2") {
    GridSpec g{2, 16, 1.0};
    auto v = field_from_fn(g, 2, [&](const auto& x, int c) {
        return c == 0 ? std::sin(two_pi * x[0] / g.L) : 0.0;
    });
    CHECK(max_coeff_abs(leray_project(v)) < 1e-14);
}

TEST_CASE("leray projection fixes divergence-free fields and is idempotent") {
    GridSpec g{3, 16, 1.0};
    Rng rng(7);
    SpectralField v = random_real_field(g, 3, 5, 1.0, rng);
    SpectralField pv = leray_project(v);
    double scale = max_coeff_abs(pv);
    CHECK(max_divergence(pv) < 1e-12 * pv.l2_norm());
    CHECK(max_coeff_diff(leray_project(pv), pv) < 1e-14 * scale);

    SpectralField w = leray_project(pv);  // already divergence-free: unchanged
    CHECK(max_coeff_diff(w, pv) < 1e-14 * scale);
}

TEST_CASE("leray projection passes the zero mode through") {
    GridSpec g{2, 16, 1.0};
    SpectralField v(g, 2, true);
    v.at_freq(0, {0, 0, 0}) = complexd{1.5, 0.0};
    SpectralField pv = leray_project(v);
    CHECK(pv.at_freq(0, {0, 0, 0}) == complexd{1.5, 0.0});
}

TEST_CASE("fourier truncation: full retention, single-mode kill, contraction") {
    GridSpec g{2, 32, 1.0};
    Rng rng(3);
    SpectralField f = random_real_field(g, 1, 15, 0.5, rng);

    // R at Nyquist scale retains everything
    TruncationSpec full{(g.M / 2.0) / g.L * 2.0};
    CHECK(max_coeff_diff(fourier_truncate(f, full), f) == 0.0);

    SpectralField single(g, 1, true);
    single.at_freq(0, {5, 0, 0}) = complexd{1.0, 0.0};
    single.at_freq(0, {-5, 0, 0}) = complexd{1.0, 0.0};
    TruncationSpec small{4.0 / g.L};
    CHECK(max_coeff_abs(fourier_truncate(single, small)) == 0.0);

    SpectralField tf = fourier_truncate(f, small);
    CHECK(tf.l2_norm() <= f.l2_norm() * (1.0 + 1e-15));
    CHECK(max_coeff_diff(fourier_truncate(tf, small), tf) == 0.0);  // idempotent
    CHECK(supported_in(tf, small));
}

TEST_CASE("truncation commutes with the fractional laplacian and leray projection") {
    GridSpec g{2, 32, 1.5};
    Rng rng(9);
    SpectralField v = random_real_field(g, 2, 14, 1.0, rng);
    TruncationSpec tr{6.0 / g.L};
    CHECK(max_coeff_diff(fourier_truncate(fractional_laplacian(v, 1.3), tr),
                         fractional_laplacian(fourier_truncate(v, tr), 1.3)) < 1e-13);
    CHECK(max_coeff_diff(fourier_truncate(leray_project(v), tr),
                         leray_project(fourier_truncate(v, tr))) < 1e-14);
}

TEST_CASE("spectral derivative of cos is -(2 pi / L) sin") {
    GridSpec g{2, 16, 2.0};
    auto f = field_from_fn(g, 1,
                           [&](const auto& x, int) { return std::cos(two_pi * x[0] / g.L); });
    auto expected = field_from_fn(g, 1, [&](const auto& x, int) {
        return -(two_pi / g.L) * std::sin(two_pi * x[0] / g.L);
    });
    CHECK(max_coeff_diff(spectral_derivative(f, 0), expected) < 1e-14);
}

TEST_CASE("divergence of leray output vanishes on random fields") {
    GridSpec g{2, 32, 1.0};
    Rng rng(13);
    SpectralField v = leray_project(random_real_field(g, 2, 10, 1.0, rng));
    CHECK(max_divergence(v) < 1e-12 * v.l2_norm());
}

TEST_CASE("tensor divergence of b(x)b equals (b.grad)b for divergence-free b") {
    GridSpec g{2, 48, 1.0};
    Rng rng(17);
    TruncationSpec tr{7.0 / g.L};
    SpectralField b = fourier_truncate(leray_project(random_real_field(g, 2, 7, 1.0, rng)), tr);

    SpectralField T = alias_safe_outer_product(b, b, TruncationSpec{15.0 / g.L});
    SpectralField lhs = tensor_divergence(T);

    // (b.grad)b via alias-safe products of components and derivatives
    std::vector<double> bs = inverse_transform_real(b);
    const std::size_t n = g.points();
    std::vector<double> rhs_samples(2 * n, 0.0);
    for (int c = 0; c < 2; ++c) {
        for (int j = 0; j < 2; ++j) {
            std::vector<double> der = inverse_transform_real(spectral_derivative(b, j));
            for (std::size_t i = 0; i < n; ++i)
                rhs_samples[static_cast<std::size_t>(c) * n + i] +=
                    bs[static_cast<std::size_t>(j) * n + i] *
                    der[static_cast<std::size_t>(c) * n + i];
        }
    }
    SpectralField rhs = fourier_truncate(forward_transform(rhs_samples, g, 2),
                                         TruncationSpec{15.0 / g.L});
    CHECK(max_coeff_diff(lhs, rhs) < 1e-12 * std::max(1.0, max_coeff_abs(lhs)));
}

TEST_CASE("alias-safe product: cos * cos identity") {
    GridSpec g{2, 16, 1.0};
    auto f = field_from_fn(g, 1,
                           [&](const auto& x, int) { return std::cos(two_pi * x[0] / g.L); });
    TruncationSpec tr{4.0 / g.L};
    SpectralField p = alias_safe_product(f, f, tr);
    auto expected = field_from_fn(g, 1, [&](const auto& x, int) {
        return 0.5 * (1.0 + std::cos(2.0 * two_pi * x[0] / g.L));
    });
    CHECK(max_coeff_diff(p, expected) < 1e-14);
}

TEST_CASE("alias-safe product matches the brute-force convolution oracle") {
    GridSpec g{2, 16, 1.0};
    TruncationSpec tr{4.0 / g.L};  // K_max = 4, M = 16 >= 13
    Rng rng(23);
    SpectralField f = random_real_field(g, 1, 4, 0.7, rng);
    SpectralField h = random_real_field(g, 1, 4, 0.7, rng);
    SpectralField fast = alias_safe_product(f, h, tr);
    SpectralField oracle = convolution_oracle(f, h, tr);
    CHECK(max_coeff_diff(fast, oracle) < 1e-12 * std::max(1.0, max_coeff_abs(oracle)));
}

TEST_CASE("alias-safe product: zero factor gives zero") {
    GridSpec g{2, 16, 1.0};
    Rng rng(29);
    SpectralField f = random_real_field(g, 1, 4, 1.0, rng);
    SpectralField z(g, 1, true);
    TruncationSpec tr{4.0 / g.L};
    CHECK(max_coeff_abs(alias_safe_product(f, z, tr)) == 0.0);
}

TEST_CASE("alias-safe product rejects grids violating M >= 3 K_max + 1") {
    GridSpec g{2, 16, 1.0};
    TruncationSpec tr{6.0 / g.L};  // K_max = 6 needs M >= 19
    SpectralField f(g, 1, true);
    CHECK_THROWS_AS(alias_safe_product(f, f, tr), std::invalid_argument);
}

TEST_CASE("plancherel: physical quadrature matches the coefficient sum") {
    for (int d : {2, 3}) {
        GridSpec g{d, d == 2 ? 32 : 16, 2.2};
        Rng rng(31 + d);
        SpectralField f = random_real_field(g, 1, 5, 1.0, rng);
        std::vector<double> s = inverse_transform_real(f);
        double phys = 0.0;
        for (double v : s) phys += v * v;
        phys *= g.cell_volume();
        CHECK(phys == doctest::Approx(f.l2_norm_sq()).epsilon(1e-10));
    }
}

TEST_CASE("hermitian symmetry is preserved by every multiplier operation") {
    GridSpec g{2, 32, 1.0};
    Rng rng(37);
    SpectralField v = random_real_field(g, 2, 9, 1.0, rng);
    CHECK(v.hermitian_defect() < 1e-12);
    CHECK(fractional_laplacian(v, 1.7).hermitian_defect() < 1e-12);
    CHECK(leray_project(v).hermitian_defect() < 1e-12);
    CHECK(fourier_truncate(v, TruncationSpec{5.0 / g.L}).hermitian_defect() < 1e-12);
    CHECK(spectral_derivative(v, 1).hermitian_defect() < 1e-12);
    CHECK(alias_safe_outer_product(v, v, TruncationSpec{9.0 / g.L}).hermitian_defect() < 1e-12);
}

TEST_CASE("snapshot round trip preserves every bit of the field") {
    GridSpec g{3, 8, 1.25};
    Rng rng(41);
    SpectralField f = random_real_field(g, 3, 3, 1.0, rng);
    std::string path = "roundtrip_test.fmhd";
    write_snapshot(path, f);
    SpectralField back = read_snapshot(path);
    REQUIRE(back.grid() == f.grid());
    CHECK(back.components() == f.components());
    CHECK(back.real_valued() == f.real_valued());
    CHECK(max_coeff_diff(f, back) == 0.0);
    std::remove(path.c_str());
}

TEST_CASE("snapshot reader rejects an unsupported version") {
    GridSpec g{2, 8, 1.0};
    SpectralField f(g, 1, true);
    std::string path = "bad_version_test.fmhd";
    write_snapshot(path, f);
    {
        std::fstream fs(path, std::ios::in | std::ios::out | std::ios::binary);
        fs.seekp(4);
        char v[4] = {99, 0, 0, 0};
        fs.write(v, 4);
    }
    CHECK_THROWS_AS(read_snapshot(path), std::runtime_error);
    std::remove(path.c_str());
}

TEST_CASE("snapshot reader rejects a corrupted magic") {
    std::string path = "bad_magic_test.fmhd";
    {
        std::ofstream os(path, std::ios::binary);
        os << "BADMAGICxxxxxxxxxxxxxxxxxxxxxxxxxxxx";
    }
    CHECK_THROWS_AS(read_snapshot(path), std::runtime_error);
    std::remove(path.c_str());
}
