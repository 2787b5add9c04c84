#pragma once

#include <array>
#include <complex>
#include <string>

namespace fmhd {

/// Gaussian-polynomial test functions psi with self-reciprocal core
/// g(x) = exp(-pi |x|^2) under the convention f^(xi) = int f e^{-2 pi i x.xi}:
///   gaussian      : psi = g,            psi_check(xi) = g(xi)
///   x_gaussian    : psi = x_a g,        psi_check(xi) = i xi_a g(xi)
///   xx_gaussian   : psi = x_a x_b g,    psi_check(xi) = (delta_ab/(2 pi) - xi_a xi_b) g(xi)
/// where psi_check = inverse Fourier transform of psi.
enum class TestFnShape { gaussian, x_gaussian, xx_gaussian };

struct TestFn {
    TestFnShape shape = TestFnShape::gaussian;
    int a = 0;
    int b = 0;

    double value(const std::array<double, 3>& x, int d) const;
    std::complex<double> check_value(const std::array<double, 3>& xi, int d) const;
    std::string name() const;
};

/// Quadrature check of one frequency-side/space-side identity pair:
///   part 1 (1 < lambda < d+1):
///     int (-2 pi i xi_j)/|xi|^lambda psi_check dxi
///       = 2 G((d+2-l)/2) / (G(l/2) pi^{d/2-l}) int x_j/|x|^{d+2-l} psi dx
///   part 2 (2 < lambda < d+2): second-order analogue
///   part 3 (3 < lambda < d+3): third-order analogue
/// Both sides are computed by independent radial x sphere quadrature
/// (tanh-sinh in radius, exact-degree quadrature on the sphere).
struct IdentityCheckResult {
    int part = 1;
    double lambda = 0.0;
    int j = 0, k = 0, l = 0;
    std::string test_fn;
    std::complex<double> frequency_side{0.0, 0.0};
    std::complex<double> space_side{0.0, 0.0};
    double rel_discrepancy = 0.0;  // |lhs-rhs| / max(|lhs|, |rhs|); absolute if both tiny
};

IdentityCheckResult fourier_identity_check(int part, double lambda, int d, int j, int k, int l,
                                           const TestFn& psi);

}  // namespace fmhd
