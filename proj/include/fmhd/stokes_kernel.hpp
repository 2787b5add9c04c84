#pragma once

#include <array>
#include <vector>

namespace fmhd {

/// The explicit Stokes Green kernel for 1/2 < alpha < (d+1)/2:
///   U_j^{kl}(x) = c(a,d) [ D_l( x_j x_k / |x|^{d+2-2a} )
///                          - delta_{jk} (2a-1) x_l / |x|^{d+2-2a} ],
///   c(a,d) = Gamma(1 + d/2 - a) / (2^{2a} pi^{d/2} Gamma(1 + a)),
/// with the derivative expanded as
///   D_l(x_j x_k / |x|^m) = (delta_{lj} x_k + delta_{lk} x_j)/|x|^m
///                          - m x_j x_k x_l / |x|^{m+2},  m = d + 2 - 2a.
/// The velocity solving nu=1 fractional Stokes with data F is
/// u^j = sum_{k,l} U_j^{kl} * F^{kl} (l pairs with the derivative in div F).
struct KernelSpec {
    double alpha = 1.0;
    int d = 3;
    double coefficient = 0.0;  // c(alpha, d)
};

double kernel_coefficient(double alpha, int d);
KernelSpec make_kernel_spec(double alpha, int d);

/// Evaluate U_{alpha,j}^{kl}(x). Throws at x = 0.
double kernel_evaluate(const std::array<double, 3>& x, int j, int k, int l,
                       const KernelSpec& spec);

/// Tensor samples of a compactly supported F on the cell-centered grid of
/// [lo, hi]^d with n cells per axis; values[c * n^d + cell] with c = j*d+k.
struct BoxTensorSamples {
    int d = 2;
    double lo = -1.0;
    double hi = 1.0;
    int n = 64;
    std::vector<double> values;

    double h() const { return (hi - lo) / n; }
    std::size_t cells() const {
        std::size_t c = 1;
        for (int i = 0; i < d; ++i) c *= static_cast<std::size_t>(n);
        return c;
    }
    std::array<double, 3> center(std::size_t flat) const;
};

/// Direct midpoint-rule convolution u_j(x) = sum_cells sum_{k,l}
/// U_j^{kl}(x - y) F^{kl}(y) cellvol. The cell whose center coincides with the
/// target (within h*1e-9) is excluded; the kernel is locally integrable on the
/// valid alpha range, so node exclusion converges under refinement.
std::vector<std::array<double, 3>> kernel_convolve(const BoxTensorSamples& F, double alpha,
                                                   const std::vector<std::array<double, 3>>& targets);

}  // namespace fmhd
