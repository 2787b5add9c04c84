#include "fmhd/stokes_kernel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fmhd {

double kernel_coefficient(double alpha, int d) {
    if (!(alpha > 0.5 && alpha < 0.5 * (d + 1)))
        throw std::invalid_argument("kernel_coefficient: need 1/2 < alpha < (d+1)/2");
    return std::tgamma(1.0 + 0.5 * d - alpha) /
           (std::pow(2.0, 2.0 * alpha) * std::pow(std::numbers::pi, 0.5 * d) *
            std::tgamma(1.0 + alpha));
}

KernelSpec make_kernel_spec(double alpha, int d) {
    return KernelSpec{alpha, d, kernel_coefficient(alpha, d)};
}

double kernel_evaluate(const std::array<double, 3>& x, int j, int k, int l,
                       const KernelSpec& spec) {
    double r2 = 0.0;
    for (int ax = 0; ax < spec.d; ++ax) r2 += x[ax] * x[ax];
    if (r2 == 0.0) throw std::invalid_argument("kernel_evaluate: singular at the origin");

    const double m = spec.d + 2.0 - 2.0 * spec.alpha;
    const double r = std::sqrt(r2);
    const double rm = std::pow(r, -m);
    double dl_term = ((l == j ? x[k] : 0.0) + (l == k ? x[j] : 0.0)) * rm -
                     m * x[j] * x[k] * x[l] * rm / r2;
    double diag_term = (j == k) ? (2.0 * spec.alpha - 1.0) * x[l] * rm : 0.0;
    return spec.coefficient * (dl_term - diag_term);
}

std::array<double, 3> BoxTensorSamples::center(std::size_t flat) const {
    std::array<double, 3> x{0.0, 0.0, 0.0};
    for (int ax = d - 1; ax >= 0; --ax) {
        int idx = static_cast<int>(flat % static_cast<std::size_t>(n));
        flat /= static_cast<std::size_t>(n);
        x[ax] = lo + (idx + 0.5) * h();
    }
    return x;
}

std::vector<std::array<double, 3>> kernel_convolve(
    const BoxTensorSamples& F, double alpha, const std::vector<std::array<double, 3>>& targets) {
    const int d = F.d;
    const std::size_t ncells = F.cells();
    if (F.values.size() != ncells * static_cast<std::size_t>(d * d))
        throw std::invalid_argument("kernel_convolve: sample count mismatch");

    KernelSpec spec = make_kernel_spec(alpha, d);
    double cellvol = 1.0;
    for (int ax = 0; ax < d; ++ax) cellvol *= F.h();
    const double skip_tol = F.h() * 1e-9;

    // precompute cell centers and drop negligible cells
    std::vector<std::array<double, 3>> centers;
    std::vector<std::size_t> live;
    centers.reserve(ncells);
    for (std::size_t cell = 0; cell < ncells; ++cell) {
        centers.push_back(F.center(cell));
        for (int c = 0; c < d * d; ++c) {
            if (F.values[static_cast<std::size_t>(c) * ncells + cell] != 0.0) {
                live.push_back(cell);
                break;
            }
        }
    }

    std::vector<std::array<double, 3>> out(targets.size(), {0.0, 0.0, 0.0});
    for (std::size_t ti = 0; ti < targets.size(); ++ti) {
        const auto& x = targets[ti];
        std::array<double, 3> u{0.0, 0.0, 0.0};
        for (std::size_t cell : live) {
            std::array<double, 3> z{0.0, 0.0, 0.0};
            double dist2 = 0.0;
            for (int ax = 0; ax < d; ++ax) {
                z[ax] = x[ax] - centers[cell][ax];
                dist2 += z[ax] * z[ax];
            }
            if (dist2 <= skip_tol * skip_tol) continue;  // singular node
            for (int j = 0; j < d; ++j) {
                double acc = 0.0;
                for (int k = 0; k < d; ++k)
                    for (int l = 0; l < d; ++l)
                        acc += kernel_evaluate(z, j, k, l, spec) *
                               F.values[static_cast<std::size_t>(k * d + l) * ncells + cell];
                u[j] += acc;
            }
        }
        for (int j = 0; j < d; ++j) out[ti][j] = u[j] * cellvol;
    }
    return out;
}

}  // namespace fmhd
