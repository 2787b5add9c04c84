#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace fmhd {

/// Uniform node grid on the compact box [-A, A]^d with n_cells intervals per
/// axis (n_cells even, so composite Simpson applies), n_cells+1 nodes.
struct BoxGrid {
    int d = 2;
    double A = 4.0;
    int n_cells = 256;

    void validate() const;
    int nodes() const { return n_cells + 1; }
    double h() const { return 2.0 * A / n_cells; }
    std::size_t total_nodes() const {
        std::size_t t = 1;
        for (int i = 0; i < d; ++i) t *= static_cast<std::size_t>(nodes());
        return t;
    }
    double coord(int idx) const { return -A + idx * h(); }
};

/// Smooth compactly supported function sampled on a BoxGrid (node values,
/// row-major). The decay flag records whether the boundary layer is below
/// 1e-14 of the max (compact support resolved inside the box).
struct BoxFunction {
    BoxGrid grid;
    std::vector<double> values;

    static BoxFunction zeros(const BoxGrid& g) {
        return BoxFunction{g, std::vector<double>(g.total_nodes(), 0.0)};
    }
    double max_abs() const;
    double boundary_max_abs() const;
    bool decays() const { return boundary_max_abs() <= 1e-14 * std::max(max_abs(), 1e-300); }
};

/// Unit-mass C_c-infinity weights phi_i on [-1,1]: the profile
/// exp(-1/(1-t^2)) normalized to mass 1, optionally rescaled per axis (the
/// amplitude is then the exact mass and must be 1 to 1e-10 for split_S).
/// phi(x) = prod_i phi_i(x_i). Inside split_S the sampled weights are
/// renormalized to unit Simpson mass on the working grid so the splitting
/// identities hold at the quadrature level (an O(h^4) correction).
struct BumpWeights {
    int d = 2;
    std::array<double, 3> amplitude{1.0, 1.0, 1.0};

    double phi1d(int axis, double t) const;
    double phi(const std::array<double, 3>& x) const;  // tensor product
    double mass(int axis) const { return amplitude[axis]; }
};

/// Partial antiderivative T^(j)(u)(x) = int_{-A}^{x_j} u dt along axis j,
/// by cumulative composite Simpson (4th order). Requires vanishing line
/// integrals along axis j, checked to 1e-10 of scale: the output is then
/// compactly supported again. scale_hint lets callers supply the natural
/// problem scale so that roundoff-sized components are not flagged.
BoxFunction antiderivative_T(const BoxFunction& u, int axis, double scale_hint = 0.0);

/// The splitting S^(1)(g), ..., S^(d)(g) of g-bar = g - phi * int(g):
/// each S^(j)(g) has vanishing line integrals along axis j and
/// sum_j S^(j)(g) = g-bar. phi_i must have unit mass (checked to 1e-10).
std::vector<BoxFunction> split_S(const BoxFunction& g, const BumpWeights& w);

/// The divergence-solving operator B(g) = (T^(1)S^(1)g, ..., T^(d)S^(d)g)
/// with div B(g) = g - phi * int(g).
std::vector<BoxFunction> bogovskii_B(const BoxFunction& g, const BumpWeights& w);

/// Box integral by tensor composite Simpson.
double box_integral(const BoxFunction& f);

/// 4th-order finite-difference divergence of a vector of box functions
/// (the independent oracle for checking div B(g) = g - phi int g).
BoxFunction fd_divergence(const std::vector<BoxFunction>& w);

/// Schwartz-seminorm surrogate: max over nodes of (1+|x|^2) (|f| + h-scale FD
/// gradient magnitude); used for the continuity measurement of B.
double seminorm_surrogate(const BoxFunction& f);

/// Ten smooth rapidly decaying functions (bumps, Gaussians with polynomial
/// and oscillatory factors, dipoles) sampled on the grid; the standing corpus
/// for divergence-defect measurements.
std::vector<std::pair<std::string, BoxFunction>> smooth_corpus(const BoxGrid& grid);

}  // namespace fmhd
