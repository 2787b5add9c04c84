#include "fmhd/operators.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fmhd/transforms.hpp"

namespace fmhd {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

SpectralField fractional_laplacian(const SpectralField& f, double s, ZeroModePolicy policy) {
    const GridSpec& g = f.grid();
    SpectralField out = f;
    if (s == 0.0) return out;

    if (s < 0.0 && policy == ZeroModePolicy::require_zero_mean) {
        double scale = 0.0;
        for (const auto& v : f.raw()) scale = std::max(scale, std::abs(v));
        for (int c = 0; c < f.components(); ++c)
            if (std::abs(f.at(c, 0)) > 1e-12 * std::max(scale, 1e-300))
                throw std::invalid_argument(
                    "fractional_laplacian: negative order requires zero mean "
                    "(or the annihilate zero-mode policy)");
    }

    const std::size_t n = g.points();
    for (std::size_t flat = 0; flat < n; ++flat) {
        auto k = g.freqs(flat);
        double k2 = 0.0;
        for (int ax = 0; ax < g.d; ++ax) k2 += static_cast<double>(k[ax]) * k[ax];
        double mult = (k2 == 0.0) ? 0.0 : std::pow(two_pi * std::sqrt(k2) / g.L, s);
        for (int c = 0; c < f.components(); ++c) out.at(c, flat) *= mult;
    }
    return out;
}

SpectralField leray_project(const SpectralField& v) {
    const GridSpec& g = v.grid();
    if (v.components() != g.d)
        throw std::invalid_argument("leray_project: expected a vector field (c = d)");

    SpectralField out = v;
    const std::size_t n = g.points();
    for (std::size_t flat = 0; flat < n; ++flat) {
        auto k = g.freqs(flat);
        double k2 = 0.0;
        for (int ax = 0; ax < g.d; ++ax) k2 += static_cast<double>(k[ax]) * k[ax];
        if (k2 == 0.0) continue;  // zero mode passes through
        complexd kdotv{0.0, 0.0};
        for (int ax = 0; ax < g.d; ++ax) kdotv += static_cast<double>(k[ax]) * v.at(ax, flat);
        for (int ax = 0; ax < g.d; ++ax)
            out.at(ax, flat) = v.at(ax, flat) - (static_cast<double>(k[ax]) / k2) * kdotv;
    }
    return out;
}

SpectralField fourier_truncate(const SpectralField& f, const TruncationSpec& trunc) {
    const GridSpec& g = f.grid();
    trunc.validate(g);
    SpectralField out = f;
    const std::size_t n = g.points();
    for (std::size_t flat = 0; flat < n; ++flat) {
        if (!trunc.retains(g, g.freqs(flat)))
            for (int c = 0; c < f.components(); ++c) out.at(c, flat) = complexd{0.0, 0.0};
    }
    return out;
}

bool supported_in(const SpectralField& f, const TruncationSpec& trunc) {
    const GridSpec& g = f.grid();
    const std::size_t n = g.points();
    for (std::size_t flat = 0; flat < n; ++flat) {
        if (trunc.retains(g, g.freqs(flat))) continue;
        for (int c = 0; c < f.components(); ++c)
            if (f.at(c, flat) != complexd{0.0, 0.0}) return false;
    }
    return true;
}

SpectralField spectral_derivative(const SpectralField& f, int axis) {
    const GridSpec& g = f.grid();
    if (axis < 0 || axis >= g.d) throw std::invalid_argument("spectral_derivative: bad axis");
    SpectralField out = f;
    const std::size_t n = g.points();
    for (std::size_t flat = 0; flat < n; ++flat) {
        auto k = g.freqs(flat);
        complexd mult{0.0, two_pi * k[axis] / g.L};
        for (int c = 0; c < f.components(); ++c) out.at(c, flat) *= mult;
    }
    return out;
}

SpectralField divergence(const SpectralField& v) {
    const GridSpec& g = v.grid();
    if (v.components() != g.d)
        throw std::invalid_argument("divergence: expected a vector field (c = d)");
    SpectralField out(g, 1, v.real_valued());
    const std::size_t n = g.points();
    for (std::size_t flat = 0; flat < n; ++flat) {
        auto k = g.freqs(flat);
        complexd s{0.0, 0.0};
        for (int ax = 0; ax < g.d; ++ax)
            s += complexd{0.0, two_pi * k[ax] / g.L} * v.at(ax, flat);
        out.at(0, flat) = s;
    }
    return out;
}

SpectralField tensor_divergence(const SpectralField& T) {
    const GridSpec& g = T.grid();
    const int d = g.d;
    if (T.components() != d * d)
        throw std::invalid_argument("tensor_divergence: expected a 2-tensor field (c = d*d)");
    SpectralField out(g, d, T.real_valued());
    const std::size_t n = g.points();
    for (std::size_t flat = 0; flat < n; ++flat) {
        auto k = g.freqs(flat);
        for (int kc = 0; kc < d; ++kc) {
            complexd s{0.0, 0.0};
            for (int j = 0; j < d; ++j)
                s += complexd{0.0, two_pi * k[j] / g.L} * T.at(j * d + kc, flat);
            out.at(kc, flat) = s;
        }
    }
    return out;
}

SpectralField vector_gradient(const SpectralField& v) {
    const GridSpec& g = v.grid();
    const int d = g.d;
    if (v.components() != d)
        throw std::invalid_argument("vector_gradient: expected a vector field (c = d)");
    SpectralField out(g, d * d, v.real_valued());
    const std::size_t n = g.points();
    for (std::size_t flat = 0; flat < n; ++flat) {
        auto k = g.freqs(flat);
        for (int j = 0; j < d; ++j) {
            complexd mult{0.0, two_pi * k[j] / g.L};
            for (int kc = 0; kc < d; ++kc) out.at(j * d + kc, flat) = mult * v.at(kc, flat);
        }
    }
    return out;
}

SpectralField alias_safe_product(const SpectralField& f, const SpectralField& g,
                                 const TruncationSpec& trunc) {
    if (!(f.grid() == g.grid()))
        throw std::invalid_argument("alias_safe_product: grids differ");
    if (f.components() != 1 || g.components() != 1)
        throw std::invalid_argument("alias_safe_product: scalar fields expected");
    trunc.require_alias_exact(f.grid());

    std::vector<double> a = inverse_transform_real(f);
    std::vector<double> b = inverse_transform_real(g);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] *= b[i];
    return fourier_truncate(forward_transform(a, f.grid(), 1), trunc);
}

SpectralField alias_safe_outer_product(const SpectralField& u, const SpectralField& v,
                                       const TruncationSpec& trunc) {
    const GridSpec& g = u.grid();
    const int d = g.d;
    if (!(g == v.grid()) || u.components() != d || v.components() != d)
        throw std::invalid_argument("alias_safe_outer_product: vector fields on one grid expected");
    trunc.require_alias_exact(g);

    std::vector<double> us = inverse_transform_real(u);
    std::vector<double> vs = inverse_transform_real(v);
    const std::size_t n = g.points();
    std::vector<double> prod(static_cast<std::size_t>(d) * d * n);
    for (int j = 0; j < d; ++j)
        for (int kc = 0; kc < d; ++kc) {
            double* dst = prod.data() + static_cast<std::size_t>(j * d + kc) * n;
            const double* uj = us.data() + static_cast<std::size_t>(j) * n;
            const double* vk = vs.data() + static_cast<std::size_t>(kc) * n;
            for (std::size_t i = 0; i < n; ++i) dst[i] = uj[i] * vk[i];
        }
    return fourier_truncate(forward_transform(prod, g, d * d), trunc);
}

double max_divergence(const SpectralField& v) {
    std::vector<double> div = inverse_transform_real(divergence(v));
    double m = 0.0;
    for (double x : div) m = std::max(m, std::abs(x));
    return m;
}

double max_pointwise(const SpectralField& f) {
    std::vector<double> s = inverse_transform_real(f);
    const std::size_t n = f.points();
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double mag2 = 0.0;
        for (int c = 0; c < f.components(); ++c) {
            double x = s[static_cast<std::size_t>(c) * n + i];
            mag2 += x * x;
        }
        m = std::max(m, mag2);
    }
    return std::sqrt(m);
}

}  // namespace fmhd
