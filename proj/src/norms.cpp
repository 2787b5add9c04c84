#include "fmhd/norms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fmhd/transforms.hpp"

namespace fmhd {

namespace {
std::vector<double> pointwise_magnitude(const SpectralField& f) {
    std::vector<double> s = inverse_transform_real(f);
    const std::size_t n = f.points();
    std::vector<double> mag(n);
    if (f.components() == 1) {
        for (std::size_t i = 0; i < n; ++i) mag[i] = std::abs(s[i]);
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            double m2 = 0.0;
            for (int c = 0; c < f.components(); ++c) {
                double x = s[static_cast<std::size_t>(c) * n + i];
                m2 += x * x;
            }
            mag[i] = std::sqrt(m2);
        }
    }
    return mag;
}
}  // namespace

double lebesgue_norm(const SpectralField& f, double p) {
    if (p < 1.0) throw std::invalid_argument("lebesgue_norm: p must be >= 1");
    std::vector<double> mag = pointwise_magnitude(f);
    if (p == kInfinity) {
        double m = 0.0;
        for (double v : mag) m = std::max(m, v);
        return m;
    }
    const double cellvol = f.grid().cell_volume();
    double s = 0.0;
    for (double v : mag) s += std::pow(v, p);
    return std::pow(s * cellvol, 1.0 / p);
}

double sobolev_norm(const SpectralField& f, double s, bool homogeneous) {
    const GridSpec& g = f.grid();
    constexpr double two_pi = 2.0 * std::numbers::pi;

    if (homogeneous && s < 0.0) {
        double scale = 0.0;
        for (const auto& v : f.raw()) scale = std::max(scale, std::abs(v));
        for (int c = 0; c < f.components(); ++c)
            if (std::abs(f.at(c, 0)) > 1e-12 * std::max(scale, 1e-300))
                throw std::invalid_argument("sobolev_norm: homogeneous s < 0 needs zero mean");
    }

    const std::size_t n = g.points();
    double acc = 0.0;
    for (std::size_t flat = 0; flat < n; ++flat) {
        auto k = g.freqs(flat);
        double k2 = 0.0;
        for (int ax = 0; ax < g.d; ++ax) k2 += static_cast<double>(k[ax]) * k[ax];
        double w;
        if (homogeneous) {
            w = (k2 == 0.0) ? (s == 0.0 ? 1.0 : 0.0)
                            : std::pow(two_pi * std::sqrt(k2) / g.L, 2.0 * s);
        } else {
            w = std::pow(1.0 + 4.0 * std::numbers::pi * std::numbers::pi * k2 / (g.L * g.L), s);
        }
        double m2 = 0.0;
        for (int c = 0; c < f.components(); ++c) m2 += std::norm(f.at(c, flat));
        acc += w * m2;
    }
    return std::sqrt(acc * g.volume());
}

std::vector<double> decreasing_rearrangement(const SpectralField& f) {
    std::vector<double> mag = pointwise_magnitude(f);
    std::sort(mag.begin(), mag.end(), std::greater<double>());
    return mag;
}

double lorentz_weak_quasinorm(const SpectralField& f, double p) {
    if (p < 1.0 || p == kInfinity)
        throw std::invalid_argument("lorentz_weak_quasinorm: need 1 <= p < infinity");
    std::vector<double> star = decreasing_rearrangement(f);
    const double cellvol = f.grid().cell_volume();
    // f* is constant on [(i-1)cv, i*cv); t^{1/p} increases, so the sup over
    // each step is attained at its right endpoint t_i = i*cv.
    double best = 0.0;
    for (std::size_t i = 0; i < star.size(); ++i) {
        double t = static_cast<double>(i + 1) * cellvol;
        best = std::max(best, std::pow(t, 1.0 / p) * star[i]);
    }
    return best;
}

}  // namespace fmhd
