#include "fmhd/littlewood_paley.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "fmhd/bump.hpp"
#include "fmhd/norms.hpp"
#include "fmhd/operators.hpp"

namespace fmhd {

double LPBumpSpec::chi(double r) const {
    if (r <= inner) return 1.0;
    if (r >= outer) return 0.0;
    // map [inner, outer] -> [1, -1] and step down smoothly
    double t = 1.0 - 2.0 * (r - inner) / (outer - inner);
    return smooth_step(t);
}

namespace {
SpectralField radial_multiplier(const SpectralField& f, double scale,
                                double (LPBumpSpec::*profile)(double) const,
                                const LPBumpSpec& bumps) {
    const GridSpec& g = f.grid();
    SpectralField out = f;
    const std::size_t n = g.points();
    for (std::size_t flat = 0; flat < n; ++flat) {
        auto k = g.freqs(flat);
        double k2 = 0.0;
        for (int ax = 0; ax < g.d; ++ax) k2 += static_cast<double>(k[ax]) * k[ax];
        double m = (bumps.*profile)(scale * std::sqrt(k2) / g.L);
        for (int c = 0; c < f.components(); ++c) out.at(c, flat) *= m;
    }
    return out;
}
}  // namespace

SpectralField lp_block(const SpectralField& f, int j, const LPBumpSpec& bumps) {
    return radial_multiplier(f, std::ldexp(1.0, -j), &LPBumpSpec::phi, bumps);
}

SpectralField lp_low(const SpectralField& f, int j, const LPBumpSpec& bumps) {
    return radial_multiplier(f, std::ldexp(1.0, -j), &LPBumpSpec::psi, bumps);
}

namespace {
// max over multi-indices |gamma| = k of ||D^gamma u||_q
double max_derivative_norm(const SpectralField& u, int order, double q) {
    const int d = u.grid().d;
    double best = 0.0;
    // enumerate multi-indices of total order `order` over d axes
    std::vector<int> gamma(static_cast<std::size_t>(d), 0);
    std::function<void(int, int)> rec = [&](int axis, int remaining) {
        if (axis == d - 1) {
            gamma[static_cast<std::size_t>(axis)] = remaining;
            SpectralField der = u;
            for (int ax = 0; ax < d; ++ax)
                for (int r = 0; r < gamma[static_cast<std::size_t>(ax)]; ++r)
                    der = spectral_derivative(der, ax);
            best = std::max(best, lebesgue_norm(der, q));
            return;
        }
        for (int take = 0; take <= remaining; ++take) {
            gamma[static_cast<std::size_t>(axis)] = take;
            rec(axis + 1, remaining - take);
        }
    };
    rec(0, order);
    return best;
}
}  // namespace

std::optional<std::pair<double, double>> bernstein_ratios(const SpectralField& u, int j, double p,
                                                          double q, int k) {
    if (!(p >= 1.0 && q >= p)) throw std::invalid_argument("bernstein_ratios: need 1 <= p <= q");
    const double R = std::ldexp(1.0, j);
    double up = lebesgue_norm(u, p);
    if (up == 0.0) return std::nullopt;  // degenerate field
    double dkq = max_derivative_norm(u, k, q);
    double dkp = max_derivative_norm(u, k, p);
    double r1 = dkq / (std::pow(R, k + u.grid().d * (1.0 / p - 1.0 / q)) * up);
    double r2 = dkp / (std::pow(R, k) * up);
    return std::make_pair(r1, r2);
}

BernsteinReport bernstein_check(int d, int j, double p, double q, int k, int trials, Rng& rng) {
    if (!(p >= 1.0 && q >= p)) throw std::invalid_argument("bernstein_check: need 1 <= p <= q");
    if (j < 0 || k < 0) throw std::invalid_argument("bernstein_check: need j, k >= 0");

    GridSpec grid{d, std::max(16, 4 << j), 1.0};
    const double R = std::ldexp(1.0, j);

    BernsteinReport rep;
    rep.j = j;
    rep.k = k;
    rep.p = p;
    rep.q = q;
    rep.trials = trials;
    bool first = true;
    for (int t = 0; t < trials; ++t) {
        SpectralField u = random_real_field(grid, 1, 1 << j, 0.5, rng);
        // restrict to the open-inner annulus 2^(j-1) < |k| <= 2^j
        u = fourier_truncate(u, TruncationSpec{R});
        if (j > 0) u -= fourier_truncate(u, TruncationSpec{R / 2.0});
        auto ratios = bernstein_ratios(u, j, p, q, k);
        if (!ratios) {
            ++rep.skipped;
            continue;
        }
        auto [r1, r2] = *ratios;
        if (first) {
            rep.r1_min = rep.r1_max = r1;
            rep.r2_min = rep.r2_max = r2;
            first = false;
        } else {
            rep.r1_min = std::min(rep.r1_min, r1);
            rep.r1_max = std::max(rep.r1_max, r1);
            rep.r2_min = std::min(rep.r2_min, r2);
            rep.r2_max = std::max(rep.r2_max, r2);
        }
    }
    return rep;
}

}  // namespace fmhd
