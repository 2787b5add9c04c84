#include "fmhd/stokes.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fmhd/operators.hpp"

namespace fmhd {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

StokesSolution solve_stokes_spectral(const SpectralField& F, double alpha, double nu) {
    const GridSpec& g = F.grid();
    const int d = g.d;
    if (F.components() != d * d)
        throw std::invalid_argument("solve_stokes_spectral: expected a 2-tensor field");
    if (!(nu > 0.0)) throw std::invalid_argument("solve_stokes_spectral: nu must be positive");

    StokesSolution sol;
    sol.alpha = alpha;
    sol.nu = nu;
    sol.velocity = SpectralField(g, d, F.real_valued());
    sol.pressure = SpectralField(g, 1, F.real_valued());

    const std::size_t n = g.points();
    for (std::size_t flat = 0; flat < n; ++flat) {
        auto k = g.freqs(flat);
        double k2 = 0.0;
        for (int ax = 0; ax < d; ++ax) k2 += static_cast<double>(k[ax]) * k[ax];
        if (k2 == 0.0) continue;  // zero modes stay 0

        // p* = (xi (x) xi / |xi|^2) : F^
        complexd p{0.0, 0.0};
        for (int j = 0; j < d; ++j)
            for (int kc = 0; kc < d; ++kc)
                p += (static_cast<double>(k[j]) * k[kc] / k2) * F.at(j * d + kc, flat);
        sol.pressure.at(0, flat) = p;

        // u = (div F - 2 pi i xi p*) / (nu (2 pi |xi|)^{2 alpha})
        double denom = nu * std::pow(two_pi * std::sqrt(k2) / g.L, 2.0 * alpha);
        for (int kc = 0; kc < d; ++kc) {
            complexd divF{0.0, 0.0};
            for (int j = 0; j < d; ++j)
                divF += complexd{0.0, two_pi * k[j] / g.L} * F.at(j * d + kc, flat);
            complexd gradp = complexd{0.0, two_pi * k[kc] / g.L} * p;
            sol.velocity.at(kc, flat) = (divF - gradp) / denom;
        }
    }
    return sol;
}

double stokes_energy_residual(const StokesSolution& sol, const SpectralField& F) {
    if (!(F.grid() == sol.velocity.grid()))
        throw std::invalid_argument("stokes_energy_residual: grids differ");
    SpectralField lam_u = fractional_laplacian(sol.velocity, sol.alpha);
    double lhs = sol.nu * lam_u.l2_norm_sq();
    double rhs = l2_inner(tensor_divergence(F), sol.velocity);
    return std::abs(lhs - rhs) / std::max(lhs, 1e-300);
}

double stokes_plugback_residual(const StokesSolution& sol, const SpectralField& F) {
    SpectralField divF = tensor_divergence(F);
    SpectralField lhs = fractional_laplacian(sol.velocity, 2.0 * sol.alpha);
    lhs *= sol.nu;
    // grad p*
    const GridSpec& g = F.grid();
    SpectralField gradp(g, g.d, sol.pressure.real_valued());
    for (int ax = 0; ax < g.d; ++ax) {
        SpectralField dp = spectral_derivative(sol.pressure, ax);
        for (std::size_t i = 0; i < g.points(); ++i) gradp.at(ax, i) = dp.at(0, i);
    }
    lhs += gradp;
    lhs -= divF;
    double denom = divF.l2_norm();
    return (denom == 0.0) ? lhs.l2_norm() : lhs.l2_norm() / denom;
}

double very_weak_residual(const SpectralField& u, const SpectralField& F, double alpha,
                          const std::vector<VeryWeakTest>& tests) {
    const GridSpec& g = u.grid();
    double worst = 0.0;
    for (const auto& t : tests) {
        if (!(t.Phi.grid() == g) || t.Phi.components() != g.d || t.psi.components() != 1)
            throw std::invalid_argument("very_weak_residual: malformed test field");
        double phi_scale = t.Phi.l2_norm();
        if (max_divergence(t.Phi) > 1e-10 * std::max(phi_scale, 1e-300))
            throw std::invalid_argument("very_weak_residual: test Phi is not divergence-free");

        SpectralField lam_phi = fractional_laplacian(t.Phi, 2.0 * alpha);
        SpectralField grad_psi(g, g.d, t.psi.real_valued());
        for (int ax = 0; ax < g.d; ++ax) {
            SpectralField dp = spectral_derivative(t.psi, ax);
            for (std::size_t i = 0; i < g.points(); ++i) grad_psi.at(ax, i) = dp.at(0, i);
        }
        double pairing = l2_inner(u, lam_phi + grad_psi) + l2_inner(F, vector_gradient(t.Phi));
        double norm_scale = std::max({lam_phi.l2_norm(), grad_psi.l2_norm(), 1e-300});
        double u_scale = std::max(u.l2_norm(), F.l2_norm());
        double denom = std::max(norm_scale * u_scale, 1e-300);
        worst = std::max(worst, std::abs(pairing) / denom);
    }
    return worst;
}

}  // namespace fmhd
