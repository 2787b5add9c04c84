#pragma once

#include <vector>

#include "fmhd/field.hpp"

namespace fmhd {

/// Solution of the fractional Stokes system
///   nu Lambda^{2 alpha} u + grad p* = div F,   div u = 0
/// on the torus (div of a 2-tensor taken along its first index).
struct StokesSolution {
    SpectralField velocity;  // vector, divergence-free, zero mode 0
    SpectralField pressure;  // scalar (total pressure p*), zero mode 0
    double alpha = 1.0;
    double nu = 1.0;
};

/// Mode-by-mode spectral solve. For k != 0 with xi = k/L:
///   p^*(xi) = (xi (x) xi / |xi|^2) : F^(xi)
///   u^(xi)  = (div F^(xi) - 2 pi i xi p^*(xi)) / (nu (2 pi |xi|)^{2 alpha})
/// Zero modes of u and p* are set to 0. Defined for any real alpha; the
/// theory-validity range 1/2 < alpha < (d+1)/2 is advisory, not enforced.
StokesSolution solve_stokes_spectral(const SpectralField& F, double alpha, double nu);

/// Relative defect of the energy identity nu ||Lambda^alpha u||_2^2 = <div F, u>.
double stokes_energy_residual(const StokesSolution& sol, const SpectralField& F);

/// Relative plug-back residual ||nu Lambda^{2a} u + grad p* - div F||_2 / ||div F||_2.
double stokes_plugback_residual(const StokesSolution& sol, const SpectralField& F);

/// One very-weak-solution test pairing: a divergence-free field Phi and a
/// scalar potential psi, both band-limited.
struct VeryWeakTest {
    SpectralField Phi;  // vector, divergence-free
    SpectralField psi;  // scalar
};

/// Max over tests of |int u.(Lambda^{2 alpha} Phi + grad psi) + <F, grad Phi>|,
/// normalized by the test-field norms (<F, grad Phi> pairs F^{jk} d_j Phi^k).
/// Throws if some Phi is not divergence-free.
double very_weak_residual(const SpectralField& u, const SpectralField& F, double alpha,
                          const std::vector<VeryWeakTest>& tests);

}  // namespace fmhd
