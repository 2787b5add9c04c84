#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fmhd/field.hpp"
#include "fmhd/grid.hpp"

namespace fmhd {

/// Physical and numerical parameters of a truncated Stokes-Magneto run.
struct ModelParams {
    GridSpec grid;
    TruncationSpec trunc;
    double alpha = 1.0;  // velocity diffusion order (Lambda^{2 alpha})
    double beta = 1.0;   // magnetic diffusion order (Lambda^{2 beta})
    double nu = 1.0;     // viscosity
    double eta = 1.0;    // magnetic diffusivity
    double dt = 1e-3;
    double t_final = 1.0;
    int snapshot_stride = 0;  // 0 = no snapshots
    double cfl_budget = 0.5;
    double blowup_factor = 10.0;
    bool linear_only = false;  // diagnostic switch: drop the nonlinear coupling

    void validate() const;
};

/// Per-step diagnostics. energy_residual is |E(t) - ||b(0)||_2^2| / ||b(0)||_2^2
/// with E(t) = ||b(t)||_2^2 + 2 int_0^t (nu ||L^a u||^2 + eta ||L^b b||^2),
/// the time integral accumulated with the stepper's own RK4 weights.
struct DiagnosticRecord {
    double t = 0.0;
    double b_l2_sq = 0.0;
    double b_hbeta_sq = 0.0;
    double u_halpha_sq = 0.0;
    double u_weak_lorentz = 0.0;  // ||u||_{d/(d+1-2a), inf}; NaN outside 1/2 < a < (d+1)/2
    double energy_residual = 0.0;
    double max_div_b = 0.0;
    double max_div_u = 0.0;
};

/// Abort conditions (blow-up guard, CFL violation, non-finite state).
struct SimulationAbort : std::runtime_error {
    explicit SimulationAbort(const std::string& what) : std::runtime_error(what) {}
};

/// b(0) = P S_R b0.
SpectralField initial_truncate(const SpectralField& b0, const ModelParams& p);

/// One nonlinear-term evaluation of the truncated system:
///   u = StokesSolve(S_R(b (x) b)).velocity  (the convolution formula, realized
///       spectrally on the torus),
///   term = P S_R div(b (x) u - u (x) b).
/// Both the term and b stay supported in K_R exactly.
struct NonlinearEval {
    SpectralField term;
    SpectralField velocity;
    double u_halpha_sq = 0.0;  // ||Lambda^alpha u||_2^2
    double b_hbeta_sq = 0.0;   // ||Lambda^beta b||_2^2 of the evaluated state
    double u_max = 0.0;        // max pointwise |u| (for the CFL guard)
};
NonlinearEval evaluate_nonlinear(const SpectralField& b, const ModelParams& p);

/// Full ODE right-hand side -eta Lambda^{2 beta} b + nonlinear term.
SpectralField rhs(const SpectralField& b, const ModelParams& p);

/// Lawson (integrating-factor) RK4 stepper for the truncated system: the
/// fractional diffusion is integrated exactly per mode, classical RK4 is
/// applied to the transformed nonlinearity. Also accumulates the dissipation
/// integral 2 int (nu ||L^a u||^2 + eta ||L^b b||^2) with the same RK weights.
class StokesMagnetoStepper {
  public:
    StokesMagnetoStepper(const ModelParams& p, const SpectralField& b0);

    void advance();            // one step of length dt
    void advance(double h);    // one step of custom length
    const SpectralField& state() const { return b_; }
    double time() const { return t_; }
    double dissipation_integral() const { return dissip_; }
    double initial_l2_sq() const { return b0_l2_sq_; }

    DiagnosticRecord make_record();

  private:
    const NonlinearEval& stage1();
    void guard(const SpectralField& bnew, double u_max) const;

    ModelParams p_;
    SpectralField b_;
    double b0_l2_sq_ = 0.0;
    double t_ = 0.0;
    double dissip_ = 0.0;
    long step_count_ = 0;
    std::vector<double> symbol_;  // -eta (2 pi |k|/L)^{2 beta} per mode
    std::vector<double> walpha_, wbeta_;       // stage-norm multiplier tables
    std::vector<double> exp_half_, exp_full_;  // propagators for the nominal dt
    std::optional<NonlinearEval> stage1_;
};

struct SimulationResult {
    std::vector<DiagnosticRecord> records;  // one per step, including t = 0
    SpectralField b_final;
    std::vector<std::pair<double, SpectralField>> snapshots;
};

/// Integrate to t_final, recording diagnostics every step and snapshotting
/// the state every snapshot_stride steps (if nonzero).
SimulationResult simulate(const ModelParams& p, const SpectralField& b0);

/// Perturbed fractional heat equation
///   dt b + eta Lambda^{2 beta} b + div(u (x) b) = div F
/// with frozen divergence-free u and time-constant F, both optional, using the
/// same Lawson-RK4 stepper. b(0) = S_R b0 (no Leray projection), F is
/// truncated to K_R. energy_residual monitors
///   ||b(t)||^2 + 2 eta int ||L^b b||^2 + 2 int <F, grad b> = ||b(0)||^2.
struct HeatResult {
    std::vector<DiagnosticRecord> records;
    SpectralField b_final;
    double gamma_exponent = 0.0;  // 2 beta / (2 beta - 1), surfaced for reports
};

HeatResult heat_solve(const ModelParams& p, const SpectralField& b0,
                      const std::optional<SpectralField>& u_frozen,
                      const std::optional<SpectralField>& forcing);

}  // namespace fmhd
