#include "fmhd/evolver.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "fmhd/norms.hpp"
#include "fmhd/operators.hpp"
#include "fmhd/stokes.hpp"
#include "fmhd/transforms.hpp"

namespace fmhd {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;

std::vector<double> diffusion_symbol(const GridSpec& g, double eta, double beta) {
    const std::size_t n = g.points();
    std::vector<double> sym(n);
    for (std::size_t flat = 0; flat < n; ++flat) {
        auto k = g.freqs(flat);
        double k2 = 0.0;
        for (int ax = 0; ax < g.d; ++ax) k2 += static_cast<double>(k[ax]) * k[ax];
        sym[flat] = (k2 == 0.0) ? 0.0 : -eta * std::pow(two_pi * std::sqrt(k2) / g.L, 2.0 * beta);
    }
    return sym;
}

// fractional-Laplacian weight table (2 pi |k| / L)^{2s}
std::vector<double> multiplier_table(const GridSpec& g, double s) {
    const std::size_t n = g.points();
    std::vector<double> w(n);
    for (std::size_t flat = 0; flat < n; ++flat) {
        auto k = g.freqs(flat);
        double k2 = 0.0;
        for (int ax = 0; ax < g.d; ++ax) k2 += static_cast<double>(k[ax]) * k[ax];
        w[flat] = (k2 == 0.0) ? 0.0 : std::pow(two_pi * std::sqrt(k2) / g.L, 2.0 * s);
    }
    return w;
}

double weighted_l2_sq(const SpectralField& f, const std::vector<double>& w) {
    const std::size_t n = f.points();
    double acc = 0.0;
    for (int c = 0; c < f.components(); ++c)
        for (std::size_t i = 0; i < n; ++i) acc += w[i] * std::norm(f.at(c, i));
    return acc * f.grid().volume();
}

void apply_propagator(SpectralField& f, const std::vector<double>& sym, double tau) {
    const std::size_t n = f.points();
    for (int c = 0; c < f.components(); ++c)
        for (std::size_t i = 0; i < n; ++i) f.at(c, i) *= std::exp(sym[i] * tau);
}

void apply_exp_table(SpectralField& f, const std::vector<double>& factors) {
    const std::size_t n = f.points();
    for (int c = 0; c < f.components(); ++c)
        for (std::size_t i = 0; i < n; ++i) f.at(c, i) *= factors[i];
}

double weak_lorentz_of_velocity(const SpectralField& u, int d, double alpha) {
    double denom = d + 1.0 - 2.0 * alpha;
    if (!(denom > 0.0)) return std::numeric_limits<double>::quiet_NaN();
    double p = d / denom;
    if (p < 1.0) return std::numeric_limits<double>::quiet_NaN();
    return lorentz_weak_quasinorm(u, p);
}
}  // namespace

void ModelParams::validate() const {
    grid.validate();
    trunc.validate(grid);
    trunc.require_alias_exact(grid);
    if (!(nu > 0.0) || !(eta > 0.0))
        throw std::invalid_argument("ModelParams: nu and eta must be positive");
    if (!(dt > 0.0) || !(t_final > 0.0))
        throw std::invalid_argument("ModelParams: dt and t_final must be positive");
    if (snapshot_stride < 0) throw std::invalid_argument("ModelParams: snapshot_stride < 0");
}

SpectralField initial_truncate(const SpectralField& b0, const ModelParams& p) {
    if (b0.components() != p.grid.d)
        throw std::invalid_argument("initial_truncate: b0 must be a vector field");
    return leray_project(fourier_truncate(b0, p.trunc));
}

namespace {
NonlinearEval evaluate_nonlinear_impl(const SpectralField& b, const ModelParams& p,
                                      const std::vector<double>& walpha,
                                      const std::vector<double>& wbeta) {
    const GridSpec& g = p.grid;
    const int d = g.d;
    const std::size_t n = g.points();

    NonlinearEval ev;
    ev.b_hbeta_sq = weighted_l2_sq(b, wbeta);

    if (p.linear_only) {
        ev.term = SpectralField(g, d, true);
        ev.velocity = SpectralField(g, d, true);
        return ev;
    }

    std::vector<double> bs = inverse_transform_real(b);

    // F = S_R(b (x) b), exact on K_R by alias-safety
    std::vector<double> Fs(static_cast<std::size_t>(d) * d * n);
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
            double* dst = Fs.data() + static_cast<std::size_t>(j * d + k) * n;
            const double* bj = bs.data() + static_cast<std::size_t>(j) * n;
            const double* bk = bs.data() + static_cast<std::size_t>(k) * n;
            for (std::size_t i = 0; i < n; ++i) dst[i] = bj[i] * bk[i];
        }
    SpectralField F = fourier_truncate(forward_transform(Fs, g, d * d), p.trunc);

    StokesSolution sol = solve_stokes_spectral(F, p.alpha, p.nu);
    ev.velocity = std::move(sol.velocity);
    ev.u_halpha_sq = weighted_l2_sq(ev.velocity, walpha);

    std::vector<double> us = inverse_transform_real(ev.velocity);
    for (std::size_t i = 0; i < n; ++i) {
        double m2 = 0.0;
        for (int c = 0; c < d; ++c) {
            double x = us[static_cast<std::size_t>(c) * n + i];
            m2 += x * x;
        }
        ev.u_max = std::max(ev.u_max, m2);
    }
    ev.u_max = std::sqrt(ev.u_max);

    // W = b (x) u - u (x) b is antisymmetric; only the upper triangle is formed.
    // (div W)^k = sum_j d_j W^{jk} with W^{jk} = b^j u^k - u^j b^k.
    const int npairs = d * (d - 1) / 2;
    std::vector<double> Ws(static_cast<std::size_t>(npairs) * n);
    int pair = 0;
    std::array<std::array<int, 2>, 3> pairs{};
    for (int j = 0; j < d; ++j)
        for (int k = j + 1; k < d; ++k) {
            double* dst = Ws.data() + static_cast<std::size_t>(pair) * n;
            const double* bj = bs.data() + static_cast<std::size_t>(j) * n;
            const double* bk = bs.data() + static_cast<std::size_t>(k) * n;
            const double* uj = us.data() + static_cast<std::size_t>(j) * n;
            const double* uk = us.data() + static_cast<std::size_t>(k) * n;
            for (std::size_t i = 0; i < n; ++i) dst[i] = bj[i] * uk[i] - uj[i] * bk[i];
            pairs[static_cast<std::size_t>(pair)] = {j, k};
            ++pair;
        }
    SpectralField W = fourier_truncate(forward_transform(Ws, g, npairs), p.trunc);

    SpectralField divW(g, d, true);
    for (std::size_t flat = 0; flat < n; ++flat) {
        auto kf = g.freqs(flat);
        for (int pi = 0; pi < npairs; ++pi) {
            int j = pairs[static_cast<std::size_t>(pi)][0];
            int k = pairs[static_cast<std::size_t>(pi)][1];
            complexd w = W.at(pi, flat);
            // W^{jk} = w, W^{kj} = -w
            divW.at(k, flat) += complexd{0.0, two_pi * kf[j] / g.L} * w;
            divW.at(j, flat) -= complexd{0.0, two_pi * kf[k] / g.L} * w;
        }
    }
    ev.term = leray_project(divW);
    return ev;
}
}  // namespace

NonlinearEval evaluate_nonlinear(const SpectralField& b, const ModelParams& p) {
    return evaluate_nonlinear_impl(b, p, multiplier_table(p.grid, p.alpha),
                                   multiplier_table(p.grid, p.beta));
}

SpectralField rhs(const SpectralField& b, const ModelParams& p) {
    if (!supported_in(b, p.trunc))
        throw std::invalid_argument("rhs: state not supported in K_R");
    NonlinearEval ev = evaluate_nonlinear(b, p);
    SpectralField diffusion = fractional_laplacian(b, 2.0 * p.beta);
    diffusion *= -p.eta;
    return diffusion + ev.term;
}

StokesMagnetoStepper::StokesMagnetoStepper(const ModelParams& p, const SpectralField& b0)
    : p_(p), b_(initial_truncate(b0, p)) {
    p_.validate();
    b0_l2_sq_ = b_.l2_norm_sq();
    symbol_ = diffusion_symbol(p_.grid, p_.eta, p_.beta);
    walpha_ = multiplier_table(p_.grid, p_.alpha);
    wbeta_ = multiplier_table(p_.grid, p_.beta);
    exp_half_.resize(symbol_.size());
    exp_full_.resize(symbol_.size());
    for (std::size_t i = 0; i < symbol_.size(); ++i) {
        exp_half_[i] = std::exp(symbol_[i] * 0.5 * p_.dt);
        exp_full_[i] = std::exp(symbol_[i] * p_.dt);
    }
}

const NonlinearEval& StokesMagnetoStepper::stage1() {
    if (!stage1_) stage1_ = evaluate_nonlinear_impl(b_, p_, walpha_, wbeta_);
    return *stage1_;
}

void StokesMagnetoStepper::guard(const SpectralField& bnew, double u_max) const {
    if (!bnew.finite()) throw SimulationAbort("non-finite state (blow-up guard)");
    if (bnew.l2_norm_sq() > p_.blowup_factor * p_.blowup_factor * std::max(b0_l2_sq_, 1e-300))
        throw SimulationAbort("||b||_2 exceeded blow-up threshold");
    if (step_count_ % 20 == 0 && u_max > 0.0) {
        double dt_limit = p_.cfl_budget * p_.grid.dx() / u_max;
        if (p_.dt > dt_limit)
            throw SimulationAbort("CFL budget violated: dt = " + std::to_string(p_.dt) +
                                  " > " + std::to_string(dt_limit));
    }
}

void StokesMagnetoStepper::advance() { advance(p_.dt); }

void StokesMagnetoStepper::advance(double h) {
    // propagator tables are cached for the nominal dt; a custom step length
    // (the final partial step) recomputes them locally
    std::vector<double> half_local, full_local;
    const std::vector<double>* Ehalf = &exp_half_;
    const std::vector<double>* Efull = &exp_full_;
    if (h != p_.dt) {
        half_local.resize(symbol_.size());
        full_local.resize(symbol_.size());
        for (std::size_t i = 0; i < symbol_.size(); ++i) {
            half_local[i] = std::exp(symbol_[i] * 0.5 * h);
            full_local[i] = std::exp(symbol_[i] * h);
        }
        Ehalf = &half_local;
        Efull = &full_local;
    }

    const NonlinearEval& e1 = stage1();
    double q1 = 2.0 * (p_.nu * e1.u_halpha_sq + p_.eta * e1.b_hbeta_sq);

    SpectralField Y2 = b_ + (0.5 * h) * e1.term;
    apply_exp_table(Y2, *Ehalf);
    NonlinearEval e2 = evaluate_nonlinear_impl(Y2, p_, walpha_, wbeta_);
    double q2 = 2.0 * (p_.nu * e2.u_halpha_sq + p_.eta * e2.b_hbeta_sq);

    SpectralField Y3 = b_;
    apply_exp_table(Y3, *Ehalf);
    Y3 += (0.5 * h) * e2.term;
    NonlinearEval e3 = evaluate_nonlinear_impl(Y3, p_, walpha_, wbeta_);
    double q3 = 2.0 * (p_.nu * e3.u_halpha_sq + p_.eta * e3.b_hbeta_sq);

    SpectralField Y4 = b_;
    apply_exp_table(Y4, *Efull);
    SpectralField k3h = e3.term;
    apply_exp_table(k3h, *Ehalf);
    Y4 += h * k3h;
    NonlinearEval e4 = evaluate_nonlinear_impl(Y4, p_, walpha_, wbeta_);
    double q4 = 2.0 * (p_.nu * e4.u_halpha_sq + p_.eta * e4.b_hbeta_sq);

    // b_{n+1} = E(h) b_n + (h/6)(E(h) k1 + 2 E(h/2) (k2 + k3) + k4)
    SpectralField acc = e1.term;
    apply_exp_table(acc, *Efull);
    SpectralField mid = e2.term + e3.term;
    apply_exp_table(mid, *Ehalf);
    SpectralField bnew = b_;
    apply_exp_table(bnew, *Efull);
    acc += 2.0 * mid;
    acc += e4.term;
    bnew += (h / 6.0) * acc;

    guard(bnew, e1.u_max);

    b_ = std::move(bnew);
    dissip_ += (h / 6.0) * (q1 + 2.0 * q2 + 2.0 * q3 + q4);
    t_ += h;
    ++step_count_;
    stage1_.reset();
}

DiagnosticRecord StokesMagnetoStepper::make_record() {
    const NonlinearEval& e1 = stage1();
    DiagnosticRecord r;
    r.t = t_;
    r.b_l2_sq = b_.l2_norm_sq();
    r.b_hbeta_sq = e1.b_hbeta_sq;
    r.u_halpha_sq = e1.u_halpha_sq;
    r.u_weak_lorentz = weak_lorentz_of_velocity(e1.velocity, p_.grid.d, p_.alpha);
    double denom = std::max(b0_l2_sq_, 1e-300);
    r.energy_residual = std::abs(r.b_l2_sq + dissip_ - b0_l2_sq_) / denom;
    r.max_div_b = max_divergence(b_);
    r.max_div_u = max_divergence(e1.velocity);
    return r;
}

SimulationResult simulate(const ModelParams& p, const SpectralField& b0) {
    p.validate();
    StokesMagnetoStepper stepper(p, b0);

    SimulationResult result{{}, stepper.state(), {}};
    result.records.push_back(stepper.make_record());
    if (p.snapshot_stride > 0) result.snapshots.emplace_back(0.0, stepper.state());

    long nsteps = static_cast<long>(std::ceil(p.t_final / p.dt - 1e-9));
    if (nsteps < 1) nsteps = 1;
    double h_last = p.t_final - (nsteps - 1) * p.dt;

    for (long s = 0; s < nsteps; ++s) {
        stepper.advance(s == nsteps - 1 ? h_last : p.dt);
        result.records.push_back(stepper.make_record());
        if (p.snapshot_stride > 0 && ((s + 1) % p.snapshot_stride == 0 || s == nsteps - 1))
            result.snapshots.emplace_back(stepper.time(), stepper.state());
    }
    result.b_final = stepper.state();
    return result;
}

HeatResult heat_solve(const ModelParams& p, const SpectralField& b0,
                      const std::optional<SpectralField>& u_frozen,
                      const std::optional<SpectralField>& forcing) {
    p.validate();
    const GridSpec& g = p.grid;
    const int d = g.d;

    SpectralField b = fourier_truncate(b0, p.trunc);
    const double b0_l2_sq = b.l2_norm_sq();

    std::optional<std::vector<double>> us;
    double u_halpha_sq = 0.0, u_lorentz = 0.0, u_maxdiv = 0.0;
    if (u_frozen) {
        double scale = u_frozen->l2_norm();
        if (max_divergence(*u_frozen) > 1e-10 * std::max(scale, 1e-300))
            throw std::invalid_argument("heat_solve: frozen u must be divergence-free");
        us = inverse_transform_real(*u_frozen);
        u_halpha_sq = std::pow(sobolev_norm(*u_frozen, p.alpha, true), 2);
        u_lorentz = weak_lorentz_of_velocity(*u_frozen, d, p.alpha);
        u_maxdiv = max_divergence(*u_frozen);
    }

    std::optional<SpectralField> F;
    SpectralField divF(g, d, true);
    if (forcing) {
        if (forcing->components() != d * d)
            throw std::invalid_argument("heat_solve: forcing must be a 2-tensor");
        F = fourier_truncate(*forcing, p.trunc);
        divF = tensor_divergence(*F);
    }

    const std::size_t n = g.points();
    auto nonlinear = [&](const SpectralField& state) {
        SpectralField term = divF;  // copy; zero when no forcing
        if (us) {
            std::vector<double> ss = inverse_transform_real(state);
            std::vector<double> prod(static_cast<std::size_t>(d) * d * n);
            for (int j = 0; j < d; ++j)
                for (int k = 0; k < d; ++k) {
                    double* dst = prod.data() + static_cast<std::size_t>(j * d + k) * n;
                    const double* uj = us->data() + static_cast<std::size_t>(j) * n;
                    const double* sk = ss.data() + static_cast<std::size_t>(k) * n;
                    for (std::size_t i = 0; i < n; ++i) dst[i] = uj[i] * sk[i];
                }
            SpectralField ub = fourier_truncate(forward_transform(prod, g, d * d), p.trunc);
            term -= tensor_divergence(ub);
        }
        return term;
    };
    // dissipation + forcing-work density for the heat energy identity
    auto qrate = [&](const SpectralField& state) {
        double q = 2.0 * p.eta * std::pow(sobolev_norm(state, p.beta, true), 2);
        if (F) q += 2.0 * l2_inner(*F, vector_gradient(state));
        return q;
    };

    std::vector<double> symbol = diffusion_symbol(g, p.eta, p.beta);
    HeatResult result;
    result.gamma_exponent = (p.beta > 0.5) ? 2.0 * p.beta / (2.0 * p.beta - 1.0)
                                           : std::numeric_limits<double>::infinity();

    double t = 0.0, accum = 0.0;
    auto record = [&]() {
        DiagnosticRecord r;
        r.t = t;
        r.b_l2_sq = b.l2_norm_sq();
        r.b_hbeta_sq = std::pow(sobolev_norm(b, p.beta, true), 2);
        r.u_halpha_sq = u_halpha_sq;
        r.u_weak_lorentz = u_lorentz;
        r.energy_residual = std::abs(r.b_l2_sq + accum - b0_l2_sq) / std::max(b0_l2_sq, 1e-300);
        r.max_div_b = max_divergence(b);
        r.max_div_u = u_maxdiv;
        result.records.push_back(r);
    };
    record();

    long nsteps = static_cast<long>(std::ceil(p.t_final / p.dt - 1e-9));
    if (nsteps < 1) nsteps = 1;
    double h_last = p.t_final - (nsteps - 1) * p.dt;

    for (long s = 0; s < nsteps; ++s) {
        double h = (s == nsteps - 1) ? h_last : p.dt;

        SpectralField k1 = nonlinear(b);
        double q1 = qrate(b);
        SpectralField Y2 = b + (0.5 * h) * k1;
        apply_propagator(Y2, symbol, 0.5 * h);
        SpectralField k2 = nonlinear(Y2);
        double q2 = qrate(Y2);
        SpectralField Y3 = b;
        apply_propagator(Y3, symbol, 0.5 * h);
        Y3 += (0.5 * h) * k2;
        SpectralField k3 = nonlinear(Y3);
        double q3 = qrate(Y3);
        SpectralField Y4 = b;
        apply_propagator(Y4, symbol, h);
        SpectralField k3h = k3;
        apply_propagator(k3h, symbol, 0.5 * h);
        Y4 += h * k3h;
        SpectralField k4 = nonlinear(Y4);
        double q4 = qrate(Y4);

        SpectralField acc = k1;
        apply_propagator(acc, symbol, h);
        SpectralField mid = k2 + k3;
        apply_propagator(mid, symbol, 0.5 * h);
        acc += 2.0 * mid;
        acc += k4;
        apply_propagator(b, symbol, h);
        b += (h / 6.0) * acc;

        if (!b.finite()) throw SimulationAbort("heat_solve: non-finite state");
        accum += (h / 6.0) * (q1 + 2.0 * q2 + 2.0 * q3 + q4);
        t += h;
        record();
    }
    result.b_final = b;
    return result;
}

}  // namespace fmhd
