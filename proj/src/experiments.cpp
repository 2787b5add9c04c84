#include "fmhd/experiments.hpp"

#include <cmath>
#include <stdexcept>

#include "fmhd/operators.hpp"
#include "fmhd/random_fields.hpp"
#include "fmhd/regime.hpp"

namespace fmhd {

ConvergenceReport convergence_study(const ModelParams& base, const std::vector<double>& r_list,
                                    const SpectralField& b0) {
    if (r_list.empty()) throw std::invalid_argument("convergence_study: empty R list");
    for (std::size_t i = 1; i < r_list.size(); ++i)
        if (!(r_list[i] > r_list[i - 1]))
            throw std::invalid_argument("convergence_study: R list must be increasing");
    {
        ModelParams widest = base;
        widest.trunc.R = 2.0 * r_list.back();
        widest.validate();  // alias-exactness for the largest cutoff
    }

    ConvergenceReport rep;
    rep.r_values = r_list;
    long nsteps = static_cast<long>(std::ceil(base.t_final / base.dt - 1e-9));

    for (double R : r_list) {
        ModelParams lo = base;
        lo.trunc.R = R;
        ModelParams hi = base;
        hi.trunc.R = 2.0 * R;
        StokesMagnetoStepper slo(lo, b0);
        StokesMagnetoStepper shi(hi, b0);

        double acc = 0.0;
        for (long s = 0; s < nsteps; ++s) {
            double h = (s == nsteps - 1) ? base.t_final - (nsteps - 1) * base.dt : base.dt;
            slo.advance(h);
            shi.advance(h);
            acc += (shi.state() - slo.state()).l2_norm_sq() * h;
        }
        rep.errors.push_back(std::sqrt(acc));
    }

    rep.strictly_decreasing = true;
    for (std::size_t i = 1; i < rep.errors.size(); ++i)
        if (!(rep.errors[i] < rep.errors[i - 1])) rep.strictly_decreasing = false;
    return rep;
}

StabilityReport stability_experiment(const ModelParams& params, const SpectralField& b0,
                                     double delta, std::uint64_t perturbation_seed) {
    params.validate();
    StabilityReport rep;
    rep.delta = delta;
    rep.in_uniqueness_regime =
        classify_regime(params.grid.d, params.alpha, params.beta).uniqueness;
    rep.lambda_exponent = (params.grid.d + 2.0 - 2.0 * params.alpha) / (4.0 * params.beta);
    rep.mu_exponent = std::max(0.0, (1.0 - params.alpha) / params.beta);

    Rng rng(perturbation_seed);
    SpectralField pert = random_divfree_field(params.grid, params.trunc.k_max(params.grid),
                                              1.0, rng);
    pert = fourier_truncate(pert, params.trunc);
    double pn = pert.l2_norm();
    if (pn == 0.0) throw std::invalid_argument("stability_experiment: degenerate perturbation");
    pert *= 1.0 / pn;

    SpectralField b0_pert = b0 + delta * pert;
    StokesMagnetoStepper s1(params, b0);
    StokesMagnetoStepper s2(params, b0_pert);

    auto phi_value = [&](StokesMagnetoStepper& a, StokesMagnetoStepper& b) {
        DiagnosticRecord ra = a.make_record();
        DiagnosticRecord rb = b.make_record();
        return 1.0 + ra.u_halpha_sq + rb.u_halpha_sq + ra.b_hbeta_sq + rb.b_hbeta_sq;
    };

    long nsteps = static_cast<long>(std::ceil(params.t_final / params.dt - 1e-9));
    double phi_prev = phi_value(s1, s2);
    double Phi = 0.0;
    rep.times.push_back(0.0);
    rep.D.push_back((s2.state() - s1.state()).l2_norm_sq());
    rep.Phi.push_back(0.0);

    for (long s = 0; s < nsteps; ++s) {
        double h = (s == nsteps - 1) ? params.t_final - (nsteps - 1) * params.dt : params.dt;
        s1.advance(h);
        s2.advance(h);
        double phi_now = phi_value(s1, s2);
        Phi += 0.5 * h * (phi_prev + phi_now);  // trapezoid
        phi_prev = phi_now;
        rep.times.push_back(s1.time());
        rep.D.push_back((s2.state() - s1.state()).l2_norm_sq());
        rep.Phi.push_back(Phi);
    }

    const double D0 = rep.D.front();
    rep.final_D = rep.D.back();
    if (D0 > 0.0) {
        double C = 0.0;
        for (std::size_t i = 1; i < rep.D.size(); ++i)
            if (rep.D[i] > 0.0 && rep.Phi[i] > 0.0)
                C = std::max(C, (std::log(rep.D[i]) - std::log(D0)) / rep.Phi[i]);
        rep.fitted_C = C;
        double sup = 0.0;
        for (std::size_t i = 0; i < rep.D.size(); ++i)
            sup = std::max(sup, rep.D[i] / (D0 * std::exp(C * rep.Phi[i])));
        rep.envelope_sup = sup;
    }
    return rep;
}

}  // namespace fmhd
