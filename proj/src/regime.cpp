#include "fmhd/regime.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fmhd {

RegimeReport classify_regime(int d, double alpha, double beta) {
    if (d < 2) throw std::invalid_argument("classify_regime: d >= 2 required");
    if (!(alpha > 0.0) || !(beta > 0.0))
        throw std::invalid_argument("classify_regime: alpha, beta must be positive");

    RegimeReport r;
    r.d = d;
    r.alpha = alpha;
    r.beta = beta;
    r.min_combination = std::min(alpha + beta, 2.0 * alpha + beta - 1.0);
    r.existence_margin = r.min_combination - 0.5 * d;
    r.uniqueness_margin = r.min_combination - (0.5 * d + 1.0);
    r.alpha_lower_margin = alpha - 0.5;
    r.alpha_upper_margin = 0.5 * (d + 1) - alpha;
    r.beta_uniqueness_margin = beta - 1.0;

    bool alpha_range = (r.alpha_lower_margin > 0.0) && (r.alpha_upper_margin > 0.0);
    r.existence = alpha_range && (r.existence_margin > 0.0);
    r.uniqueness = alpha_range && (beta >= 1.0) && (r.uniqueness_margin >= 0.0);
    // non-strict uniqueness threshold exceeds the strict existence one, so
    // uniqueness implies existence; keep that visible as a hard invariant
    if (r.uniqueness && !r.existence)
        throw std::logic_error("classify_regime: uniqueness without existence");

    std::string cases;
    if (alpha == 1.0 && beta > 0.5 * d - 1.0) cases += 'a';
    if (beta == 1.0 && alpha > std::max({0.5, 0.5 * d - 1.0, 0.25 * d}) &&
        alpha < 0.5 * (d + 1))
        cases += 'b';
    if (d <= 4 && alpha == beta && alpha > (d + 2.0) / 6.0 && alpha < 0.5 * (d + 1)) cases += 'c';
    r.remark_cases = cases.empty() ? "none" : cases;
    return r;
}

ExponentSelection exponent_search(int d, double alpha, double beta, double mu) {
    if (!(alpha > 0.5 && alpha < 0.5 * (d + 1)))
        throw std::invalid_argument("exponent_search: need 1/2 < alpha < (d+1)/2");
    if (!(beta > 0.0)) throw std::invalid_argument("exponent_search: need beta > 0");
    if (!(alpha + beta > 0.5 * d))
        throw std::invalid_argument("exponent_search: need alpha + beta > d/2");
    if (!(mu >= 0.0 && mu <= 1.0)) throw std::invalid_argument("exponent_search: mu in [0,1]");
    if (mu > 0.0 && !(alpha + (1.0 - mu) * beta >= 0.5 * d + 1.0))
        throw std::invalid_argument(
            "exponent_search: mu > 0 requires alpha + (1-mu) beta >= d/2 + 1");

    double lower = std::max({2.0, d / beta, d / (d + 1.0 - 2.0 * alpha)});
    double p;
    if (alpha >= 0.5 * d) {
        p = 2.0 * lower;  // unbounded feasible interval
    } else {
        double upper = d / (0.5 * d - alpha);
        p = 0.5 * (lower + upper);
    }

    ExponentSelection sel;
    sel.d = d;
    sel.alpha = alpha;
    sel.beta = beta;
    sel.mu = mu;
    sel.p = p;
    sel.theta1 = (d + 1.0 - 2.0 * alpha - d / p) / (0.5 * d + 1.0 - alpha);
    sel.theta2 = d / (p * beta);
    sel.constraint_slack = 2.0 - ((1.0 + mu) * sel.theta1 + sel.theta2 + 1.0 / beta);
    return sel;
}

double exponent_selection_defect(const ExponentSelection& s) {
    double worst = 0.0;
    auto require_pos = [&worst](double v) { worst = std::max(worst, -v); };
    // 2 < p < infinity and the three defining inequalities
    require_pos(s.p - 2.0);
    require_pos(s.alpha - (0.5 * s.d - s.d / s.p));
    require_pos((0.5 * (s.d + 1) - 0.5 * s.d / s.p) - s.alpha);
    require_pos(s.beta - s.d / s.p);
    // 0 < theta_i < 1
    require_pos(s.theta1);
    require_pos(1.0 - s.theta1);
    require_pos(s.theta2);
    require_pos(1.0 - s.theta2);
    // beta theta2 = d/p = (1-theta1)(d+1-2 alpha) + theta1 (d/2 - alpha)
    double dp = s.d / s.p;
    worst = std::max(worst, std::abs(s.beta * s.theta2 - dp));
    worst = std::max(worst, std::abs((1.0 - s.theta1) * (s.d + 1.0 - 2.0 * s.alpha) +
                                     s.theta1 * (0.5 * s.d - s.alpha) - dp));
    return worst;
}

}  // namespace fmhd
