#pragma once

#include <string>

namespace fmhd {

/// Theory-regime classification for the fractional Stokes-Magneto system.
///
/// existence:   1/2 < alpha < (d+1)/2, beta > 0, and
///              min{alpha+beta, 2 alpha+beta-1} > d/2     (strict)
/// uniqueness:  existence range plus beta >= 1 and
///              min{alpha+beta, 2 alpha+beta-1} >= d/2+1  (non-strict)
///
/// remark_cases lists which of the three remark hypotheses match:
///   a: alpha = 1, beta > d/2 - 1
///   b: beta = 1,  max{1/2, d/2-1, d/4} < alpha < (d+1)/2
///   c: 2 <= d <= 4, alpha = beta, (d+2)/6 < alpha < (d+1)/2
struct RegimeReport {
    int d = 2;
    double alpha = 1.0;
    double beta = 1.0;
    bool existence = false;
    bool uniqueness = false;
    double min_combination = 0.0;      // min{alpha+beta, 2 alpha+beta-1}
    double existence_margin = 0.0;     // min_combination - d/2
    double uniqueness_margin = 0.0;    // min_combination - (d/2+1)
    double alpha_lower_margin = 0.0;   // alpha - 1/2
    double alpha_upper_margin = 0.0;   // (d+1)/2 - alpha
    double beta_uniqueness_margin = 0.0;  // beta - 1
    std::string remark_cases;          // subset of "abc", or "none"
};

RegimeReport classify_regime(int d, double alpha, double beta);

/// Explicit exponents from the product-estimate construction. Given feasible
/// (d, alpha, beta) there is 2 < p < infinity with
///   d/2 - d/p < alpha < (d+1)/2 - d/(2p)  and  beta > d/p,
/// and the exponents are
///   theta1 = (d+1-2 alpha - d/p) / (d/2 + 1 - alpha),  theta2 = d/(p beta).
/// Selection rule: alpha < d/2 -> midpoint of the feasible p-interval
///   ( max{2, d/beta, d/(d+1-2 alpha)}, d/(d/2 - alpha) );
/// alpha >= d/2 -> the interval is unbounded, p = twice its lower endpoint.
struct ExponentSelection {
    int d = 2;
    double alpha = 1.0, beta = 1.0, mu = 0.0;
    double p = 0.0;
    double theta1 = 0.0, theta2 = 0.0;
    double constraint_slack = 0.0;  // 2 - [(1+mu) theta1 + theta2 + 1/beta]
};

/// Preconditions: 1/2 < alpha < (d+1)/2, beta > 0, alpha + beta > d/2,
/// 0 <= mu <= 1; for mu > 0 the slack guarantee additionally needs
/// alpha + (1-mu) beta >= d/2 + 1. Throws on infeasible parameters.
ExponentSelection exponent_search(int d, double alpha, double beta, double mu);

/// Re-verification of the selection against the defining inequalities,
/// independent of the search path. Returns the worst defect (0 when all hold):
/// the three interval inequalities, 0 < theta_i < 1, and the exact relation
///   beta theta2 = d/p = (1-theta1)(d+1-2 alpha) + theta1 (d/2 - alpha).
double exponent_selection_defect(const ExponentSelection& sel);

}  // namespace fmhd
