#include "fmhd/fourier_identities.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace fmhd {

namespace {

constexpr double pi = std::numbers::pi;
using cd = std::complex<double>;

double gauss_core(const std::array<double, 3>& x, int d) {
    double r2 = 0.0;
    for (int ax = 0; ax < d; ++ax) r2 += x[ax] * x[ax];
    return std::exp(-pi * r2);
}

// One homogeneous piece of an integrand: coef * P(omega) * r^degree * e^{-pi r^2}.
// Splitting into such pieces keeps every radial factor a single power of r,
// so the quadrature never multiplies an overflowing power by an underflowing
// one near the origin.
struct HomTerm {
    cd coef;
    double degree;
    std::function<double(const std::array<double, 3>&)> poly;  // on the unit sphere
};

std::vector<HomTerm> multiply(const std::vector<HomTerm>& a, const std::vector<HomTerm>& b) {
    std::vector<HomTerm> out;
    for (const auto& ta : a)
        for (const auto& tb : b) {
            HomTerm t;
            t.coef = ta.coef * tb.coef;
            t.degree = ta.degree + tb.degree;
            auto pa = ta.poly;
            auto pb = tb.poly;
            t.poly = [pa, pb](const std::array<double, 3>& w) { return pa(w) * pb(w); };
            out.push_back(std::move(t));
        }
    return out;
}

// integral of P over the unit sphere S^{d-1} (trapezoid in angles, Gauss in
// the polar cosine; exact for the low-degree polynomials that occur here)
double sphere_integral(int d, const std::function<double(const std::array<double, 3>&)>& P) {
    if (d == 2) {
        constexpr int nth = 64;
        double acc = 0.0;
        for (int i = 0; i < nth; ++i) {
            double th = 2.0 * pi * i / nth;
            acc += P({std::cos(th), std::sin(th), 0.0});
        }
        return acc * (2.0 * pi / nth);
    }
    using gauss24 = boost::math::quadrature::gauss<double, 24>;
    const auto& abscissa = gauss24::abscissa();
    const auto& weights = gauss24::weights();
    constexpr int nphi = 64;
    auto ring = [&](double mu) {
        double s = std::sqrt(std::max(0.0, 1.0 - mu * mu));
        double a = 0.0;
        for (int i = 0; i < nphi; ++i) {
            double ph = 2.0 * pi * i / nphi;
            a += P({s * std::cos(ph), s * std::sin(ph), mu});
        }
        return a * (2.0 * pi / nphi);
    };
    double acc = 0.0;
    for (std::size_t i = 0; i < abscissa.size(); ++i) {
        if (abscissa[i] == 0.0)
            acc += weights[i] * ring(0.0);
        else
            acc += weights[i] * (ring(abscissa[i]) + ring(-abscissa[i]));
    }
    return acc;
}

// int_0^inf r^a e^{-pi r^2} dr for a > -1 (tail beyond r = 8 is < 1e-80)
double radial_integral(double a) {
    static boost::math::quadrature::tanh_sinh<double> ts;
    return ts.integrate([a](double r) { return std::pow(r, a) * std::exp(-pi * r * r); }, 0.0,
                        8.0, 1e-12);
}

// full integral over R^d of a term sum (each term coef P(w) r^deg gaussian)
cd integrate_terms(int d, const std::vector<HomTerm>& terms) {
    cd acc{0.0, 0.0};
    for (const auto& t : terms) {
        double a = t.degree + d - 1;
        if (!(a > -1.0))
            throw std::invalid_argument("fourier_identity_check: non-integrable term");
        acc += t.coef * sphere_integral(d, t.poly) * radial_integral(a);
    }
    return acc;
}

std::vector<HomTerm> psi_terms(const TestFn& fn) {
    switch (fn.shape) {
        case TestFnShape::gaussian:
            return {{cd{1.0, 0.0}, 0.0, [](const auto&) { return 1.0; }}};
        case TestFnShape::x_gaussian: {
            int a = fn.a;
            return {{cd{1.0, 0.0}, 1.0, [a](const auto& w) { return w[a]; }}};
        }
        case TestFnShape::xx_gaussian: {
            int a = fn.a, b = fn.b;
            return {{cd{1.0, 0.0}, 2.0, [a, b](const auto& w) { return w[a] * w[b]; }}};
        }
    }
    return {};
}

// terms of psi_check = psi^vee (inverse Fourier transform)
std::vector<HomTerm> psi_check_terms(const TestFn& fn) {
    switch (fn.shape) {
        case TestFnShape::gaussian:
            return {{cd{1.0, 0.0}, 0.0, [](const auto&) { return 1.0; }}};
        case TestFnShape::x_gaussian: {
            int a = fn.a;
            return {{cd{0.0, 1.0}, 1.0, [a](const auto& w) { return w[a]; }}};
        }
        case TestFnShape::xx_gaussian: {
            int a = fn.a, b = fn.b;
            std::vector<HomTerm> t;
            if (a == b)
                t.push_back({cd{1.0 / (2.0 * pi), 0.0}, 0.0, [](const auto&) { return 1.0; }});
            t.push_back({cd{-1.0, 0.0}, 2.0, [a, b](const auto& w) { return w[a] * w[b]; }});
            return t;
        }
    }
    return {};
}

}  // namespace

double TestFn::value(const std::array<double, 3>& x, int d) const {
    double g = gauss_core(x, d);
    switch (shape) {
        case TestFnShape::gaussian: return g;
        case TestFnShape::x_gaussian: return x[a] * g;
        case TestFnShape::xx_gaussian: return x[a] * x[b] * g;
    }
    return 0.0;
}

cd TestFn::check_value(const std::array<double, 3>& xi, int d) const {
    double g = gauss_core(xi, d);
    switch (shape) {
        case TestFnShape::gaussian: return cd{g, 0.0};
        case TestFnShape::x_gaussian: return cd{0.0, xi[a] * g};
        case TestFnShape::xx_gaussian:
            return cd{((a == b ? 1.0 / (2.0 * pi) : 0.0) - xi[a] * xi[b]) * g, 0.0};
    }
    return cd{0.0, 0.0};
}

std::string TestFn::name() const {
    switch (shape) {
        case TestFnShape::gaussian: return "gaussian";
        case TestFnShape::x_gaussian: return "x" + std::to_string(a + 1) + "*gaussian";
        case TestFnShape::xx_gaussian:
            return "x" + std::to_string(a + 1) + "x" + std::to_string(b + 1) + "*gaussian";
    }
    return "?";
}

IdentityCheckResult fourier_identity_check(int part, double lambda, int d, int j, int k, int l,
                                           const TestFn& psi) {
    if (d != 2 && d != 3) throw std::invalid_argument("fourier_identity_check: d must be 2 or 3");
    if (!(part >= 1 && part <= 3)) throw std::invalid_argument("fourier_identity_check: part");
    if (!(lambda > part && lambda < d + part))
        throw std::invalid_argument("fourier_identity_check: lambda outside validity range");
    if (j < 0 || j >= d || k < 0 || k >= d || l < 0 || l >= d)
        throw std::invalid_argument("fourier_identity_check: index out of range");
    if ((psi.a < 0 || psi.a >= d) || (psi.shape == TestFnShape::xx_gaussian && (psi.b < 0 || psi.b >= d)))
        throw std::invalid_argument("fourier_identity_check: test-function axis out of range");

    IdentityCheckResult res;
    res.part = part;
    res.lambda = lambda;
    res.j = j;
    res.k = k;
    res.l = l;
    res.test_fn = psi.name();

    const cd mi2pi{0.0, -2.0 * pi};
    std::vector<HomTerm> freq_kernel, space_kernel;
    double gamma_factor = 0.0;

    if (part == 1) {
        freq_kernel = {{mi2pi, 1.0 - lambda, [j](const auto& w) { return w[j]; }}};
        gamma_factor = 2.0 * std::tgamma(0.5 * (d + 2.0 - lambda)) /
                       (std::tgamma(0.5 * lambda) * std::pow(pi, 0.5 * d - lambda));
        space_kernel = {{cd{1.0, 0.0}, lambda - d - 1.0, [j](const auto& w) { return w[j]; }}};
    } else if (part == 2) {
        freq_kernel = {{mi2pi * mi2pi, 2.0 - lambda,
                        [j, k](const auto& w) { return w[j] * w[k]; }}};
        gamma_factor = 2.0 * std::tgamma(0.5 * (d + 2.0 - lambda)) /
                       (std::tgamma(0.5 * lambda) * std::pow(pi, 0.5 * d - lambda));
        double c1 = d + 2.0 - lambda;
        space_kernel = {{cd{c1, 0.0}, lambda - d - 2.0,
                         [j, k](const auto& w) { return w[j] * w[k]; }}};
        if (j == k)
            space_kernel.push_back(
                {cd{-1.0, 0.0}, lambda - d - 2.0, [](const auto&) { return 1.0; }});
    } else {
        freq_kernel = {{mi2pi * mi2pi * mi2pi, 3.0 - lambda,
                        [j, k, l](const auto& w) { return w[j] * w[k] * w[l]; }}};
        gamma_factor = 4.0 * std::tgamma(0.5 * (d + 4.0 - lambda)) /
                       (std::tgamma(0.5 * lambda) * std::pow(pi, 0.5 * d - lambda));
        // -D_l(x_j x_k / |x|^m) - delta_jk x_l / |x|^m  with m = d + 4 - lambda
        double m = d + 4.0 - lambda;
        double deg = 1.0 - m;  // common homogeneity of all four pieces
        if (l == j)
            space_kernel.push_back({cd{-1.0, 0.0}, deg, [k](const auto& w) { return w[k]; }});
        if (l == k)
            space_kernel.push_back({cd{-1.0, 0.0}, deg, [j](const auto& w) { return w[j]; }});
        space_kernel.push_back(
            {cd{m, 0.0}, deg, [j, k, l](const auto& w) { return w[j] * w[k] * w[l]; }});
        if (j == k)
            space_kernel.push_back({cd{-1.0, 0.0}, deg, [l](const auto& w) { return w[l]; }});
    }

    res.frequency_side = integrate_terms(d, multiply(freq_kernel, psi_check_terms(psi)));
    res.space_side = gamma_factor * integrate_terms(d, multiply(space_kernel, psi_terms(psi)));

    double mag = std::max(std::abs(res.frequency_side), std::abs(res.space_side));
    double diff = std::abs(res.frequency_side - res.space_side);
    res.rel_discrepancy = (mag > 1e-8) ? diff / mag : diff;
    return res;
}

}  // namespace fmhd
