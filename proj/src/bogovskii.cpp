#include "fmhd/bogovskii.hpp"
#include <functional>

#include <cmath>
#include <stdexcept>

#include "fmhd/bump.hpp"

namespace fmhd {

void BoxGrid::validate() const {
    if (d != 2 && d != 3) throw std::invalid_argument("BoxGrid: d must be 2 or 3");
    if (!(A > 1.0)) throw std::invalid_argument("BoxGrid: half-width must exceed 1 (supp phi)");
    if (n_cells < 8 || n_cells % 2 != 0)
        throw std::invalid_argument("BoxGrid: n_cells must be even and >= 8");
}

double BoxFunction::max_abs() const {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
}

double BoxFunction::boundary_max_abs() const {
    const int N = grid.nodes();
    double m = 0.0;
    std::size_t total = grid.total_nodes();
    for (std::size_t flat = 0; flat < total; ++flat) {
        std::size_t rem = flat;
        bool boundary = false;
        for (int ax = grid.d - 1; ax >= 0; --ax) {
            int idx = static_cast<int>(rem % static_cast<std::size_t>(N));
            rem /= static_cast<std::size_t>(N);
            if (idx == 0 || idx == N - 1) boundary = true;
        }
        if (boundary) m = std::max(m, std::abs(values[flat]));
    }
    return m;
}

double BumpWeights::phi1d(int axis, double t) const {
    return amplitude[axis] * bump(t) / bump_mass();
}

double BumpWeights::phi(const std::array<double, 3>& x) const {
    double v = 1.0;
    for (int ax = 0; ax < d; ++ax) v *= phi1d(ax, x[ax]);
    return v;
}

namespace {

// Simpson weights on a full axis (n_cells even): h/3 * (1,4,2,...,2,4,1).
double simpson_line(const double* f, int N, std::size_t stride, double h) {
    double s = f[0] + f[static_cast<std::size_t>(N - 1) * stride];
    for (int i = 1; i < N - 1; ++i)
        s += f[static_cast<std::size_t>(i) * stride] * (i % 2 == 1 ? 4.0 : 2.0);
    return s * h / 3.0;
}

// Cumulative Simpson: even nodes by composite Simpson, odd nodes by the
// 4th-order half-panel rule through three points. out[0] = 0.
void cumulative_simpson_line(const double* f, double* out, int N, std::size_t stride, double h) {
    out[0] = 0.0;
    for (int i = 1; i < N; ++i) {
        std::size_t si = static_cast<std::size_t>(i) * stride;
        if (i % 2 == 0) {
            out[si] = out[si - 2 * stride] +
                      h / 3.0 * (f[si - 2 * stride] + 4.0 * f[si - stride] + f[si]);
        } else {
            out[si] = out[si - stride] +
                      h / 12.0 * (5.0 * f[si - stride] + 8.0 * f[si] - f[si + stride]);
        }
    }
}

// Iterate all lines along `axis`, calling fn(base_offset, stride).
template <class F>
void for_each_line(const BoxGrid& g, int axis, F&& fn) {
    const int N = g.nodes();
    std::size_t stride = 1;
    for (int ax = g.d - 1; ax > axis; --ax) stride *= static_cast<std::size_t>(N);

    std::size_t outer = 1;
    for (int ax = 0; ax < g.d; ++ax)
        if (ax != axis) outer *= static_cast<std::size_t>(N);

    // enumerate transverse indices by skipping the `axis` digit
    std::array<int, 3> idx{0, 0, 0};
    for (std::size_t t = 0; t < outer; ++t) {
        std::size_t rem = t;
        for (int ax = g.d - 1; ax >= 0; --ax) {
            if (ax == axis) continue;
            idx[ax] = static_cast<int>(rem % static_cast<std::size_t>(N));
            rem /= static_cast<std::size_t>(N);
        }
        idx[axis] = 0;
        std::size_t base = 0;
        for (int ax = 0; ax < g.d; ++ax)
            base = base * static_cast<std::size_t>(N) + static_cast<std::size_t>(idx[ax]);
        fn(base, stride);
    }
}

// phi_i node values, renormalized to unit Simpson mass on this grid so the
// splitting identities hold at the quadrature level (the correction is
// O(h^4) relative to the continuum normalization).
std::vector<double> weight_nodes(const BoxGrid& g, const BumpWeights& w, int axis) {
    if (std::abs(w.mass(axis) - 1.0) > 1e-10)
        throw std::invalid_argument("split_S: weight mass differs from 1");
    const int N = g.nodes();
    std::vector<double> vals(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i) vals[static_cast<std::size_t>(i)] = w.phi1d(axis, g.coord(i));
    double mass = simpson_line(vals.data(), N, 1, g.h());
    for (auto& v : vals) v /= mass;
    return vals;
}

}  // namespace

double box_integral(const BoxFunction& f) {
    f.grid.validate();
    const int N = f.grid.nodes();
    const double h = f.grid.h();
    if (f.grid.d == 2) {
        std::vector<double> rows(static_cast<std::size_t>(N));
        for (int i = 0; i < N; ++i)
            rows[static_cast<std::size_t>(i)] =
                simpson_line(f.values.data() + static_cast<std::size_t>(i) * N, N, 1, h);
        return simpson_line(rows.data(), N, 1, h);
    }
    std::vector<double> planes(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i) {
        std::vector<double> rows(static_cast<std::size_t>(N));
        for (int j = 0; j < N; ++j)
            rows[static_cast<std::size_t>(j)] = simpson_line(
                f.values.data() + (static_cast<std::size_t>(i) * N + static_cast<std::size_t>(j)) * N,
                N, 1, h);
        planes[static_cast<std::size_t>(i)] = simpson_line(rows.data(), N, 1, h);
    }
    return simpson_line(planes.data(), N, 1, h);
}

BoxFunction antiderivative_T(const BoxFunction& u, int axis, double scale_hint) {
    u.grid.validate();
    if (axis < 0 || axis >= u.grid.d) throw std::invalid_argument("antiderivative_T: bad axis");
    const int N = u.grid.nodes();
    const double h = u.grid.h();

    double scale = std::max({u.max_abs(), scale_hint, 1e-300}) * 2.0 * u.grid.A;
    double worst_line = 0.0;
    for_each_line(u.grid, axis, [&](std::size_t base, std::size_t stride) {
        worst_line = std::max(worst_line,
                              std::abs(simpson_line(u.values.data() + base, N, stride, h)));
    });
    if (worst_line > 1e-10 * scale)
        throw std::invalid_argument(
            "antiderivative_T: line integral residual " + std::to_string(worst_line / scale) +
            " violates the vanishing-line-integral precondition");

    BoxFunction out = BoxFunction::zeros(u.grid);
    for_each_line(u.grid, axis, [&](std::size_t base, std::size_t stride) {
        cumulative_simpson_line(u.values.data() + base, out.values.data() + base, N, stride, h);
    });
    return out;
}

std::vector<BoxFunction> split_S(const BoxFunction& g, const BumpWeights& w) {
    g.grid.validate();
    const int d = g.grid.d;
    if (w.d != d) throw std::invalid_argument("split_S: weight dimension mismatch");
    const int N = g.grid.nodes();
    const double h = g.grid.h();

    std::array<std::vector<double>, 3> phi;
    for (int ax = 0; ax < d; ++ax) phi[ax] = weight_nodes(g.grid, w, ax);

    // g-bar = g - phi * int(g)
    double total = box_integral(g);
    BoxFunction gbar = g;
    {
        std::size_t flat = 0;
        if (d == 2) {
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j, ++flat)
                    gbar.values[flat] -= phi[0][static_cast<std::size_t>(i)] *
                                         phi[1][static_cast<std::size_t>(j)] * total;
        } else {
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j)
                    for (int k = 0; k < N; ++k, ++flat)
                        gbar.values[flat] -= phi[0][static_cast<std::size_t>(i)] *
                                             phi[1][static_cast<std::size_t>(j)] *
                                             phi[2][static_cast<std::size_t>(k)] * total;
        }
    }

    std::vector<BoxFunction> S;
    if (d == 2) {
        // I1(x2) = int gbar(s, x2) ds
        std::vector<double> I1(static_cast<std::size_t>(N));
        for (int j = 0; j < N; ++j)
            I1[static_cast<std::size_t>(j)] = simpson_line(
                gbar.values.data() + j, N, static_cast<std::size_t>(N), h);

        BoxFunction S1 = BoxFunction::zeros(g.grid);
        BoxFunction S2 = BoxFunction::zeros(g.grid);
        std::size_t flat = 0;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j, ++flat) {
                double proj = phi[0][static_cast<std::size_t>(i)] * I1[static_cast<std::size_t>(j)];
                S1.values[flat] = gbar.values[flat] - proj;
                S2.values[flat] = proj;
            }
        S.push_back(std::move(S1));
        S.push_back(std::move(S2));
    } else {
        // I1(x2, x3) = int gbar ds1;  I2(x3) = int I1 ds2
        std::vector<double> I1(static_cast<std::size_t>(N) * N);
        for (int j = 0; j < N; ++j)
            for (int k = 0; k < N; ++k)
                I1[static_cast<std::size_t>(j) * N + k] =
                    simpson_line(gbar.values.data() + static_cast<std::size_t>(j) * N + k, N,
                                 static_cast<std::size_t>(N) * N, h);
        std::vector<double> I2(static_cast<std::size_t>(N));
        for (int k = 0; k < N; ++k)
            I2[static_cast<std::size_t>(k)] =
                simpson_line(I1.data() + k, N, static_cast<std::size_t>(N), h);

        BoxFunction S1 = BoxFunction::zeros(g.grid);
        BoxFunction S2 = BoxFunction::zeros(g.grid);
        BoxFunction S3 = BoxFunction::zeros(g.grid);
        std::size_t flat = 0;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                for (int k = 0; k < N; ++k, ++flat) {
                    double p1 = phi[0][static_cast<std::size_t>(i)];
                    double p2 = phi[1][static_cast<std::size_t>(j)];
                    double i1 = I1[static_cast<std::size_t>(j) * N + k];
                    double i2 = I2[static_cast<std::size_t>(k)];
                    S1.values[flat] = gbar.values[flat] - p1 * i1;
                    S2.values[flat] = p1 * (i1 - p2 * i2);
                    S3.values[flat] = p1 * p2 * i2;
                }
        S.push_back(std::move(S1));
        S.push_back(std::move(S2));
        S.push_back(std::move(S3));
    }
    return S;
}

std::vector<BoxFunction> bogovskii_B(const BoxFunction& g, const BumpWeights& w) {
    std::vector<BoxFunction> S = split_S(g, w);
    double hint = g.max_abs();  // components can be roundoff-small relative to g
    for (const auto& s : S) hint = std::max(hint, s.max_abs());
    std::vector<BoxFunction> B;
    B.reserve(S.size());
    for (int ax = 0; ax < g.grid.d; ++ax) B.push_back(antiderivative_T(S[ax], ax, hint));
    return B;
}

BoxFunction fd_divergence(const std::vector<BoxFunction>& w) {
    if (w.empty()) throw std::invalid_argument("fd_divergence: empty input");
    const BoxGrid& g = w[0].grid;
    if (static_cast<int>(w.size()) != g.d)
        throw std::invalid_argument("fd_divergence: need one component per axis");
    const int N = g.nodes();
    const double h = g.h();

    BoxFunction out = BoxFunction::zeros(g);
    for (int ax = 0; ax < g.d; ++ax) {
        for_each_line(g, ax, [&](std::size_t base, std::size_t stride) {
            const double* f = w[static_cast<std::size_t>(ax)].values.data() + base;
            double* o = out.values.data() + base;
            auto v = [&](int i) { return f[static_cast<std::size_t>(i) * stride]; };
            for (int i = 0; i < N; ++i) {
                double der;
                if (i >= 2 && i <= N - 3) {
                    der = (-v(i + 2) + 8.0 * v(i + 1) - 8.0 * v(i - 1) + v(i - 2)) / (12.0 * h);
                } else if (i < 2) {
                    der = (-25.0 * v(i) + 48.0 * v(i + 1) - 36.0 * v(i + 2) + 16.0 * v(i + 3) -
                           3.0 * v(i + 4)) /
                          (12.0 * h);
                } else {
                    der = (25.0 * v(i) - 48.0 * v(i - 1) + 36.0 * v(i - 2) - 16.0 * v(i - 3) +
                           3.0 * v(i - 4)) /
                          (12.0 * h);
                }
                o[static_cast<std::size_t>(i) * stride] += der;
            }
        });
    }
    return out;
}

std::vector<std::pair<std::string, BoxFunction>> smooth_corpus(const BoxGrid& grid) {
    grid.validate();
    auto r2_of = [&](const std::array<double, 3>& x) {
        double r2 = 0.0;
        for (int ax = 0; ax < grid.d; ++ax) r2 += x[ax] * x[ax];
        return r2;
    };
    auto radial_bump = [](double r2, double radius) {
        double t2 = r2 / (radius * radius);
        return (t2 < 1.0) ? std::exp(-1.0 / (1.0 - t2)) : 0.0;
    };
    using Fn = std::function<double(const std::array<double, 3>&)>;
    std::vector<std::pair<std::string, Fn>> fns = {
        {"radial_bump", [&](const auto& x) { return radial_bump(r2_of(x), 1.5); }},
        {"shifted_bump",
         [&](const auto& x) {
             auto y = x;
             y[0] -= 0.6;
             return radial_bump(r2_of(y), 1.2);
         }},
        {"gaussian", [&](const auto& x) { return std::exp(-r2_of(x) / 0.45); }},
        {"odd_gaussian", [&](const auto& x) { return x[0] * std::exp(-r2_of(x) / 0.45); }},
        {"quadrupole_gaussian",
         [&](const auto& x) { return (x[0] * x[0] - x[1] * x[1]) * std::exp(-r2_of(x) / 0.35); }},
        {"oscillatory_gaussian",
         [&](const auto& x) { return std::cos(3.0 * x[0]) * std::exp(-r2_of(x) / 0.4); }},
        {"dipole",
         [&](const auto& x) {
             auto y = x;
             auto z = x;
             y[1] -= 0.5;
             z[1] += 0.5;
             return std::exp(-r2_of(y) / 0.35) - std::exp(-r2_of(z) / 0.35);
         }},
        {"product_waves",
         [&](const auto& x) {
             return std::sin(2.0 * x[0]) * std::sin(2.0 * x[1]) * std::exp(-r2_of(x) / 0.45);
         }},
        {"tilted_bump", [&](const auto& x) { return (1.0 + x[1]) * radial_bump(r2_of(x), 1.3); }},
        {"narrow_gaussian", [&](const auto& x) { return std::exp(-r2_of(x) / 0.32); }},
    };

    std::vector<std::pair<std::string, BoxFunction>> corpus;
    const int N = grid.nodes();
    for (auto& [name, fn] : fns) {
        BoxFunction f = BoxFunction::zeros(grid);
        std::size_t flat = 0;
        std::array<int, 3> idx{0, 0, 0};
        for (flat = 0; flat < f.values.size(); ++flat) {
            std::size_t rem = flat;
            for (int ax = grid.d - 1; ax >= 0; --ax) {
                idx[ax] = static_cast<int>(rem % static_cast<std::size_t>(N));
                rem /= static_cast<std::size_t>(N);
            }
            std::array<double, 3> x{0.0, 0.0, 0.0};
            for (int ax = 0; ax < grid.d; ++ax) x[ax] = grid.coord(idx[ax]);
            f.values[flat] = fn(x);
        }
        corpus.emplace_back(name, std::move(f));
    }
    return corpus;
}

double seminorm_surrogate(const BoxFunction& f) {
    const BoxGrid& g = f.grid;
    const int N = g.nodes();
    std::vector<double> grad2(f.values.size(), 0.0);
    for (int ax = 0; ax < g.d; ++ax) {
        for_each_line(g, ax, [&](std::size_t base, std::size_t stride) {
            const double* v = f.values.data() + base;
            for (int i = 1; i < N - 1; ++i) {
                double der = (v[static_cast<std::size_t>(i + 1) * stride] -
                              v[static_cast<std::size_t>(i - 1) * stride]) /
                             (2.0 * g.h());
                grad2[base + static_cast<std::size_t>(i) * stride] += der * der;
            }
        });
    }
    double worst = 0.0;
    std::size_t flat = 0;
    std::array<int, 3> idx{0, 0, 0};
    for (flat = 0; flat < f.values.size(); ++flat) {
        std::size_t rem = flat;
        double r2 = 0.0;
        for (int ax = g.d - 1; ax >= 0; --ax) {
            idx[ax] = static_cast<int>(rem % static_cast<std::size_t>(N));
            rem /= static_cast<std::size_t>(N);
        }
        for (int ax = 0; ax < g.d; ++ax) {
            double x = g.coord(idx[ax]);
            r2 += x * x;
        }
        double val = std::abs(f.values[flat]) + std::sqrt(grad2[flat]);
        worst = std::max(worst, (1.0 + r2) * val);
    }
    return worst;
}

}  // namespace fmhd
