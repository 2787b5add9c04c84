#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace fmhd {

/// Periodic computational domain [0, L)^d sampled on a uniform M^d grid.
///
/// Fourier convention: f(x) = sum_k c_k exp(2*pi*i k.x / L) with integer
/// frequencies k in [-M/2, M/2)^d. The continuous frequency of mode k is
/// xi = k / L, so multipliers written in terms of xi use 2*pi*|k|/L.
struct GridSpec {
    int d = 2;       // spatial dimension (2 or 3)
    int M = 0;       // modes per axis, even, >= 4
    double L = 1.0;  // period, same along every axis

    void validate() const {
        if (d != 2 && d != 3)
            throw std::invalid_argument("GridSpec: dimension must be 2 or 3");
        if (M < 4 || M % 2 != 0)
            throw std::invalid_argument("GridSpec: M must be even and >= 4");
        if (!(L > 0.0))
            throw std::invalid_argument("GridSpec: period L must be positive");
    }

    std::size_t points() const {
        std::size_t n = 1;
        for (int i = 0; i < d; ++i) n *= static_cast<std::size_t>(M);
        return n;
    }

    double dx() const { return L / M; }
    double cell_volume() const {
        double v = 1.0;
        for (int i = 0; i < d; ++i) v *= dx();
        return v;
    }
    double volume() const {
        double v = 1.0;
        for (int i = 0; i < d; ++i) v *= L;
        return v;
    }

    /// Signed integer frequency stored at array position m along one axis.
    int freq_of_index(int m) const { return (m <= M / 2 - 1) ? m : m - M; }
    /// Array position of signed frequency k (k in [-M/2, M/2)).
    int index_of_freq(int k) const { return (k >= 0) ? k : k + M; }

    /// Decode a flat (row-major) grid index into signed frequencies.
    std::array<int, 3> freqs(std::size_t flat) const {
        std::array<int, 3> k{0, 0, 0};
        for (int ax = d - 1; ax >= 0; --ax) {
            int m = static_cast<int>(flat % static_cast<std::size_t>(M));
            flat /= static_cast<std::size_t>(M);
            k[ax] = freq_of_index(m);
        }
        return k;
    }

    std::size_t flat_of_freqs(const std::array<int, 3>& k) const {
        std::size_t flat = 0;
        for (int ax = 0; ax < d; ++ax)
            flat = flat * static_cast<std::size_t>(M) +
                   static_cast<std::size_t>(index_of_freq(k[ax]));
        return flat;
    }

    bool operator==(const GridSpec& o) const {
        return d == o.d && M == o.M && L == o.L;
    }
};

/// Sharp Fourier cutoff: retain modes with |k|/L <= R (continuous frequency).
struct TruncationSpec {
    double R = 0.0;

    void validate(const GridSpec& g) const {
        if (!(R > 0.0))
            throw std::invalid_argument("TruncationSpec: cutoff R must be positive");
        if (R * g.L < 1.0)
            throw std::invalid_argument("TruncationSpec: retained mode set K_R is empty");
    }

    /// Largest per-axis integer frequency inside the cutoff ball.
    int k_max(const GridSpec& g) const {
        int k = static_cast<int>(R * g.L + 1e-12);
        int nyq = g.M / 2;  // index -M/2 exists, +M/2 does not
        return (k < nyq) ? k : nyq;
    }

    bool retains(const GridSpec& g, const std::array<int, 3>& k) const {
        double s = 0.0;
        for (int ax = 0; ax < g.d; ++ax) s += static_cast<double>(k[ax]) * k[ax];
        // compare |k|^2 <= (R L)^2 with a tolerance so R = K/L retains |k| = K
        double rl = R * g.L;
        return s <= rl * rl * (1.0 + 1e-12);
    }

    /// Alias-exactness condition M >= 3 K_max + 1: a pseudo-spectral product of
    /// two fields supported in K_R has exact coefficients on all of K_R.
    bool alias_exact(const GridSpec& g) const { return g.M >= 3 * k_max(g) + 1; }

    void require_alias_exact(const GridSpec& g) const {
        if (!alias_exact(g))
            throw std::invalid_argument(
                "alias-exactness violated: need M >= 3*K_max + 1, have M = " +
                std::to_string(g.M) + ", K_max = " + std::to_string(k_max(g)));
    }
};

}  // namespace fmhd
