#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "fmhd/grid.hpp"

namespace fmhd {

using complexd = std::complex<double>;

/// A scalar/vector/tensor field stored as Fourier coefficients.
///
/// Component count: 1 (scalar), d (vector), d*d (2-tensor, row-major, so the
/// (j,k) entry of a tensor T lives in component j*d + k).
///
/// If real_valued is set, coefficients satisfy Hermitian symmetry
/// c(-k) = conj(c(k)); every multiplier m with m(-k) = conj(m(k)) preserves it.
class SpectralField {
  public:
    SpectralField() = default;

    SpectralField(GridSpec grid, int components, bool real_valued = true)
        : grid_(grid), comps_(components), real_(real_valued),
          data_(static_cast<std::size_t>(components) * grid.points(), complexd{0.0, 0.0}) {
        grid.validate();
        if (components < 1) throw std::invalid_argument("SpectralField: components < 1");
    }

    const GridSpec& grid() const { return grid_; }
    int components() const { return comps_; }
    bool real_valued() const { return real_; }
    void set_real_valued(bool v) { real_ = v; }
    std::size_t points() const { return grid_.points(); }

    complexd& at(int c, std::size_t flat) { return data_[offset(c) + flat]; }
    const complexd& at(int c, std::size_t flat) const { return data_[offset(c) + flat]; }

    complexd& at_freq(int c, const std::array<int, 3>& k) {
        return data_[offset(c) + grid_.flat_of_freqs(k)];
    }
    const complexd& at_freq(int c, const std::array<int, 3>& k) const {
        return data_[offset(c) + grid_.flat_of_freqs(k)];
    }

    complexd* component(int c) { return data_.data() + offset(c); }
    const complexd* component(int c) const { return data_.data() + offset(c); }

    std::vector<complexd>& raw() { return data_; }
    const std::vector<complexd>& raw() const { return data_; }

    SpectralField& operator+=(const SpectralField& o) {
        check_compatible(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        real_ = real_ && o.real_;
        return *this;
    }
    SpectralField& operator-=(const SpectralField& o) {
        check_compatible(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        real_ = real_ && o.real_;
        return *this;
    }
    SpectralField& operator*=(double s) {
        for (auto& v : data_) v *= s;
        return *this;
    }

    friend SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
    friend SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
    friend SpectralField operator*(double s, SpectralField a) { return a *= s; }

    /// L2 norm squared over the torus: ||f||_2^2 = L^d * sum_k |c_k|^2
    /// (Plancherel for the series convention), summed over components.
    double l2_norm_sq() const {
        double s = 0.0;
        for (const auto& v : data_) s += std::norm(v);
        return s * grid_.volume();
    }
    double l2_norm() const { return std::sqrt(l2_norm_sq()); }

    /// Max relative Hermitian-symmetry defect, 0 for exactly symmetric fields.
    double hermitian_defect() const {
        double scale = 0.0;
        for (const auto& v : data_) scale = std::max(scale, std::abs(v));
        if (scale == 0.0) return 0.0;
        double worst = 0.0;
        const std::size_t n = grid_.points();
        for (int c = 0; c < comps_; ++c) {
            for (std::size_t f = 0; f < n; ++f) {
                auto k = grid_.freqs(f);
                std::array<int, 3> mk{0, 0, 0};
                for (int ax = 0; ax < grid_.d; ++ax) {
                    int neg = -k[ax];
                    if (neg == grid_.M / 2) neg = -grid_.M / 2;  // Nyquist is self-paired
                    mk[ax] = neg;
                }
                complexd diff = at(c, f) - std::conj(at_freq(c, mk));
                worst = std::max(worst, std::abs(diff));
            }
        }
        return worst / scale;
    }

    bool finite() const {
        for (const auto& v : data_)
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
        return true;
    }

  private:
    std::size_t offset(int c) const { return static_cast<std::size_t>(c) * grid_.points(); }
    void check_compatible(const SpectralField& o) const {
        if (!(grid_ == o.grid_) || comps_ != o.comps_)
            throw std::invalid_argument("SpectralField: incompatible operands");
    }

    GridSpec grid_;
    int comps_ = 0;
    bool real_ = true;
    std::vector<complexd> data_;
};

/// Spectral inner product <f, g> = integral of f.g over the torus
/// (components contracted; for real fields this is the L2 pairing).
inline double l2_inner(const SpectralField& f, const SpectralField& g) {
    if (!(f.grid() == g.grid()) || f.components() != g.components())
        throw std::invalid_argument("l2_inner: incompatible fields");
    double s = 0.0;
    for (std::size_t i = 0; i < f.raw().size(); ++i)
        s += (f.raw()[i] * std::conj(g.raw()[i])).real();
    return s * f.grid().volume();
}

}  // namespace fmhd
