#pragma once

#include <cstdint>
#include <random>

#include "fmhd/field.hpp"
#include "fmhd/grid.hpp"

namespace fmhd {

/// Seeded RNG with a Box-Muller normal, deterministic across platforms
/// (std::normal_distribution is implementation-defined).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform() {  // in [0, 1)
        return (eng_() >> 11) * (1.0 / 9007199254740992.0);
    }
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        while (u1 <= 0.0) u1 = uniform();
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }
    std::uint64_t raw() { return eng_(); }

  private:
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

/// Random real-valued band-limited field with power-law spectrum |k|^-sigma,
/// Gaussian coefficients, Hermitian-paired, zero mean. Modes are retained for
/// 0 < |k| <= kmax (Euclidean).
SpectralField random_real_field(const GridSpec& grid, int components, int kmax, double sigma,
                                Rng& rng);

/// As above, then Leray-projected (divergence-free).
SpectralField random_divfree_field(const GridSpec& grid, int kmax, double sigma, Rng& rng);

}  // namespace fmhd
