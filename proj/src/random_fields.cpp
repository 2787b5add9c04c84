#include "fmhd/random_fields.hpp"

#include <cmath>
#include <stdexcept>

#include "fmhd/operators.hpp"

namespace fmhd {

namespace {
// A mode is canonical if its first nonzero frequency component is positive;
// each Hermitian pair {k, -k} has exactly one canonical member.
bool canonical_mode(const std::array<int, 3>& k, int d) {
    for (int ax = 0; ax < d; ++ax) {
        if (k[ax] > 0) return true;
        if (k[ax] < 0) return false;
    }
    return false;  // zero mode
}
}  // namespace

SpectralField random_real_field(const GridSpec& grid, int components, int kmax, double sigma,
                                Rng& rng) {
    grid.validate();
    if (kmax < 1 || kmax >= grid.M / 2)
        throw std::invalid_argument("random_real_field: need 1 <= kmax < M/2");

    SpectralField f(grid, components, /*real_valued=*/true);
    const std::size_t n = grid.points();
    for (std::size_t flat = 0; flat < n; ++flat) {
        auto k = grid.freqs(flat);
        if (!canonical_mode(k, grid.d)) continue;
        double k2 = 0.0;
        for (int ax = 0; ax < grid.d; ++ax) k2 += static_cast<double>(k[ax]) * k[ax];
        if (k2 > static_cast<double>(kmax) * kmax) continue;

        double amp = std::pow(std::sqrt(k2), -sigma);
        std::array<int, 3> mk{0, 0, 0};
        for (int ax = 0; ax < grid.d; ++ax) mk[ax] = -k[ax];
        for (int c = 0; c < components; ++c) {
            complexd z{rng.normal(), rng.normal()};
            f.at(c, flat) = amp * z;
            f.at_freq(c, mk) = amp * std::conj(z);
        }
    }
    return f;
}

SpectralField random_divfree_field(const GridSpec& grid, int kmax, double sigma, Rng& rng) {
    return leray_project(random_real_field(grid, grid.d, kmax, sigma, rng));
}

}  // namespace fmhd
