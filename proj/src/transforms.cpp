#include "fmhd/transforms.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace fmhd {

namespace {

// Shared read-only FFTW plans, one per (d, M, sign). Plans are created with
// FFTW_UNALIGNED so they can execute on any caller buffer via
// fftw_execute_dft, which is thread-safe for a fixed plan.
class PlanCache {
  public:
    static PlanCache& instance() {
        static PlanCache cache;
        return cache;
    }

    fftw_plan get(int d, int M, int sign) {
        std::lock_guard<std::mutex> lock(mu_);
        auto key = std::make_tuple(d, M, sign);
        auto it = plans_.find(key);
        if (it != plans_.end()) return it->second;

        std::size_t n = 1;
        for (int i = 0; i < d; ++i) n *= static_cast<std::size_t>(M);
        std::vector<complexd> buf(n);
        int dims[3] = {M, M, M};
        fftw_plan p = fftw_plan_dft(d, dims, reinterpret_cast<fftw_complex*>(buf.data()),
                                    reinterpret_cast<fftw_complex*>(buf.data()), sign,
                                    FFTW_ESTIMATE | FFTW_UNALIGNED);
        if (!p) throw std::runtime_error("FFTW plan creation failed");
        plans_[key] = p;
        return p;
    }

  private:
    PlanCache() = default;
    std::mutex mu_;
    std::map<std::tuple<int, int, int>, fftw_plan> plans_;
};

void execute(fftw_plan p, complexd* in, complexd* out) {
    fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(in),
                     reinterpret_cast<fftw_complex*>(out));
}

}  // namespace

SpectralField forward_transform(const std::vector<double>& samples, const GridSpec& grid,
                                int components) {
    grid.validate();
    const std::size_t n = grid.points();
    if (samples.size() != n * static_cast<std::size_t>(components))
        throw std::invalid_argument("forward_transform: sample count does not match grid");

    SpectralField out(grid, components, /*real_valued=*/true);
    fftw_plan plan = PlanCache::instance().get(grid.d, grid.M, FFTW_FORWARD);
    const double scale = 1.0 / static_cast<double>(n);

    std::vector<complexd> buf(n);
    for (int c = 0; c < components; ++c) {
        for (std::size_t i = 0; i < n; ++i)
            buf[i] = complexd(samples[static_cast<std::size_t>(c) * n + i], 0.0);
        execute(plan, buf.data(), out.component(c));
        for (std::size_t i = 0; i < n; ++i) out.at(c, i) *= scale;
    }
    return out;
}

std::vector<complexd> inverse_transform(const SpectralField& f) {
    const std::size_t n = f.points();
    std::vector<complexd> out(n * static_cast<std::size_t>(f.components()));
    fftw_plan plan = PlanCache::instance().get(f.grid().d, f.grid().M, FFTW_BACKWARD);

    std::vector<complexd> buf(n);
    for (int c = 0; c < f.components(); ++c) {
        for (std::size_t i = 0; i < n; ++i) buf[i] = f.at(c, i);
        execute(plan, buf.data(), out.data() + static_cast<std::size_t>(c) * n);
    }
    return out;
}

std::vector<double> inverse_transform_real(const SpectralField& f) {
    std::vector<complexd> z = inverse_transform(f);
    double scale = 0.0, imag = 0.0;
    for (const auto& v : z) {
        scale = std::max(scale, std::abs(v));
        imag = std::max(imag, std::abs(v.imag()));
    }
    if (scale > 0.0 && imag > 1e-10 * scale)
        throw std::runtime_error("inverse_transform_real: field is not real-valued");
    std::vector<double> out(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) out[i] = z[i].real();
    return out;
}

}  // namespace fmhd
