#include "fmhd/snapshot.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace fmhd {

namespace {
constexpr char kMagic[4] = {'F', 'M', 'H', 'D'};
constexpr std::uint32_t kVersion = 1;

void put_u32(std::ostream& os, std::uint32_t v) {
    char b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    os.write(b, 4);
}
std::uint32_t get_u32(std::istream& is) {
    unsigned char b[4];
    is.read(reinterpret_cast<char*>(b), 4);
    return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
           (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}
void put_f64(std::ostream& os, double v) {
    std::uint64_t u;
    std::memcpy(&u, &v, 8);
    char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((u >> (8 * i)) & 0xff);
    os.write(b, 8);
}
double get_f64(std::istream& is) {
    unsigned char b[8];
    is.read(reinterpret_cast<char*>(b), 8);
    std::uint64_t u = 0;
    for (int i = 0; i < 8; ++i) u |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    double v;
    std::memcpy(&v, &u, 8);
    return v;
}
}  // namespace

void write_snapshot(const std::string& path, const SpectralField& f) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("write_snapshot: cannot open " + path);
    os.write(kMagic, 4);
    put_u32(os, kVersion);
    put_u32(os, static_cast<std::uint32_t>(f.grid().d));
    put_u32(os, static_cast<std::uint32_t>(f.grid().M));
    put_f64(os, f.grid().L);
    put_u32(os, static_cast<std::uint32_t>(f.components()));
    put_u32(os, f.real_valued() ? 1u : 0u);
    for (const auto& v : f.raw()) {
        put_f64(os, v.real());
        put_f64(os, v.imag());
    }
    if (!os) throw std::runtime_error("write_snapshot: write failed for " + path);
}

SpectralField read_snapshot(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("read_snapshot: cannot open " + path);
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, kMagic, 4) != 0)
        throw std::runtime_error("read_snapshot: bad magic in " + path);
    std::uint32_t version = get_u32(is);
    if (version != kVersion)
        throw std::runtime_error("read_snapshot: unsupported version in " + path);
    GridSpec grid;
    grid.d = static_cast<int>(get_u32(is));
    grid.M = static_cast<int>(get_u32(is));
    grid.L = get_f64(is);
    std::uint32_t comps = get_u32(is);
    std::uint32_t real_flag = get_u32(is);
    grid.validate();

    SpectralField f(grid, static_cast<int>(comps), real_flag != 0);
    for (auto& v : f.raw()) {
        double re = get_f64(is);
        double im = get_f64(is);
        v = complexd(re, im);
    }
    if (!is) throw std::runtime_error("read_snapshot: truncated file " + path);
    return f;
}

}  // namespace fmhd
