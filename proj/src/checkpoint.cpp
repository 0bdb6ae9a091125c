#include "mgs/checkpoint.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace mgs {

static_assert(std::endian::native == std::endian::little,
              "checkpoint layout assumes a little-endian host");

namespace {

constexpr char kMagic[4] = {'M', 'G', 'S', 'P'};
constexpr std::uint32_t kVersion = 1;

template <class T>
void put(std::ofstream& os, const T& v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <class T>
T get(std::ifstream& is) {
    T v{};
    is.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!is) throw std::runtime_error("checkpoint: truncated file");
    return v;
}

} // namespace

void write_checkpoint(const std::string& path, const Checkpoint& cp) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("checkpoint: cannot open '" + path + "' for writing");
    os.write(kMagic, 4);
    put(os, kVersion);
    put(os, std::uint32_t(cp.theta.grid.n1));
    put(os, std::uint32_t(cp.theta.grid.n2));
    put(os, std::uint32_t(cp.theta.grid.n3));
    put(os, cp.time);
    const double pvals[6] = {cp.params.n_squared,  cp.params.eps_nu,
                             cp.params.eps_kappa,  cp.params.damping_c,
                             cp.params.amplitude_A, double(cp.params.forcing_m)};
    os.write(reinterpret_cast<const char*>(pvals), sizeof pvals);
    os.write(reinterpret_cast<const char*>(cp.theta.coeffs.data()),
             std::streamsize(cp.theta.coeffs.size() * sizeof(std::complex<double>)));
    if (!os) throw std::runtime_error("checkpoint: write failed on '" + path + "'");
}

Checkpoint read_checkpoint(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("checkpoint: cannot open '" + path + "'");
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, kMagic, 4) != 0)
        throw std::runtime_error("checkpoint: bad magic in '" + path + "'");
    auto version = get<std::uint32_t>(is);
    if (version != kVersion)
        throw std::runtime_error("checkpoint: unsupported version " + std::to_string(version));
    Checkpoint cp;
    int n1 = int(get<std::uint32_t>(is));
    int n2 = int(get<std::uint32_t>(is));
    int n3 = int(get<std::uint32_t>(is));
    cp.time = get<double>(is);
    double pvals[6];
    is.read(reinterpret_cast<char*>(pvals), sizeof pvals);
    if (!is) throw std::runtime_error("checkpoint: truncated header in '" + path + "'");
    cp.params.n_squared = pvals[0];
    cp.params.eps_nu = pvals[1];
    cp.params.eps_kappa = pvals[2];
    cp.params.damping_c = pvals[3];
    cp.params.amplitude_A = pvals[4];
    cp.params.forcing_m = int(pvals[5]);

    Grid grid(n1, n2, n3);
    cp.theta = SpectralScalar(grid);
    is.read(reinterpret_cast<char*>(cp.theta.coeffs.data()),
            std::streamsize(cp.theta.coeffs.size() * sizeof(std::complex<double>)));
    if (!is) throw std::runtime_error("checkpoint: payload length mismatch in '" + path + "'");
    char extra;
    if (is.read(&extra, 1))
        throw std::runtime_error("checkpoint: trailing bytes in '" + path + "'");
    return cp;
}

} // namespace mgs
