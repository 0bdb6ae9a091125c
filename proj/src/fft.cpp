#include "mgs/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace mgs {

namespace {

// One forward/backward plan pair per grid, planned once on aligned scratch
// with FFTW_ESTIMATE (deterministic plan choice keeps runs bit-reproducible).
struct PlanPair {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
};

PlanPair& plans_for(const Grid& grid) {
    static std::map<std::tuple<int, int, int>, PlanPair> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_tuple(grid.n1, grid.n2, grid.n3);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    fftw_complex* a = fftw_alloc_complex(grid.size());
    fftw_complex* b = fftw_alloc_complex(grid.size());
    PlanPair p;
    p.fwd = fftw_plan_dft_3d(grid.n1, grid.n2, grid.n3, a, b, FFTW_FORWARD, FFTW_ESTIMATE);
    p.bwd = fftw_plan_dft_3d(grid.n1, grid.n2, grid.n3, a, b, FFTW_BACKWARD, FFTW_ESTIMATE);
    fftw_free(a);
    fftw_free(b);
    return cache.emplace(key, p).first->second;
}

fftw_complex* as_fftw(const cvec& v) {
    return reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(v.data()));
}

} // namespace

void fft_forward(const Grid& grid, const cvec& in, cvec& out) {
    out.resize(grid.size());
    fftw_execute_dft(plans_for(grid).fwd, as_fftw(in), as_fftw(out));
    const double scale = 1.0 / double(grid.size());
    for (auto& c : out) c *= scale;
}

void fft_backward(const Grid& grid, const cvec& in, cvec& out) {
    out.resize(grid.size());
    fftw_execute_dft(plans_for(grid).bwd, as_fftw(in), as_fftw(out));
}

SpectralScalar to_spectral(const PhysicalScalar& f, bool force_mean_free) {
    if (!f.finite()) throw std::invalid_argument("to_spectral: non-finite samples");
    cvec tmp(f.grid.size());
    for (std::size_t i = 0; i < tmp.size(); ++i) tmp[i] = {f.samples[i], 0.0};
    SpectralScalar out(f.grid, false);
    fft_forward(f.grid, tmp, out.coeffs);
    // Input is real, so the transform is Hermitian up to roundoff; project exactly.
    out.zero_mean = force_mean_free || std::abs(out.coeffs[0]) <= 1e-13;
    out.enforce_hermitian();
    return out;
}

PhysicalScalar to_physical(const SpectralScalar& g) {
    cvec tmp;
    fft_backward(g.grid, g.coeffs, tmp);
    PhysicalScalar out(g.grid);
    for (std::size_t i = 0; i < tmp.size(); ++i) out.samples[i] = tmp[i].real();
    return out;
}

double imag_residue(const SpectralScalar& g) {
    cvec tmp;
    fft_backward(g.grid, g.coeffs, tmp);
    double worst = 0.0;
    for (const auto& c : tmp) worst = std::max(worst, std::abs(c.imag()));
    return worst;
}

bool keep_mode(int k, int n) { return 3 * std::abs(k) <= n; }

void dealias_inplace(SpectralScalar& g) {
    const Grid& grid = g.grid;
    for (int i1 = 0; i1 < grid.n1; ++i1) {
        bool ok1 = keep_mode(Grid::wavenumber(i1, grid.n1), grid.n1);
        for (int i2 = 0; i2 < grid.n2; ++i2) {
            bool ok12 = ok1 && keep_mode(Grid::wavenumber(i2, grid.n2), grid.n2);
            for (int i3 = 0; i3 < grid.n3; ++i3) {
                if (!ok12 || !keep_mode(Grid::wavenumber(i3, grid.n3), grid.n3))
                    g.coeffs[grid.index(i1, i2, i3)] = {0.0, 0.0};
            }
        }
    }
}

SpectralScalar dealias(const SpectralScalar& g) {
    SpectralScalar out = g;
    dealias_inplace(out);
    return out;
}

bool is_dealiased(const SpectralScalar& g) {
    const Grid& grid = g.grid;
    for (std::size_t i = 0; i < g.coeffs.size(); ++i) {
        auto k = grid.wavevector(i);
        if ((!keep_mode(k[0], grid.n1) || !keep_mode(k[1], grid.n2) ||
             !keep_mode(k[2], grid.n3)) &&
            g.coeffs[i] != std::complex<double>(0.0, 0.0))
            return false;
    }
    return true;
}

namespace {
double bump(double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; }
} // namespace

// C^inf profile: 1 on [0,1/2], 0 on [1,inf), smooth transition in between.
double mollifier_profile(double r) {
    if (r <= 0.5) return 1.0;
    if (r >= 1.0) return 0.0;
    double x = 2.0 * (1.0 - r); // in (0,1)
    return bump(x) / (bump(x) + bump(1.0 - x));
}

SpectralScalar mollify(const SpectralScalar& f, int n) {
    if (n < 1) throw std::invalid_argument("mollify: scale n must be >= 1");
    SpectralScalar out = f;
    const Grid& grid = f.grid;
    for (std::size_t i = 0; i < out.coeffs.size(); ++i) {
        auto k = grid.wavevector(i);
        double kmag = std::sqrt(double(k[0]) * k[0] + double(k[1]) * k[1] + double(k[2]) * k[2]);
        out.coeffs[i] *= mollifier_profile(kmag / n);
    }
    return out;
}

} // namespace mgs
