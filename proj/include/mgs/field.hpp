#pragma once

#include "mgs/grid.hpp"

#include <array>
#include <complex>
#include <cstdlib>
#include <limits>
#include <new>
#include <vector>

namespace mgs {

// Allocator matching FFTW's SIMD alignment so plans made on fftw_malloc'ed
// scratch stay valid for field buffers.
template <class T>
struct SimdAllocator {
    using value_type = T;
    SimdAllocator() = default;
    template <class U>
    SimdAllocator(const SimdAllocator<U>&) {}
    T* allocate(std::size_t n) {
        void* p = std::aligned_alloc(64, ((n * sizeof(T) + 63) / 64) * 64);
        if (!p) throw std::bad_alloc();
        return static_cast<T*>(p);
    }
    void deallocate(T* p, std::size_t) { std::free(p); }
    template <class U>
    bool operator==(const SimdAllocator<U>&) const {
        return true;
    }
};

using cvec = std::vector<std::complex<double>, SimdAllocator<std::complex<double>>>;
using rvec = std::vector<double, SimdAllocator<double>>;

// Scalar field in Fourier representation. Coefficients are the analytic
// Fourier coefficients of the trigonometric interpolant (forward transform
// carries 1/(n1*n2*n3)), stored over the full wavenumber cube.
struct SpectralScalar {
    Grid grid;
    cvec coeffs;
    bool zero_mean = true;

    SpectralScalar() = default;
    explicit SpectralScalar(const Grid& g, bool mean_free = true)
        : grid(g), coeffs(g.size(), {0.0, 0.0}), zero_mean(mean_free) {}

    std::complex<double>& at(int k1, int k2, int k3) {
        return coeffs[grid.index_of_wave(k1, k2, k3)];
    }
    const std::complex<double>& at(int k1, int k2, int k3) const {
        return coeffs[grid.index_of_wave(k1, k2, k3)];
    }

    std::complex<double> mean() const { return coeffs.empty() ? 0.0 : coeffs[0]; }

    // Projects onto the Hermitian-symmetric subspace (real fields) and, for
    // mean-free fields, pins the k=0 coefficient to zero.
    void enforce_hermitian();
    double hermitian_defect() const;
    bool finite() const;
};

struct PhysicalScalar {
    Grid grid;
    rvec samples;

    PhysicalScalar() = default;
    explicit PhysicalScalar(const Grid& g) : grid(g), samples(g.size(), 0.0) {}

    double& at(int i1, int i2, int i3) { return samples[grid.index(i1, i2, i3)]; }
    double at(int i1, int i2, int i3) const { return samples[grid.index(i1, i2, i3)]; }
    bool finite() const;
};

struct SpectralVelocity {
    Grid grid;
    std::array<cvec, 3> comp;

    SpectralVelocity() = default;
    explicit SpectralVelocity(const Grid& g) : grid(g) {
        for (auto& c : comp) c.assign(g.size(), {0.0, 0.0});
    }
};

// |k|^2 table in storage order.
rvec squared_wavenumbers(const Grid& grid);

// Elementwise helpers used across the solvers.
void axpy(std::complex<double> a, const SpectralScalar& x, SpectralScalar& y);
SpectralScalar scaled(const SpectralScalar& x, double a);
double l2_distance(const SpectralScalar& a, const SpectralScalar& b);

} // namespace mgs
