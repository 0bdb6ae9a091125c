#include "mgs/field.hpp"

#include <cmath>

namespace mgs {

void SpectralScalar::enforce_hermitian() {
    const int n1 = grid.n1, n2 = grid.n2, n3 = grid.n3;
    for (int i1 = 0; i1 < n1; ++i1) {
        int j1 = (n1 - i1) % n1;
        for (int i2 = 0; i2 < n2; ++i2) {
            int j2 = (n2 - i2) % n2;
            for (int i3 = 0; i3 < n3; ++i3) {
                int j3 = (n3 - i3) % n3;
                std::size_t a = grid.index(i1, i2, i3);
                std::size_t b = grid.index(j1, j2, j3);
                if (a > b) continue;
                if (a == b) {
                    coeffs[a] = {coeffs[a].real(), 0.0};
                } else {
                    auto half = 0.5 * (coeffs[a] + std::conj(coeffs[b]));
                    coeffs[a] = half;
                    coeffs[b] = std::conj(half);
                }
            }
        }
    }
    if (zero_mean) coeffs[0] = {0.0, 0.0};
}

double SpectralScalar::hermitian_defect() const {
    const int n1 = grid.n1, n2 = grid.n2, n3 = grid.n3;
    double worst = 0.0;
    for (int i1 = 0; i1 < n1; ++i1) {
        int j1 = (n1 - i1) % n1;
        for (int i2 = 0; i2 < n2; ++i2) {
            int j2 = (n2 - i2) % n2;
            for (int i3 = 0; i3 < n3; ++i3) {
                int j3 = (n3 - i3) % n3;
                std::size_t a = grid.index(i1, i2, i3);
                std::size_t b = grid.index(j1, j2, j3);
                if (a > b) continue;
                worst = std::max(worst, std::abs(coeffs[a] - std::conj(coeffs[b])));
            }
        }
    }
    return worst;
}

bool SpectralScalar::finite() const {
    for (const auto& c : coeffs)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
    return true;
}

bool PhysicalScalar::finite() const {
    for (double v : samples)
        if (!std::isfinite(v)) return false;
    return true;
}

rvec squared_wavenumbers(const Grid& grid) {
    rvec ksq(grid.size());
    for (int i1 = 0; i1 < grid.n1; ++i1) {
        double k1 = Grid::wavenumber(i1, grid.n1);
        for (int i2 = 0; i2 < grid.n2; ++i2) {
            double k2 = Grid::wavenumber(i2, grid.n2);
            for (int i3 = 0; i3 < grid.n3; ++i3) {
                double k3 = Grid::wavenumber(i3, grid.n3);
                ksq[grid.index(i1, i2, i3)] = k1 * k1 + k2 * k2 + k3 * k3;
            }
        }
    }
    return ksq;
}

void axpy(std::complex<double> a, const SpectralScalar& x, SpectralScalar& y) {
    for (std::size_t i = 0; i < y.coeffs.size(); ++i) y.coeffs[i] += a * x.coeffs[i];
}

SpectralScalar scaled(const SpectralScalar& x, double a) {
    SpectralScalar out = x;
    for (auto& c : out.coeffs) c *= a;
    return out;
}

double l2_distance(const SpectralScalar& a, const SpectralScalar& b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        acc += std::norm(a.coeffs[i] - b.coeffs[i]);
    }
    const double box = std::pow(2.0 * Grid::pi(), 3);
    return std::sqrt(box * acc);
}

} // namespace mgs
