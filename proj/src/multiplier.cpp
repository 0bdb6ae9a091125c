#include "mgs/multiplier.hpp"

#include "mgs/fft.hpp"

#include <cmath>
#include <stdexcept>

namespace mgs {

double mg_symbol_denominator(int k1, int k2, int k3, const PhysicalParams& params) {
    const double N2 = params.n_squared;
    const double ksq = double(k1) * k1 + double(k2) * k2 + double(k3) * k3;
    const double bracket = params.eps_nu * ksq * ksq + double(k2) * k2;
    return N2 * N2 * ksq * double(k3) * k3 + bracket * bracket;
}

SymbolValue mg_symbol(int k1, int k2, int k3, const PhysicalParams& params) {
    if (k3 == 0) return {0.0, 0.0, 0.0}; // convention on the k3 = 0 plane (covers k = 0)
    const double N2 = params.n_squared;
    const double N4 = N2 * N2;
    const double ksq = double(k1) * k1 + double(k2) * k2 + double(k3) * k3;
    const double bracket = params.eps_nu * ksq * ksq + double(k2) * k2;
    const double D = N4 * ksq * double(k3) * k3 + bracket * bracket; // > 0 since k3 != 0
    SymbolValue v;
    v.m1 = (N4 * k2 * k3 * ksq - N2 * k1 * k3 * bracket) / D;
    v.m2 = (-N4 * k1 * k3 * ksq - N2 * k2 * k3 * bracket) / D;
    v.m3 = (N2 * (double(k1) * k1 + double(k2) * k2) * bracket) / D;
    return v;
}

SymbolTable::SymbolTable(const Grid& g, const PhysicalParams& p) : grid(g), params(p) {
    params.validate();
    for (auto& c : m) c.assign(grid.size(), 0.0);
    for (int i1 = 0; i1 < grid.n1; ++i1) {
        int k1 = Grid::wavenumber(i1, grid.n1);
        for (int i2 = 0; i2 < grid.n2; ++i2) {
            int k2 = Grid::wavenumber(i2, grid.n2);
            for (int i3 = 0; i3 < grid.n3; ++i3) {
                int k3 = Grid::wavenumber(i3, grid.n3);
                SymbolValue v = mg_symbol(k1, k2, k3, params);
                std::size_t idx = grid.index(i1, i2, i3);
                m[0][idx] = v.m1;
                m[1][idx] = v.m2;
                m[2][idx] = v.m3;
            }
        }
    }
}

SpectralVelocity apply_M(const SpectralScalar& theta, const SymbolTable& table) {
    if (!(theta.grid == table.grid))
        throw std::invalid_argument("apply_M: grid mismatch with symbol table");
    SpectralVelocity u(theta.grid);
    for (int j = 0; j < 3; ++j)
        for (std::size_t i = 0; i < theta.coeffs.size(); ++i)
            u.comp[j][i] = table.m[j][i] * theta.coeffs[i];
    return u;
}

SpectralVelocity apply_M(const SpectralScalar& theta, const PhysicalParams& params) {
    return apply_M(theta, SymbolTable(theta.grid, params));
}

double heat_multiplier(int k1, int k2, int k3, double t, double eps_kappa) {
    if (t < 0.0) throw std::invalid_argument("heat_multiplier: t must be >= 0");
    if (eps_kappa < 0.0) throw std::invalid_argument("heat_multiplier: eps_kappa must be >= 0");
    const double ksq = double(k1) * k1 + double(k2) * k2 + double(k3) * k3;
    return std::exp(-eps_kappa * t * ksq);
}

namespace {
double max_component(const SymbolValue& v) {
    return std::max({std::abs(v.m1), std::abs(v.m2), std::abs(v.m3)});
}
} // namespace

SmoothingProfile smoothing_profile(const PhysicalParams& params, int kmax) {
    if (kmax < 8) throw std::invalid_argument("smoothing_profile: kmax must be >= 8");
    SmoothingProfile out;
    out.viscous = params.eps_nu > 0.0;
    for (int j = 8; j <= kmax; ++j) {
        SmoothingProfile::Row row;
        row.k_along_ray = j;
        if (out.viscous) {
            double ksq = double(j) * j + 1.0;
            row.value = params.eps_nu * ksq * max_component(mg_symbol(j, 0, 1, params));
        } else {
            int k2 = int(std::lround(std::sqrt(double(j))));
            row.value = max_component(mg_symbol(j, k2, 1, params));
        }
        out.rows.push_back(row);
    }
    return out;
}

double shell_sup_compensated(const PhysicalParams& params, int n) {
    const double lo = std::pow(2.0, n);
    const double hi = 2.0 * lo;
    const int reach = int(hi) + 1;
    double sup = 0.0;
    for (int k1 = -reach; k1 <= reach; ++k1)
        for (int k2 = -reach; k2 <= reach; ++k2)
            for (int k3 = -reach; k3 <= reach; ++k3) {
                double kmag =
                    std::sqrt(double(k1) * k1 + double(k2) * k2 + double(k3) * k3);
                if (kmag < lo || kmag >= hi) continue;
                double v = max_component(mg_symbol(k1, k2, k3, params)) * kmag * kmag;
                sup = std::max(sup, v);
            }
    return sup;
}

} // namespace mgs
