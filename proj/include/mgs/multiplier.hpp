#pragma once

#include "mgs/field.hpp"
#include "mgs/params.hpp"

#include <memory>
#include <vector>

namespace mgs {

// One evaluation of the constitutive symbol M-hat(k).
struct SymbolValue {
    double m1 = 0.0;
    double m2 = 0.0;
    double m3 = 0.0;
};

// Components of the multiplier relating u-hat and theta-hat. Zero on the
// plane k3 = 0 and at k = 0; divergence-free by construction.
SymbolValue mg_symbol(int k1, int k2, int k3, const PhysicalParams& params);

// Denominator D(k); strictly positive whenever k3 != 0.
double mg_symbol_denominator(int k1, int k2, int k3, const PhysicalParams& params);

// Precomputed symbol arrays for a grid; apply_M is the inner-loop hot path.
struct SymbolTable {
    Grid grid;
    PhysicalParams params;
    std::array<rvec, 3> m;

    SymbolTable(const Grid& g, const PhysicalParams& p);
};

SpectralVelocity apply_M(const SpectralScalar& theta, const SymbolTable& table);
SpectralVelocity apply_M(const SpectralScalar& theta, const PhysicalParams& params);

// Heat-semigroup multiplier exp(-eps_kappa * t * |k|^2).
double heat_multiplier(int k1, int k2, int k3, double t, double eps_kappa);

// Scan of the smoothing behavior of the symbol. For eps_nu > 0 the rows hold
// eps_nu*|k|^2*max_j|M_j| along the ray k = (K,0,1), K = 8..kmax; for
// eps_nu = 0 they hold max_j|M_j| along the parabola k = (j, round(sqrt(j)), 1).
struct SmoothingProfile {
    bool viscous = false;
    struct Row {
        double k_along_ray; // K (viscous) or j (inviscid)
        double value;
    };
    std::vector<Row> rows;
};

SmoothingProfile smoothing_profile(const PhysicalParams& params, int kmax);

// sup over the dyadic shell 2^n <= |k| < 2^{n+1} of max_j |M_j(k)| * |k|^2.
double shell_sup_compensated(const PhysicalParams& params, int n);

} // namespace mgs
