#pragma once

#include "mgs/evolve.hpp"

#include <vector>

namespace mgs {

// G(t) theta0: heat semigroup applied coefficientwise.
SpectralScalar heat_propagate(const SpectralScalar& theta0, double t, double eps_kappa);

// Field known at increasing time nodes; evaluation interpolates coefficients
// in time (cubic Lagrange on the four nearest nodes).
struct TimeField {
    std::vector<double> nodes;
    std::vector<SpectralScalar> fields;

    SpectralScalar eval(double tau) const;
};

struct DuhamelQuad {
    int panels = 8;      // cosine-graded breakpoints cluster at both endpoints
    int gauss_order = 4; // Gauss-Legendre points per panel
};

// B(phi, psi)(t) = -int_0^t G(t-tau) [div(u(phi(tau)) psi(tau))] dtau.
SpectralScalar bilinear_B(const TimeField& phi, const TimeField& psi, double t,
                          const PhysicalParams& params, const SymbolTable& table,
                          const DuhamelQuad& quad = {});

struct PicardOptions {
    int max_iter = 25;
    double tol = 1e-9;  // E_T distance between successive iterates
    double p = 4.0;     // exponent of the weighted norm, any p in (3, inf)
    int nodes = 24;     // graded time nodes on (0, T]
    DuhamelQuad quad;
};

struct MildIterate {
    double horizon_T = 0.0;
    std::vector<double> time_nodes; // nodes in (0, T]; node 0 (= theta0) kept separately
    std::vector<SpectralScalar> fields;
    double weighted_norm = 0.0; // sup_t t^{1/2-3/(2p)} |theta(t)|_{L^p}
    double p = 4.0;
    int iterations = 0;
    int halvings = 0;

    TimeField as_time_field(const SpectralScalar& theta0) const;
};

// Picard sequence theta_1 = G theta0, theta_{n+1} = theta_1 + B(theta_n, theta_n),
// iterated to the fixed point; T is halved on divergence (up to 4 times).
MildIterate picard_solve(const SpectralScalar& theta0, double T, const PhysicalParams& params,
                         const PicardOptions& opts = {});

// Max over nodes of |theta(t) - G(t)theta0 - B(theta,theta)(t)|_{L^2}.
double mild_residual(const MildIterate& sol, const SpectralScalar& theta0,
                     const PhysicalParams& params, const DuhamelQuad& quad = {});

// E_T norm of a time field sampled at the iterate's nodes.
double weighted_sup_norm(const std::vector<double>& nodes,
                         const std::vector<SpectralScalar>& fields, double p);

} // namespace mgs
