#pragma once

#include "mgs/params.hpp"

#include <Eigen/Dense>

#include <array>
#include <optional>
#include <vector>

namespace mgs {

// Eigenproblem for perturbations e^{sigma t} sin(k1 x1) sin(k2 x2) sum_n c_n sin(n x3)
// of the steady state A sin(m x3).
struct StabilityProblem {
    int k1 = 1;
    int k2 = 1;
    PhysicalParams params;
    int n_max = 64;

    void validate() const {
        params.validate();
        if (k1 * k1 + k2 * k2 <= 0)
            throw std::invalid_argument("StabilityProblem: k1^2 + k2^2 must be > 0");
        if (n_max < 4 * params.forcing_m)
            throw std::invalid_argument("StabilityProblem: n_max must be >= 4*m");
    }
};

struct ModeCoefficients {
    double sigma = 0.0;
    Eigen::VectorXd c;      // ladder coefficients c_1..c_n_max, |c|_2 = 1
    double residual = 0.0;  // |L c - sigma c|_2
    double truncation_delta = 0.0; // relative change of sigma when n_max doubles
};

struct SigmaBounds {
    double lower = 0.0;
    double upper = 0.0;
};

// Vertical-mode coupling coefficient rho_n; identical to the third symbol
// component evaluated at (k1, k2, n).
double ladder_rho(int n, const StabilityProblem& prob);

// Truncated Galerkin matrix L of the mode ladder: sigma c = L c.
// Couplings run between j and j +/- m, with the odd reflection of indices
// below 1 folded back with flipped sign.
Eigen::MatrixXd assemble_ladder(const StabilityProblem& prob);

// Dense eigensolve oracle: largest-real-part eigenvalue of the truncated ladder.
ModeCoefficients sigma_star_matrix(const StabilityProblem& prob, bool report_truncation = true);

// Closed-form bounds on the unstable real root.
SigmaBounds sigma_bounds(const StabilityProblem& prob);

// Characteristic continued fraction of the ladder restricted to the forced
// residue class (indices m, 2m, 3m, ...); value and adaptive-depth root solve.
double ladder_characteristic(double sigma, const StabilityProblem& prob, int depth);

struct CfOutcome {
    bool found = false; // false: no unstable real root located
    double sigma = 0.0;
    int depth = 0;
    int bisections = 0;
};

CfOutcome sigma_star_cf(const StabilityProblem& prob, const SigmaBounds& bracket);
CfOutcome sigma_star_cf(const StabilityProblem& prob);

// Regime scans over vanishing eps_nu / eps_kappa, cases (i)-(iv).
enum class RegimeCase { i, ii, iii, iv };

struct KBox {
    int k1_lo = 1, k1_hi = 1;
    int k2_lo = 1, k2_hi = 1;
};

struct RegimeScanResult {
    RegimeCase case_id = RegimeCase::ii;
    std::vector<double> epsilon_values; // scan parameter (epsilon, or j for case i)
    double alpha = 0.0;                 // case iv: eps_nu = eps_kappa^alpha
    std::vector<double> sigma_star;     // NaN where no unstable real root exists
    std::vector<double> bound_max;      // maximum of the lower bound over the box
    std::vector<std::array<int, 2>> argmax_k;
    double fitted_exponent = 0.0;
    bool boundary_warning = false;
};

// Boxes sized 4x the predicted maximizer; case (iv) restricts to the window
// around the predicted parabolic scale.
KBox default_box(RegimeCase c, double eps, double alpha);

RegimeScanResult regime_scan(RegimeCase c, const PhysicalParams& params_template,
                             const std::vector<double>& epsilon_values, double alpha = 0.0,
                             std::optional<KBox> box = std::nullopt);

// Least-squares slope of log(y) against log(x).
double fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

} // namespace mgs
