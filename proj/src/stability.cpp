#include "mgs/stability.hpp"

#include "mgs/multiplier.hpp"
#include "mgs/util.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mgs {

double ladder_rho(int n, const StabilityProblem& prob) {
    if (n < 1) throw std::invalid_argument("ladder_rho: n must be >= 1");
    return mg_symbol(prob.k1, prob.k2, n, prob.params).m3;
}

Eigen::MatrixXd assemble_ladder(const StabilityProblem& prob) {
    prob.validate();
    const int n = prob.n_max;
    const int m = prob.params.forcing_m;
    const double ksq_h = double(prob.k1) * prob.k1 + double(prob.k2) * prob.k2;
    const double half_am = 0.5 * prob.params.amplitude_A * m;
    const double eps_kappa = prob.params.eps_kappa;

    Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
    std::vector<double> rho(n + 1, 0.0);
    for (int j = 1; j <= n; ++j) rho[j] = ladder_rho(j, prob);

    for (int j = 1; j <= n; ++j) {
        L(j - 1, j - 1) = -eps_kappa * (ksq_h + double(j) * j);
        if (j - m >= 1) L(j - 1, j - m - 1) -= half_am * rho[j - m];
        if (j + m <= n) L(j - 1, j + m - 1) -= half_am * rho[j + m];
        // sin((n-m)x3) with n-m < 0 reflects oddly onto sin((m-n)x3)
        if (m - j >= 1) L(j - 1, m - j - 1) += half_am * rho[m - j];
    }
    return L;
}

namespace {

ModeCoefficients solve_ladder(const StabilityProblem& prob) {
    Eigen::MatrixXd L = assemble_ladder(prob);
    Eigen::EigenSolver<Eigen::MatrixXd> es(L);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("sigma_star_matrix: eigensolver failed to converge (n_max=" +
                                 std::to_string(prob.n_max) + ")");
    const auto& vals = es.eigenvalues();
    int best = 0;
    for (int i = 1; i < vals.size(); ++i)
        if (vals[i].real() > vals[best].real()) best = i;

    ModeCoefficients out;
    out.sigma = vals[best].real();
    Eigen::VectorXcd vc = es.eigenvectors().col(best);
    // The selected root is real for the ladder structure; keep the real part
    // and renormalize.
    Eigen::VectorXd v = vc.real();
    double nrm = v.norm();
    if (nrm == 0.0) {
        v = vc.imag();
        nrm = v.norm();
    }
    out.c = v / nrm;
    out.residual = (L * out.c - out.sigma * out.c).norm();
    return out;
}

} // namespace

ModeCoefficients sigma_star_matrix(const StabilityProblem& prob, bool report_truncation) {
    ModeCoefficients out = solve_ladder(prob);
    if (report_truncation) {
        StabilityProblem doubled = prob;
        doubled.n_max = 2 * prob.n_max;
        ModeCoefficients ref = solve_ladder(doubled);
        double denom = std::max(std::abs(ref.sigma), 1e-300);
        out.truncation_delta = std::abs(ref.sigma - out.sigma) / denom;
    }
    return out;
}

SigmaBounds sigma_bounds(const StabilityProblem& prob) {
    const double N2 = prob.params.n_squared;
    const double N4 = N2 * N2;
    const double A = prob.params.amplitude_A;
    const double m = prob.params.forcing_m;
    const double eps_nu = prob.params.eps_nu;
    const double eps_kappa = prob.params.eps_kappa;
    const double K = double(prob.k1) * prob.k1 + double(prob.k2) * prob.k2;
    const double k2sq = double(prob.k2) * prob.k2;
    const double m2 = m * m;

    const double lam_m = K + m2;        // k1^2 + k2^2 + m^2
    const double lam_2m = K + 4.0 * m2; // k1^2 + k2^2 + 4m^2
    const double br_m = k2sq + eps_nu * lam_m * lam_m;
    const double br_2m = k2sq + eps_nu * lam_2m * lam_2m;

    SigmaBounds b;
    b.lower = 0.5 * A * m * N2 * K * br_m / (4.0 * N4 * m2 * lam_2m + br_2m * br_2m) -
              eps_kappa * lam_2m;
    b.upper = A * m * N2 * K * br_2m / (N4 * m2 * lam_m + br_m * br_m) - eps_kappa * lam_m;
    return b;
}

double ladder_characteristic(double sigma, const StabilityProblem& prob, int depth) {
    const int m = prob.params.forcing_m;
    const double ksq_h = double(prob.k1) * prob.k1 + double(prob.k2) * prob.k2;
    const double half_am = 0.5 * prob.params.amplitude_A * m;
    const double eps_kappa = prob.params.eps_kappa;

    auto b = [&](int l) {
        double n = double(l) * m;
        return sigma + eps_kappa * (ksq_h + n * n);
    };
    auto a = [&](int l) { return half_am * ladder_rho(l * m, prob); };

    double g = b(depth);
    for (int l = depth - 1; l >= 1; --l) {
        double al = a(l), alp = a(l + 1);
        if (g == 0.0) g = 1e-300; // step over an exact pole
        g = b(l) - al * alp / g;
    }
    return g;
}

namespace {

// Root of the characteristic function at a fixed continued-fraction depth,
// returning the rightmost sign change found in [lo, hi].
std::optional<double> cf_root_at_depth(const StabilityProblem& prob, int depth, double lo,
                                       double hi, int* bisections) {
    constexpr int panels = 64;
    auto F = [&](double s) { return ladder_characteristic(s, prob, depth); };

    double left = lo, right = hi;
    double fl = F(left);
    std::optional<std::pair<double, double>> bracket;
    for (int i = 1; i <= panels; ++i) {
        double x = lo + (hi - lo) * double(i) / panels;
        double fx = F(x);
        if (std::isfinite(fl) && std::isfinite(fx) && fl * fx < 0.0)
            bracket = std::make_pair(left, x);
        left = x;
        fl = fx;
        (void)right;
    }
    if (!bracket) return std::nullopt;

    auto [a, b] = *bracket;
    double fa = F(a);
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (a + b);
        double fm = F(mid);
        if (bisections) ++*bisections;
        if (fa * fm <= 0.0)
            b = mid;
        else {
            a = mid;
            fa = fm;
        }
        if (b - a <= 1e-14 * std::max(1.0, std::abs(b))) break;
    }
    return 0.5 * (a + b);
}

} // namespace

CfOutcome sigma_star_cf(const StabilityProblem& prob, const SigmaBounds& bracket) {
    prob.validate();
    CfOutcome out;
    double lo = std::max(bracket.lower, 1e-8);
    double hi = bracket.upper;
    if (!(hi > lo)) hi = std::max(2.0 * lo, 1.0);

    for (int widen = 0; widen < 8; ++widen) {
        // Depth doubling until the root moves by <= 1e-10 relative.
        int depth = std::max(64, 8 * prob.params.forcing_m);
        std::optional<double> root = cf_root_at_depth(prob, depth, lo, hi, &out.bisections);
        if (root) {
            for (int iter = 0; iter < 16; ++iter) {
                int depth2 = 2 * depth;
                auto root2 = cf_root_at_depth(prob, depth2, lo, hi, &out.bisections);
                if (!root2) break;
                double change = std::abs(*root2 - *root) / std::max(1e-300, std::abs(*root2));
                root = root2;
                depth = depth2;
                if (change <= 1e-10) break;
            }
            out.found = true;
            out.sigma = *root;
            out.depth = depth;
            return out;
        }
        lo *= 0.5;
        hi *= 1.5;
    }
    return out; // no unstable real root
}

CfOutcome sigma_star_cf(const StabilityProblem& prob) {
    return sigma_star_cf(prob, sigma_bounds(prob));
}

double fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("fit_loglog_slope: need >= 2 aligned samples");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t n = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0))
            throw std::invalid_argument("fit_loglog_slope: samples must be positive");
        double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++n;
    }
    double denom = n * sxx - sx * sx;
    return (n * sxy - sx * sy) / denom;
}

KBox default_box(RegimeCase c, double eps, double alpha) {
    (void)alpha;
    KBox box;
    auto clamp_hi = [](double v) { return std::max(2, int(std::lround(v))); };
    switch (c) {
        case RegimeCase::ii:
            box = {1, clamp_hi(4.0 / eps), 1, clamp_hi(4.0 / std::sqrt(eps))};
            break;
        case RegimeCase::iii:
            box = {1, clamp_hi(4.0 * std::pow(1.0 / eps, 1.0 / 3.0)), 1,
                   clamp_hi(4.0 * std::pow(1.0 / eps, 1.0 / 6.0))};
            break;
        case RegimeCase::iv:
            // Window around the predicted parabolic maximizer scale.
            box = {std::max(1, int(std::lround(0.25 / eps))), clamp_hi(4.0 / eps),
                   std::max(1, int(std::lround(0.25 / std::sqrt(eps)))),
                   clamp_hi(4.0 / std::sqrt(eps))};
            break;
        case RegimeCase::i:
            box = {1, 1, 1, 1}; // case (i) fixes k = (j, round(sqrt(j))) directly
            break;
    }
    return box;
}

RegimeScanResult regime_scan(RegimeCase c, const PhysicalParams& params_template,
                             const std::vector<double>& epsilon_values, double alpha,
                             std::optional<KBox> box_override) {
    if (epsilon_values.empty())
        throw std::invalid_argument("regime_scan: epsilon_values must be non-empty");
    for (std::size_t i = 1; i < epsilon_values.size(); ++i)
        if (!(epsilon_values[i] < epsilon_values[i - 1]))
            throw std::invalid_argument("regime_scan: epsilon_values must be strictly decreasing");

    RegimeScanResult res;
    res.case_id = c;
    res.epsilon_values = epsilon_values;
    res.alpha = alpha;

    for (double eps : epsilon_values) {
        PhysicalParams p = params_template;
        StabilityProblem prob;
        prob.params = p;
        int j_case_i = 0;

        switch (c) {
            case RegimeCase::i:
                prob.params.eps_nu = 0.0;
                prob.params.eps_kappa = 0.0;
                j_case_i = int(std::lround(eps)); // scan parameter is j
                break;
            case RegimeCase::ii:
                prob.params.eps_nu = 0.0;
                prob.params.eps_kappa = eps;
                break;
            case RegimeCase::iii:
                prob.params.eps_nu = eps;
                prob.params.eps_kappa = 0.0;
                break;
            case RegimeCase::iv:
                prob.params.eps_kappa = eps;
                prob.params.eps_nu = std::pow(eps, alpha);
                break;
        }

        int best_k1 = 1, best_k2 = 1;
        double best_bound = -std::numeric_limits<double>::infinity();
        KBox box = box_override ? *box_override : default_box(c, eps, alpha);

        if (c == RegimeCase::i) {
            best_k1 = j_case_i;
            best_k2 = int(std::lround(std::sqrt(double(j_case_i))));
            prob.k1 = best_k1;
            prob.k2 = best_k2;
            best_bound = sigma_bounds(prob).lower;
        } else {
            // Exhaustive integer maximization of the lower bound over the box.
            const int n1 = box.k1_hi - box.k1_lo + 1;
            std::vector<double> row_best(n1, -std::numeric_limits<double>::infinity());
            std::vector<int> row_argk2(n1, box.k2_lo);
            parallel_for(std::size_t(n1), [&](std::size_t r) {
                StabilityProblem q = prob;
                q.k1 = box.k1_lo + int(r);
                for (int k2 = box.k2_lo; k2 <= box.k2_hi; ++k2) {
                    q.k2 = k2;
                    double b = sigma_bounds(q).lower;
                    if (b > row_best[r]) {
                        row_best[r] = b;
                        row_argk2[r] = k2;
                    }
                }
            });
            for (int r = 0; r < n1; ++r) {
                if (row_best[r] > best_bound) {
                    best_bound = row_best[r];
                    best_k1 = box.k1_lo + r;
                    best_k2 = row_argk2[r];
                }
            }
            if (best_k1 == box.k1_hi || best_k2 == box.k2_hi) res.boundary_warning = true;
        }

        prob.k1 = best_k1;
        prob.k2 = best_k2;
        prob.n_max = std::max(64, 4 * prob.params.forcing_m);
        CfOutcome cf = sigma_star_cf(prob);

        res.bound_max.push_back(best_bound);
        res.argmax_k.push_back({best_k1, best_k2});
        res.sigma_star.push_back(cf.found ? cf.sigma
                                          : std::numeric_limits<double>::quiet_NaN());
    }

    // Scaling fit of sigma* against the scan parameter, where defined.
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < res.epsilon_values.size(); ++i)
        if (std::isfinite(res.sigma_star[i]) && res.sigma_star[i] > 0.0) {
            xs.push_back(res.epsilon_values[i]);
            ys.push_back(res.sigma_star[i]);
        }
    res.fitted_exponent = xs.size() >= 2 ? fit_loglog_slope(xs, ys)
                                         : std::numeric_limits<double>::quiet_NaN();
    return res;
}

} // namespace mgs
