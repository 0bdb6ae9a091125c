#include "mgs/mild.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mgs {

SpectralScalar heat_propagate(const SpectralScalar& theta0, double t, double eps_kappa) {
    if (t < 0.0) throw std::invalid_argument("heat_propagate: t must be >= 0");
    if (eps_kappa < 0.0) throw std::invalid_argument("heat_propagate: eps_kappa must be >= 0");
    SpectralScalar out = theta0;
    if (t == 0.0 || eps_kappa == 0.0) return out;
    rvec ksq = squared_wavenumbers(theta0.grid);
    for (std::size_t i = 0; i < out.coeffs.size(); ++i)
        out.coeffs[i] *= std::exp(-eps_kappa * t * ksq[i]);
    return out;
}

SpectralScalar TimeField::eval(double tau) const {
    if (nodes.empty()) throw std::invalid_argument("TimeField: empty");
    if (tau <= nodes.front()) return fields.front();
    if (tau >= nodes.back()) return fields.back();
    auto it = std::upper_bound(nodes.begin(), nodes.end(), tau);
    int hi = int(it - nodes.begin()); // nodes[hi-1] <= tau < nodes[hi]
    int first = std::clamp(hi - 2, 0, int(nodes.size()) - 4);
    int count = std::min<int>(4, int(nodes.size()) - first);
    if (int(nodes.size()) < 4) {
        first = 0;
        count = int(nodes.size());
    }

    SpectralScalar out(fields.front().grid);
    for (int a = 0; a < count; ++a) {
        double w = 1.0;
        for (int b = 0; b < count; ++b) {
            if (a == b) continue;
            w *= (tau - nodes[first + b]) / (nodes[first + a] - nodes[first + b]);
        }
        axpy(w, fields[first + a], out);
    }
    return out;
}

namespace {

// 4-point Gauss-Legendre on [-1, 1].
constexpr double kGaussX[4] = {-0.8611363115940526, -0.3399810435848563, 0.3399810435848563,
                               0.8611363115940526};
constexpr double kGaussW[4] = {0.3478548451374538, 0.6521451548625461, 0.6521451548625461,
                               0.3478548451374538};

} // namespace

SpectralScalar bilinear_B(const TimeField& phi, const TimeField& psi, double t,
                          const PhysicalParams& params, const SymbolTable& table,
                          const DuhamelQuad& quad) {
    if (quad.panels < 1) throw std::invalid_argument("bilinear_B: empty quadrature");
    const Grid& g = table.grid;
    SpectralScalar acc(g);
    if (t <= 0.0) return acc;

    rvec ksq = squared_wavenumbers(g);

    // Panel breakpoints graded toward both endpoints of [0, t].
    std::vector<double> bp(quad.panels + 1);
    for (int i = 0; i <= quad.panels; ++i) {
        double s = double(i) / quad.panels;
        bp[i] = t * 0.5 * (1.0 - std::cos(Grid::pi() * s));
    }

    for (int panel = 0; panel < quad.panels; ++panel) {
        double a = bp[panel], b = bp[panel + 1];
        double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        for (int q = 0; q < 4; ++q) {
            double tau = mid + half * kGaussX[q];
            double w = half * kGaussW[q];
            SpectralScalar integrand =
                div_u_product(phi.eval(tau), psi.eval(tau), table, nullptr);
            const double dt_heat = t - tau;
            for (std::size_t i = 0; i < acc.coeffs.size(); ++i) {
                double gmul = std::exp(-params.eps_kappa * dt_heat * ksq[i]);
                acc.coeffs[i] -= w * gmul * integrand.coeffs[i];
            }
        }
    }
    return acc;
}

double weighted_sup_norm(const std::vector<double>& nodes,
                         const std::vector<SpectralScalar>& fields, double p) {
    double sup = 0.0;
    const double expo = 0.5 - 1.5 / p;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i] <= 0.0) continue;
        double v = std::pow(nodes[i], expo) * norm(fields[i], NormSpec::Lp(p));
        sup = std::max(sup, v);
    }
    return sup;
}

TimeField MildIterate::as_time_field(const SpectralScalar& theta0) const {
    TimeField tf;
    tf.nodes.reserve(time_nodes.size() + 1);
    tf.fields.reserve(time_nodes.size() + 1);
    tf.nodes.push_back(0.0);
    tf.fields.push_back(theta0);
    for (std::size_t i = 0; i < time_nodes.size(); ++i) {
        tf.nodes.push_back(time_nodes[i]);
        tf.fields.push_back(fields[i]);
    }
    return tf;
}

MildIterate picard_solve(const SpectralScalar& theta0, double T, const PhysicalParams& params,
                         const PicardOptions& opts) {
    params.validate();
    if (!(params.eps_kappa > 0.0))
        throw std::invalid_argument("picard_solve: requires eps_kappa > 0");
    if (!(T > 0.0)) throw std::invalid_argument("picard_solve: T must be > 0");
    if (opts.nodes < 2) throw std::invalid_argument("picard_solve: need >= 2 time nodes");

    SymbolTable table(theta0.grid, params);
    SpectralScalar t0 = dealias(theta0);
    t0.enforce_hermitian();

    for (int halving = 0; halving <= 4; ++halving) {
        const double horizon = T * std::pow(0.5, halving);
        std::vector<double> nodes(opts.nodes);
        for (int i = 0; i < opts.nodes; ++i) {
            double s = double(i + 1) / opts.nodes;
            nodes[i] = horizon * s * s; // graded toward 0
        }

        MildIterate it;
        it.horizon_T = horizon;
        it.time_nodes = nodes;
        it.p = opts.p;
        it.halvings = halving;
        it.fields.reserve(nodes.size());
        for (double tn : nodes) it.fields.push_back(heat_propagate(t0, tn, params.eps_kappa));
        const double theta1_norm = weighted_sup_norm(nodes, it.fields, opts.p);

        std::vector<SpectralScalar> theta1 = it.fields;
        bool diverged = false;
        for (int iter = 1; iter <= opts.max_iter; ++iter) {
            TimeField cur = it.as_time_field(t0);
            std::vector<SpectralScalar> next(nodes.size(), SpectralScalar(t0.grid));
            std::vector<SpectralScalar> diffs(nodes.size(), SpectralScalar(t0.grid));
            for (std::size_t i = 0; i < nodes.size(); ++i) {
                SpectralScalar Bi = bilinear_B(cur, cur, nodes[i], params, table, opts.quad);
                next[i] = theta1[i];
                axpy(1.0, Bi, next[i]);
                diffs[i] = next[i];
                axpy(-1.0, it.fields[i], diffs[i]);
            }
            double dist = weighted_sup_norm(nodes, diffs, opts.p);
            it.fields = std::move(next);
            it.iterations = iter;
            double cur_norm = weighted_sup_norm(nodes, it.fields, opts.p);
            if (!std::isfinite(dist) || !std::isfinite(cur_norm) ||
                cur_norm > 1e3 * std::max(theta1_norm, 1e-300)) {
                diverged = true;
                break;
            }
            if (dist <= opts.tol) {
                it.weighted_norm = cur_norm;
                return it;
            }
            if (iter == opts.max_iter) diverged = true;
        }
        if (!diverged) {
            it.weighted_norm = weighted_sup_norm(nodes, it.fields, opts.p);
            return it;
        }
    }
    throw std::runtime_error("picard_solve: no convergence after 4 horizon halvings");
}

double mild_residual(const MildIterate& sol, const SpectralScalar& theta0,
                     const PhysicalParams& params, const DuhamelQuad& quad) {
    SymbolTable table(theta0.grid, params);
    SpectralScalar t0 = dealias(theta0);
    TimeField cur = sol.as_time_field(t0);
    double worst = 0.0;
    for (std::size_t i = 0; i < sol.time_nodes.size(); ++i) {
        double t = sol.time_nodes[i];
        SpectralScalar expect = heat_propagate(t0, t, params.eps_kappa);
        axpy(1.0, bilinear_B(cur, cur, t, params, table, quad), expect);
        worst = std::max(worst, l2_distance(expect, sol.fields[i]));
    }
    return worst;
}

} // namespace mgs
