#include "mgs/diagnostics.hpp"

#include <cmath>
#include <stdexcept>

namespace mgs {

Observer norm_observer(NormSeries& out, const NormSpec& spec, double cadence) {
    out.spec = spec;
    if (out.label.empty()) out.label = spec.label();
    Observer obs;
    obs.cadence = cadence;
    obs.fn = [&out, spec](double t, const SpectralScalar& theta) {
        out.push(t, norm(theta, spec));
    };
    return obs;
}

FitResult fit_growth_rate(const NormSeries& series, double t_a, double t_b) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    std::size_t n = 0;
    for (std::size_t i = 0; i < series.size(); ++i) {
        double t = series.times[i];
        if (t < t_a || t > t_b) continue;
        double v = series.values[i];
        if (!(v > 0.0))
            throw std::invalid_argument("fit_growth_rate: nonpositive value in window");
        double y = std::log(v);
        sx += t;
        sy += y;
        sxx += t * t;
        sxy += t * y;
        syy += y * y;
        ++n;
    }
    if (n < 8) throw std::invalid_argument("fit_growth_rate: need >= 8 samples in window");
    double denom = n * sxx - sx * sx;
    FitResult res;
    res.slope = (n * sxy - sx * sy) / denom;
    double ss_tot = syy - sy * sy / n;
    double ss_res = ss_tot - res.slope * (sxy - sx * sy / n);
    res.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
    return res;
}

double dissipation_integral(const NormSeries& grad_l2, double eps_kappa, double T) {
    std::size_t in_window = 0;
    for (double t : grad_l2.times)
        if (t <= T + 1e-12) ++in_window;
    if (in_window < 64)
        throw std::invalid_argument("dissipation_integral: need >= 64 samples in [0,T]");
    double acc = 0.0;
    for (std::size_t i = 1; i < grad_l2.size(); ++i) {
        double t0 = grad_l2.times[i - 1], t1 = grad_l2.times[i];
        if (t0 > T) break;
        double hi = std::min(t1, T);
        double v0 = grad_l2.values[i - 1] * grad_l2.values[i - 1];
        double v1 = grad_l2.values[i] * grad_l2.values[i];
        if (t1 > T && t1 > t0) // shorten the last cell onto [0,T]
            v1 = v0 + (v1 - v0) * (T - t0) / (t1 - t0);
        acc += 0.5 * (v0 + v1) * (hi - t0);
    }
    return eps_kappa * acc;
}

std::vector<KappaSweepRow> kappa_sweep_compare(const SpectralScalar& theta0,
                                               const PhysicalParams& params_template,
                                               const std::vector<double>& kappa_list, double T,
                                               const std::vector<double>& sample_times,
                                               double dt) {
    for (double t : sample_times)
        if (t < 0.0 || t > T)
            throw std::invalid_argument("kappa_sweep_compare: sample time outside [0,T]");

    auto run_one = [&](double eps) {
        PhysicalParams p = params_template;
        p.eps_kappa = eps;
        SimState state(theta0, p);
        std::vector<SpectralScalar> snaps;
        NormSeries grads;
        std::vector<Observer> obs;
        std::size_t next = 0;
        obs.push_back(Observer{0.0, [&](double t, const SpectralScalar& th) {
                                   if (next < sample_times.size() &&
                                       t + 1e-9 * dt >= sample_times[next]) {
                                       snaps.push_back(th);
                                       ++next;
                                   }
                               }});
        obs.push_back(norm_observer(grads, NormSpec::sobolev_dot(1.0, 2.0), 0.0));
        run(std::move(state), T, dt, obs);
        double diss = eps > 0.0 ? dissipation_integral(grads, eps, T) : 0.0;
        return std::make_pair(std::move(snaps), diss);
    };

    auto [base_snaps, base_diss] = run_one(0.0);
    (void)base_diss;
    if (base_snaps.size() != sample_times.size())
        throw std::runtime_error("kappa_sweep_compare: sampling misaligned with dt grid");

    std::vector<KappaSweepRow> rows;
    for (double eps : kappa_list) {
        auto [snaps, diss] = run_one(eps);
        if (snaps.size() != sample_times.size())
            throw std::runtime_error("kappa_sweep_compare: sampling misaligned with dt grid");
        for (std::size_t i = 0; i < sample_times.size(); ++i) {
            KappaSweepRow row;
            row.eps_kappa = eps;
            row.t = sample_times[i];
            row.distance = l2_distance(snaps[i], base_snaps[i]);
            row.dissipation = diss;
            rows.push_back(row);
        }
    }
    return rows;
}

EnvelopeResult decay_envelope_check(const NormSeries& series, double exponent) {
    if (series.size() < 4)
        throw std::invalid_argument("decay_envelope_check: need >= 4 samples");
    double t_min = series.times.front(), t_max = series.times.back();
    if (!(t_min > 0.0) || t_max < 10.0 * t_min)
        throw std::invalid_argument("decay_envelope_check: series must span a decade of t > 0");

    EnvelopeResult res;
    std::vector<double> comp(series.size());
    for (std::size_t i = 0; i < series.size(); ++i) {
        comp[i] = series.values[i] * std::pow(series.times[i], -exponent);
        res.bound = std::max(res.bound, comp[i]);
    }
    res.monotone_tail = true;
    for (std::size_t i = series.size() / 2 + 1; i < series.size(); ++i) {
        if (comp[i] > comp[i - 1] * (1.0 + 1e-9)) {
            res.monotone_tail = false;
            break;
        }
    }
    return res;
}

} // namespace mgs
