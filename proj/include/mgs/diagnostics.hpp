#pragma once

#include "mgs/evolve.hpp"
#include "mgs/norms.hpp"

#include <string>
#include <vector>

namespace mgs {

struct NormSeries {
    std::vector<double> times;
    std::vector<double> values;
    NormSpec spec;
    std::string label;

    void push(double t, double v) {
        times.push_back(t);
        values.push_back(v);
    }
    std::size_t size() const { return times.size(); }
};

// Observer that appends norm(theta) samples into the given series.
Observer norm_observer(NormSeries& out, const NormSpec& spec, double cadence);

struct FitResult {
    double slope = 0.0;
    double r_squared = 0.0;
};

// Least-squares slope of log(values) against time over [t_a, t_b].
FitResult fit_growth_rate(const NormSeries& series, double t_a, double t_b);

// Trapezoidal integral of eps_kappa * |grad theta|_{L^2}^2 over [0, T]; the
// series must hold the Wdot(1,2) norm sampled densely (>= 64 samples in [0,T]).
double dissipation_integral(const NormSeries& grad_l2, double eps_kappa, double T);

struct KappaSweepRow {
    double eps_kappa = 0.0;
    double t = 0.0;
    double distance = 0.0;    // L^2 distance to the eps_kappa = 0 run at time t
    double dissipation = 0.0; // eps_kappa * int_0^T |grad theta|^2
};

std::vector<KappaSweepRow> kappa_sweep_compare(const SpectralScalar& theta0,
                                               const PhysicalParams& params_template,
                                               const std::vector<double>& kappa_list, double T,
                                               const std::vector<double>& sample_times,
                                               double dt);

struct EnvelopeResult {
    double bound = 0.0;       // sup of t^{-exponent} * value over the series
    bool monotone_tail = false;
};

// Compensates the series by t^{-exponent} and reports the sup plus whether the
// compensated values are non-increasing over the trailing half. The series
// must span at least one decade in t.
EnvelopeResult decay_envelope_check(const NormSeries& series, double exponent);

} // namespace mgs
