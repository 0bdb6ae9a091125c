#pragma once

#include "mgs/field.hpp"

#include <limits>
#include <string>

namespace mgs {

// Norm selector for L^p, W^{s,p} and Wdot^{s,p}. p = infinity() selects the
// grid maximum.
struct NormSpec {
    double s = 0.0;
    double p = 2.0;
    bool homogeneous = true;

    static constexpr double infinity() { return std::numeric_limits<double>::infinity(); }

    void validate() const {
        if (s < 0.0) throw std::invalid_argument("NormSpec: s must be >= 0");
        if (!(p >= 1.0)) throw std::invalid_argument("NormSpec: p must be >= 1");
    }

    static NormSpec Lp(double p) { return {0.0, p, false}; }
    static NormSpec L2() { return Lp(2.0); }
    static NormSpec Linf() { return Lp(infinity()); }
    static NormSpec sobolev(double s, double p) { return {s, p, false}; }
    static NormSpec sobolev_dot(double s, double p) { return {s, p, true}; }

    std::string label() const;
    static NormSpec parse(const std::string& label);
    bool operator==(const NormSpec& o) const {
        return s == o.s && p == o.p && homogeneous == o.homogeneous;
    }
};

struct NormResult {
    double value = 0.0;
    bool mean_excluded = false; // homogeneous norm applied to a field with nonzero mean
};

NormResult norm_detail(const SpectralScalar& f, const NormSpec& spec);
double norm(const SpectralScalar& f, const NormSpec& spec);
double norm(const PhysicalScalar& f, const NormSpec& spec);

// Discrete L^p of grid samples with cell weight (2pi)^3/(n1*n2*n3).
double lp_norm(const PhysicalScalar& f, double p);

// Spectral-side l^2 norm carrying the same normalization as the physical L^2
// (Parseval partner).
double spectral_l2(const SpectralScalar& f);

} // namespace mgs
