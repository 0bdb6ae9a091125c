#include "mgs/norms.hpp"

#include "mgs/fft.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace mgs {

namespace {

std::string trim_num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

} // namespace

std::string NormSpec::label() const {
    if (s == 0.0 && !homogeneous) {
        if (p == infinity()) return "Linf";
        std::ostringstream os;
        os << "L" << trim_num(p);
        return os.str();
    }
    std::ostringstream os;
    os << (homogeneous ? "Wdot(" : "W(") << trim_num(s) << "," << trim_num(p) << ")";
    return os.str();
}

NormSpec NormSpec::parse(const std::string& label) {
    if (label == "Linf") return Linf();
    if (label.size() > 1 && label[0] == 'L') {
        double p = std::stod(label.substr(1));
        return Lp(p);
    }
    bool hom = label.rfind("Wdot(", 0) == 0;
    bool inhom = label.rfind("W(", 0) == 0;
    if ((hom || inhom) && label.back() == ')') {
        std::size_t open = label.find('(');
        std::string body = label.substr(open + 1, label.size() - open - 2);
        std::size_t comma = body.find(',');
        if (comma != std::string::npos) {
            double s = std::stod(body.substr(0, comma));
            std::string ps = body.substr(comma + 1);
            double p = (ps == "inf") ? infinity() : std::stod(ps);
            NormSpec spec{s, p, hom};
            spec.validate();
            return spec;
        }
    }
    throw std::invalid_argument("NormSpec: cannot parse norm label '" + label + "'");
}

double lp_norm(const PhysicalScalar& f, double p) {
    if (p == NormSpec::infinity()) {
        double worst = 0.0;
        for (double v : f.samples) worst = std::max(worst, std::abs(v));
        return worst;
    }
    const double w = std::pow(2.0 * Grid::pi(), 3) / double(f.grid.size());
    double acc = 0.0;
    if (p == 2.0) {
        for (double v : f.samples) acc += v * v;
    } else {
        for (double v : f.samples) acc += std::pow(std::abs(v), p);
    }
    return std::pow(w * acc, 1.0 / p);
}

double spectral_l2(const SpectralScalar& f) {
    double acc = 0.0;
    for (const auto& c : f.coeffs) acc += std::norm(c);
    return std::sqrt(std::pow(2.0 * Grid::pi(), 3) * acc);
}

NormResult norm_detail(const SpectralScalar& f, const NormSpec& spec) {
    spec.validate();
    NormResult res;
    SpectralScalar g = f;
    const Grid& grid = f.grid;
    if (spec.homogeneous) {
        if (std::abs(g.coeffs[0]) > 0.0) {
            res.mean_excluded = true;
            g.coeffs[0] = {0.0, 0.0};
        }
        if (spec.s != 0.0) {
            for (std::size_t i = 1; i < g.coeffs.size(); ++i) {
                auto k = grid.wavevector(i);
                double ksq = double(k[0]) * k[0] + double(k[1]) * k[1] + double(k[2]) * k[2];
                g.coeffs[i] *= std::pow(ksq, 0.5 * spec.s);
            }
        }
    } else if (spec.s != 0.0) {
        for (std::size_t i = 0; i < g.coeffs.size(); ++i) {
            auto k = grid.wavevector(i);
            double ksq = double(k[0]) * k[0] + double(k[1]) * k[1] + double(k[2]) * k[2];
            g.coeffs[i] *= std::pow(1.0 + ksq, 0.5 * spec.s);
        }
    }
    res.value = lp_norm(to_physical(g), spec.p);
    return res;
}

double norm(const SpectralScalar& f, const NormSpec& spec) { return norm_detail(f, spec).value; }

double norm(const PhysicalScalar& f, const NormSpec& spec) {
    if (spec.s == 0.0 && !spec.homogeneous) return lp_norm(f, spec.p);
    return norm(to_spectral(f), spec);
}

} // namespace mgs
