#include "mgs/checkpoint.hpp"
#include "mgs/runner.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace mgs {

namespace {

// Deterministic standard normals from a seeded mt19937_64 (Box-Muller on
// 53-bit uniforms; avoids library distribution differences).
struct NormalDraws {
    std::mt19937_64 rng;
    bool have_spare = false;
    double spare = 0.0;

    explicit NormalDraws(unsigned long long seed) : rng(seed) {}

    double uniform() { return double(rng() >> 11) * 0x1.0p-53 + 0x1.0p-54; }

    double operator()() {
        if (have_spare) {
            have_spare = false;
            return spare;
        }
        double u1 = uniform(), u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * Grid::pi() * u2;
        spare = r * std::sin(a);
        have_spare = true;
        return r * std::cos(a);
    }
};

} // namespace

SpectralScalar random_smooth_field(const Grid& grid, unsigned long long seed, double k0,
                                   double amplitude) {
    NormalDraws draw(seed);
    SpectralScalar theta(grid);
    const int b1 = grid.n1 / 3, b2 = grid.n2 / 3, b3 = grid.n3 / 3;
    for (int k1 = -b1; k1 <= b1; ++k1)
        for (int k2 = -b2; k2 <= b2; ++k2)
            for (int k3 = -b3; k3 <= b3; ++k3) {
                if (k1 == 0 && k2 == 0 && k3 == 0) continue;
                double ksq = double(k1) * k1 + double(k2) * k2 + double(k3) * k3;
                double amp = std::exp(-ksq / (2.0 * k0 * k0));
                theta.at(k1, k2, k3) = std::complex<double>(draw(), draw()) * amp;
            }
    theta.enforce_hermitian();
    double l2 = spectral_l2(theta);
    if (l2 > 0.0)
        for (auto& c : theta.coeffs) c *= amplitude / l2;
    return theta;
}

SpectralScalar single_mode_field(const Grid& grid, int k1, int k2, int k3, double amplitude) {
    if (!grid.in_range(k1, k2, k3) || (k1 == 0 && k2 == 0 && k3 == 0))
        throw std::invalid_argument("single_mode_field: wavevector out of range or zero");
    SpectralScalar theta(grid);
    // amplitude * sin(k.x) = amplitude/(2i) (e^{ik.x} - e^{-ik.x})
    theta.at(k1, k2, k3) += std::complex<double>(0.0, -0.5 * amplitude);
    theta.at(-k1, -k2, -k3) += std::complex<double>(0.0, 0.5 * amplitude);
    return theta;
}

SpectralScalar steady_plus_perturbation(const Grid& grid, const PhysicalParams& params,
                                        double delta, int k1, int k2) {
    SpectralScalar theta = steady_state(grid, params);
    if (delta != 0.0) {
        // sin(k1 x1) sin(k2 x2) sin(x3) expands into 8 exponentials with
        // coefficients (+-i/2)^3 and sign from the parity of minus choices.
        double amp = delta * params.amplitude_A;
        for (int s1 : {+1, -1})
            for (int s2 : {+1, -1})
                for (int s3 : {+1, -1}) {
                    int minus = (s1 < 0) + (s2 < 0) + (s3 < 0);
                    // product of (1/2i) * (sign) per factor: (1/(2i))^3 = i/8
                    std::complex<double> c = std::complex<double>(0.0, 0.125);
                    if (minus % 2 == 1) c = -c;
                    theta.at(s1 * k1, s2 * k2, s3 * 1) += amp * c;
                }
    }
    return theta;
}

SpectralScalar build_initial_data(const RunConfig& cfg) {
    Grid grid(cfg.n1, cfg.n2, cfg.n3);
    if (cfg.init_kind == "single_mode")
        return single_mode_field(grid, cfg.init_k1, cfg.init_k2, cfg.init_k3,
                                 cfg.init_amplitude);
    if (cfg.init_kind == "mg_steady") return steady_state(grid, cfg.params);
    if (cfg.init_kind == "mg_steady_plus_perturbation")
        return steady_plus_perturbation(grid, cfg.params, cfg.init_delta, cfg.pert_k1,
                                        cfg.pert_k2);
    if (cfg.init_kind == "random_smooth")
        return random_smooth_field(grid, cfg.seed, cfg.random_k0, cfg.init_amplitude);
    if (cfg.init_kind == "from_checkpoint") {
        Checkpoint cp = read_checkpoint(cfg.checkpoint_path);
        if (!(cp.theta.grid == grid))
            throw std::invalid_argument("init.checkpoint: grid mismatch with config");
        return cp.theta;
    }
    throw std::invalid_argument("init.kind: unknown preset '" + cfg.init_kind + "'");
}

} // namespace mgs
