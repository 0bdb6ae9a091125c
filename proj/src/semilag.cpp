#include "mgs/evolve.hpp"

#include <cmath>
#include <stdexcept>

namespace mgs {

namespace {

inline void catmull_rom_weights(double t, double w[4]) {
    // Interpolating cubic through 4 taps; exact at the nodes.
    double t2 = t * t, t3 = t2 * t;
    w[0] = 0.5 * (-t3 + 2.0 * t2 - t);
    w[1] = 0.5 * (3.0 * t3 - 5.0 * t2 + 2.0);
    w[2] = 0.5 * (-3.0 * t3 + 4.0 * t2 + t);
    w[3] = 0.5 * (t3 - t2);
}

inline int wrap(int i, int n) {
    i %= n;
    return i < 0 ? i + n : i;
}

} // namespace

double tricubic_periodic(const PhysicalScalar& f, double x1, double x2, double x3) {
    const Grid& g = f.grid;
    const double twopi = 2.0 * Grid::pi();

    auto locate = [&](double x, int n, int base[4], double w[4]) {
        double s = x / twopi * n;
        double fl = std::floor(s);
        int i0 = int(fl);
        catmull_rom_weights(s - fl, w);
        for (int d = 0; d < 4; ++d) base[d] = wrap(i0 - 1 + d, n);
    };

    int i1[4], i2[4], i3[4];
    double w1[4], w2[4], w3[4];
    locate(x1, g.n1, i1, w1);
    locate(x2, g.n2, i2, w2);
    locate(x3, g.n3, i3, w3);

    double acc = 0.0;
    for (int a = 0; a < 4; ++a) {
        double acc2 = 0.0;
        for (int b = 0; b < 4; ++b) {
            double acc3 = 0.0;
            const double* row = &f.samples[g.index(i1[a], i2[b], 0)];
            for (int c = 0; c < 4; ++c) acc3 += w3[c] * row[i3[c]];
            acc2 += w2[b] * acc3;
        }
        acc += w1[a] * acc2;
    }
    return acc;
}

PhysicalScalar transport_semilagrangian(const PhysicalScalar& theta0,
                                        const PhysicalParams& params, double t_end,
                                        double dt) {
    params.validate();
    if (params.eps_kappa != 0.0)
        throw std::invalid_argument("transport_semilagrangian: requires eps_kappa = 0");
    if (!(dt > 0.0)) throw std::invalid_argument("transport_semilagrangian: dt must be > 0");
    if (!theta0.finite())
        throw std::invalid_argument("transport_semilagrangian: non-finite samples");

    const Grid& g = theta0.grid;
    const std::size_t n = g.size();
    SymbolTable sym(g, params);

    // Inverse flow map stored as periodic displacement fields d: psi(x) = x + d(x).
    std::array<PhysicalScalar, 3> disp{PhysicalScalar(g), PhysicalScalar(g), PhysicalScalar(g)};

    PhysicalScalar theta = theta0;
    std::array<PhysicalScalar, 3> u{PhysicalScalar(g), PhysicalScalar(g), PhysicalScalar(g)};
    cvec spec(n), grid_c(n);

    auto compose = [&](double h) {
        // u = M[theta(t)] from the currently transported field
        SpectralScalar th = to_spectral(theta);
        dealias_inplace(th);
        for (int j = 0; j < 3; ++j) {
            for (std::size_t i = 0; i < n; ++i) spec[i] = sym.m[j][i] * th.coeffs[i];
            fft_backward(g, spec, grid_c);
            for (std::size_t i = 0; i < n; ++i) u[j].samples[i] = grid_c[i].real();
        }

        // Backward trace with a midpoint correction, then compose the map.
        std::array<PhysicalScalar, 3> disp_new{PhysicalScalar(g), PhysicalScalar(g),
                                               PhysicalScalar(g)};
        for (int i1 = 0; i1 < g.n1; ++i1) {
            double x1 = Grid::coord(i1, g.n1);
            for (int i2 = 0; i2 < g.n2; ++i2) {
                double x2 = Grid::coord(i2, g.n2);
                for (int i3 = 0; i3 < g.n3; ++i3) {
                    double x3 = Grid::coord(i3, g.n3);
                    std::size_t idx = g.index(i1, i2, i3);
                    double m1 = x1 - 0.5 * h * u[0].samples[idx];
                    double m2 = x2 - 0.5 * h * u[1].samples[idx];
                    double m3 = x3 - 0.5 * h * u[2].samples[idx];
                    double d1 = x1 - h * tricubic_periodic(u[0], m1, m2, m3);
                    double d2 = x2 - h * tricubic_periodic(u[1], m1, m2, m3);
                    double d3 = x3 - h * tricubic_periodic(u[2], m1, m2, m3);
                    disp_new[0].samples[idx] = tricubic_periodic(disp[0], d1, d2, d3) + (d1 - x1);
                    disp_new[1].samples[idx] = tricubic_periodic(disp[1], d1, d2, d3) + (d2 - x2);
                    disp_new[2].samples[idx] = tricubic_periodic(disp[2], d1, d2, d3) + (d3 - x3);
                }
            }
        }
        disp = std::move(disp_new);

        // theta(t) = theta0(psi(x)) through the composed map
        for (int i1 = 0; i1 < g.n1; ++i1) {
            double x1 = Grid::coord(i1, g.n1);
            for (int i2 = 0; i2 < g.n2; ++i2) {
                double x2 = Grid::coord(i2, g.n2);
                for (int i3 = 0; i3 < g.n3; ++i3) {
                    double x3 = Grid::coord(i3, g.n3);
                    std::size_t idx = g.index(i1, i2, i3);
                    theta.samples[idx] =
                        tricubic_periodic(theta0, x1 + disp[0].samples[idx],
                                          x2 + disp[1].samples[idx], x3 + disp[2].samples[idx]);
                }
            }
        }
    };

    double t = 0.0;
    while (t < t_end - 1e-12) {
        double h = std::min(dt, t_end - t);
        compose(h);
        t += h;
    }
    return theta;
}

} // namespace mgs
