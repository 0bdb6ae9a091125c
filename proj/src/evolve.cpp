#include "mgs/evolve.hpp"

#include <cmath>
#include <stdexcept>

namespace mgs {

SpectralScalar steady_state(const Grid& grid, const PhysicalParams& params) {
    params.validate();
    const int m = params.forcing_m;
    if (3 * m > grid.n3)
        throw std::invalid_argument("steady_state: forcing_m outside the dealiased band");
    SpectralScalar theta(grid);
    // A sin(m x3) = A/(2i) e^{i m x3} - A/(2i) e^{-i m x3}
    theta.at(0, 0, m) = {0.0, -0.5 * params.amplitude_A};
    theta.at(0, 0, -m) = {0.0, 0.5 * params.amplitude_A};
    return theta;
}

ForcingSpec ForcingSpec::mg_steady(const Grid& grid, const PhysicalParams& params) {
    ForcingSpec f;
    f.kind = ForcingKind::mg_steady;
    f.field = steady_state(grid, params);
    rvec ksq = squared_wavenumbers(grid);
    for (std::size_t i = 0; i < f.field.coeffs.size(); ++i)
        f.field.coeffs[i] *= params.eps_kappa * ksq[i];
    return f;
}

ForcingSpec ForcingSpec::custom(SpectralScalar s) {
    if (std::abs(s.mean()) > 0.0)
        throw std::invalid_argument("ForcingSpec: source must be mean-free");
    ForcingSpec f;
    f.kind = ForcingKind::custom;
    f.field = std::move(s);
    return f;
}

SimState::SimState(SpectralScalar theta0, const PhysicalParams& p, ForcingSpec f)
    : theta(std::move(theta0)), params(p), forcing(std::move(f)) {
    params.validate();
    theta.zero_mean = true;
    theta.enforce_hermitian();
    dealias_inplace(theta);
    if (forcing.kind != ForcingKind::none && !(forcing.field.grid == theta.grid))
        throw std::invalid_argument("SimState: forcing grid mismatch");
    symbols = std::make_shared<SymbolTable>(theta.grid, params);
}

SpectralScalar div_u_product(const SpectralScalar& phi, const SpectralScalar& psi,
                             const SymbolTable& table, double* max_speed) {
    const Grid& g = phi.grid;
    if (!(psi.grid == g) || !(table.grid == g))
        throw std::invalid_argument("div_u_product: grid mismatch");
    const std::size_t n = g.size();
    cvec grid_a(n), grid_b(n), prod(n);

    // psi on the grid
    fft_backward(g, psi.coeffs, grid_a);
    rvec psi_phys(n);
    for (std::size_t i = 0; i < n; ++i) psi_phys[i] = grid_a[i].real();

    // u_j psi on the grid, transformed back, assembled into div(u psi)
    SpectralScalar out(g);
    double vmax = 0.0;
    for (int j = 0; j < 3; ++j) {
        for (std::size_t i = 0; i < n; ++i) grid_b[i] = table.m[j][i] * phi.coeffs[i];
        fft_backward(g, grid_b, grid_a);
        for (std::size_t i = 0; i < n; ++i) {
            double uj = grid_a[i].real();
            vmax = std::max(vmax, std::abs(uj));
            grid_a[i] = {uj * psi_phys[i], 0.0};
        }
        fft_forward(g, grid_a, prod);
        // accumulate i k_j * prod
        for (int i1 = 0; i1 < g.n1; ++i1) {
            for (int i2 = 0; i2 < g.n2; ++i2) {
                for (int i3 = 0; i3 < g.n3; ++i3) {
                    std::size_t idx = g.index(i1, i2, i3);
                    int kj = j == 0   ? Grid::wavenumber(i1, g.n1)
                             : j == 1 ? Grid::wavenumber(i2, g.n2)
                                      : Grid::wavenumber(i3, g.n3);
                    out.coeffs[idx] += std::complex<double>(0.0, kj) * prod[idx];
                }
            }
        }
    }
    if (max_speed) *max_speed = vmax;
    dealias_inplace(out);
    out.coeffs[0] = {0.0, 0.0};
    return out;
}

namespace {

// F = -dealias(div(u theta)) + S; the stiff diagonal part (diffusion and
// damping) lives in the integrating factor instead.
SpectralScalar nonstiff_rhs(const SpectralScalar& theta, const SimState& state,
                            double* max_speed) {
    SpectralScalar out = div_u_product(theta, theta, *state.symbols, max_speed);
    for (auto& c : out.coeffs) c = -c;
    if (state.forcing.kind != ForcingKind::none) {
        for (std::size_t i = 0; i < out.coeffs.size(); ++i)
            out.coeffs[i] += state.forcing.field.coeffs[i];
    }
    return out;
}

} // namespace

SpectralScalar rhs(const SimState& state) {
    SpectralScalar F = nonstiff_rhs(state.theta, state, nullptr);
    const rvec ksq = squared_wavenumbers(state.theta.grid);
    const double ek = state.params.eps_kappa;
    const double c = state.params.damping_c;
    for (std::size_t i = 0; i < F.coeffs.size(); ++i)
        F.coeffs[i] -= (ek * ksq[i] + c) * state.theta.coeffs[i];
    F.coeffs[0] = {0.0, 0.0};
    return F;
}

SimState step(const SimState& state, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("step: dt must be > 0");
    const Grid& g = state.theta.grid;
    const std::size_t n = g.size();
    const rvec ksq = squared_wavenumbers(g);
    const double c = state.params.damping_c;
    const double ek = state.params.eps_kappa;

    rvec E(n), Eh(n);
    for (std::size_t i = 0; i < n; ++i) {
        double L = ek * ksq[i] + c;
        E[i] = std::exp(-L * dt);
        Eh[i] = std::exp(-0.5 * L * dt);
    }

    double vmax = 0.0;
    const SpectralScalar& y = state.theta;

    SpectralScalar F1 = nonstiff_rhs(y, state, &vmax);

    SpectralScalar Y2(g);
    for (std::size_t i = 0; i < n; ++i)
        Y2.coeffs[i] = Eh[i] * (y.coeffs[i] + 0.5 * dt * F1.coeffs[i]);
    SpectralScalar F2 = nonstiff_rhs(Y2, state, nullptr);

    SpectralScalar Y3(g);
    for (std::size_t i = 0; i < n; ++i)
        Y3.coeffs[i] = Eh[i] * y.coeffs[i] + 0.5 * dt * F2.coeffs[i];
    SpectralScalar F3 = nonstiff_rhs(Y3, state, nullptr);

    SpectralScalar Y4(g);
    for (std::size_t i = 0; i < n; ++i)
        Y4.coeffs[i] = E[i] * y.coeffs[i] + dt * Eh[i] * F3.coeffs[i];
    SpectralScalar F4 = nonstiff_rhs(Y4, state, nullptr);

    SimState next = state;
    next.t = state.t + dt;
    for (std::size_t i = 0; i < n; ++i) {
        next.theta.coeffs[i] =
            E[i] * y.coeffs[i] +
            (dt / 6.0) * (E[i] * F1.coeffs[i] + 2.0 * Eh[i] * (F2.coeffs[i] + F3.coeffs[i]) +
                          F4.coeffs[i]);
    }
    next.theta.enforce_hermitian();

    const double h = 2.0 * Grid::pi() / std::max({g.n1, g.n2, g.n3});
    if (dt * vmax > h) next.cfl_warning = true;

    double sum = 0.0;
    for (const auto& v : next.theta.coeffs) sum += std::norm(v);
    if (!std::isfinite(sum)) throw std::runtime_error("step: non-finite field (blowup)");
    return next;
}

SimState run(SimState state, double t_end, double dt, std::vector<Observer>& observers) {
    if (!(t_end > state.t)) throw std::invalid_argument("run: t_end must exceed state.t");
    if (!(dt > 0.0)) throw std::invalid_argument("run: dt must be > 0");

    const double tiny = 1e-9 * dt;
    std::vector<double> next_sample(observers.size(), state.t);
    auto emit = [&](const SimState& s, bool force) {
        for (std::size_t i = 0; i < observers.size(); ++i) {
            double cad = observers[i].cadence;
            bool due = cad <= 0.0 || s.t + tiny >= next_sample[i];
            if (due || force) {
                observers[i].fn(s.t, s.theta);
                if (cad > 0.0)
                    while (next_sample[i] <= s.t + tiny) next_sample[i] += cad;
            }
        }
    };

    emit(state, false);
    while (state.t < t_end - tiny) {
        double h = std::min(dt, t_end - state.t);
        state = step(state, h);
        emit(state, state.t >= t_end - tiny); // final sample lands on t_end
    }
    return state;
}

SimState run(SimState state, double t_end, double dt) {
    std::vector<Observer> none;
    return run(std::move(state), t_end, dt, none);
}

} // namespace mgs
