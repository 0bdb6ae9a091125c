#pragma once

#include "mgs/fft.hpp"
#include "mgs/multiplier.hpp"
#include "mgs/norms.hpp"

#include <functional>
#include <memory>
#include <vector>

namespace mgs {

enum class ForcingKind { none, mg_steady, custom };

// Source term S. The mg_steady variant derives S = eps_kappa * A * m^2 * sin(m x3)
// spectrally as eps_kappa * |k|^2 * Theta0-hat so the steady balance cancels
// exactly in floating point.
struct ForcingSpec {
    ForcingKind kind = ForcingKind::none;
    SpectralScalar field; // populated for mg_steady / custom

    static ForcingSpec none_() { return {}; }
    static ForcingSpec mg_steady(const Grid& grid, const PhysicalParams& params);
    static ForcingSpec custom(SpectralScalar s);
};

// The steady profile Theta0 = A sin(m x3) as a spectral field.
SpectralScalar steady_state(const Grid& grid, const PhysicalParams& params);

struct SimState {
    double t = 0.0;
    SpectralScalar theta;
    PhysicalParams params;
    ForcingSpec forcing;
    bool cfl_warning = false;

    std::shared_ptr<const SymbolTable> symbols; // cached per (grid, params)

    SimState() = default;
    SimState(SpectralScalar theta0, const PhysicalParams& p,
             ForcingSpec f = ForcingSpec::none_());
};

// Dealiased spectral divergence of u(phi) * psi with u = M[phi]; the common
// advection kernel of the time stepper and the Duhamel integral. Reports
// max |u| on the grid when asked.
SpectralScalar div_u_product(const SpectralScalar& phi, const SpectralScalar& psi,
                             const SymbolTable& table, double* max_speed = nullptr);

// Full right-hand side -dealias(div(u theta)) - eps_kappa|k|^2 theta + S - c theta.
SpectralScalar rhs(const SimState& state);

// One integrating-factor RK4 step; diffusion and damping are exact in the
// exponential multiplier. Advisory CFL check sets state.cfl_warning.
SimState step(const SimState& state, double dt);

struct Observer {
    double cadence = 0.0; // 0: every step
    std::function<void(double t, const SpectralScalar&)> fn;
};

SimState run(SimState state, double t_end, double dt, std::vector<Observer>& observers);
SimState run(SimState state, double t_end, double dt);

// Helper observer that appends norm samples into a series.
struct NormSeriesRef; // defined in diagnostics.hpp

// Pure-transport solution via backward characteristic tracing of the composed
// inverse flow map; requires eps_kappa = 0.
PhysicalScalar transport_semilagrangian(const PhysicalScalar& theta0,
                                        const PhysicalParams& params, double t_end, double dt);

// Periodic tricubic (Catmull-Rom) interpolation of grid samples.
double tricubic_periodic(const PhysicalScalar& f, double x1, double x2, double x3);

} // namespace mgs
