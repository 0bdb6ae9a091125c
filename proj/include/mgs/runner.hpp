#pragma once

#include "mgs/config.hpp"
#include "mgs/diagnostics.hpp"
#include "mgs/evolve.hpp"

#include <string>
#include <vector>

namespace mgs {

// Mean-free random field with Gaussian coefficients damped by
// exp(-|k|^2/(2 k0^2)) inside the dealiased band; deterministic in the seed
// (own Box-Muller, no library distributions).
SpectralScalar random_smooth_field(const Grid& grid, unsigned long long seed, double k0,
                                   double amplitude);

// theta0 = amplitude * sin(k . x).
SpectralScalar single_mode_field(const Grid& grid, int k1, int k2, int k3, double amplitude);

// Steady state plus delta*A * sin(k1 x1) sin(k2 x2) sin(x3).
SpectralScalar steady_plus_perturbation(const Grid& grid, const PhysicalParams& params,
                                        double delta, int k1, int k2);

// Initial data dispatch per config (reads checkpoints when asked).
SpectralScalar build_initial_data(const RunConfig& cfg);

// CSV with a header row; cells rendered with 17 significant digits.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);
std::string csv_cell(double v);

// Subcommand drivers; return a process exit status.
int run_simulate(const RunConfig& cfg);
int run_eigen(const RunConfig& cfg);
int run_scan(const RunConfig& cfg);
int run_kappa_sweep(const RunConfig& cfg);
int run_mild_solve(const RunConfig& cfg);
int run_check(const RunConfig& cfg);

} // namespace mgs
