#include "mgs/runner.hpp"

#include "mgs/checkpoint.hpp"
#include "mgs/mild.hpp"
#include "mgs/stability.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace mgs {

namespace fs = std::filesystem;
using nlohmann::json;

std::string csv_cell(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
    std::ofstream os(path, std::ios::binary); // fixed \n endings for bit-stable outputs
    if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) os << ",";
        os << header[i];
    }
    os << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ",";
            os << csv_cell(row[i]);
        }
        os << "\n";
    }
}

namespace {

std::string sanitize(const std::string& label) {
    std::string out;
    for (char c : label) {
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '.')
            out += c;
        else if (c == ',' || c == '(')
            out += '_';
        // ')' dropped
    }
    return out;
}

json params_json(const PhysicalParams& p) {
    return json{{"n_squared", p.n_squared},   {"eps_nu", p.eps_nu},
                {"eps_kappa", p.eps_kappa},   {"damping_c", p.damping_c},
                {"amplitude_A", p.amplitude_A}, {"forcing_m", p.forcing_m}};
}

struct WallTimer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

} // namespace

int run_simulate(const RunConfig& cfg) {
    cfg.validate();
    WallTimer timer;
    fs::create_directories(cfg.out_dir);

    SpectralScalar theta0 = build_initial_data(cfg);
    ForcingSpec forcing = cfg.forcing == "mg_steady"
                              ? ForcingSpec::mg_steady(theta0.grid, cfg.params)
                              : ForcingSpec::none_();
    SimState state(std::move(theta0), cfg.params, std::move(forcing));

    std::vector<NormSpec> specs = parse_norm_list(cfg.norms);
    std::vector<NormSeries> series(specs.size());
    std::vector<Observer> observers;
    for (std::size_t i = 0; i < specs.size(); ++i)
        observers.push_back(norm_observer(series[i], specs[i], cfg.observe_dt));

    int checkpoints_written = 0;
    if (cfg.checkpoint_dt > 0.0) {
        observers.push_back(Observer{
            cfg.checkpoint_dt, [&](double t, const SpectralScalar& th) {
                char name[64];
                std::snprintf(name, sizeof name, "checkpoint_%012.6f.mgsp", t);
                write_checkpoint((fs::path(cfg.out_dir) / name).string(),
                                 Checkpoint{t, cfg.params, th});
                ++checkpoints_written;
            }});
    }

    std::string error;
    try {
        state = run(std::move(state), cfg.t_end, cfg.dt, observers);
    } catch (const std::exception& e) {
        error = e.what(); // blowup: keep whatever checkpoints exist, report failure
    }

    std::vector<std::string> header{"t"};
    for (std::size_t i = 0; i < specs.size(); ++i) header.push_back("norm_" + sanitize(cfg.norms[i]));
    std::vector<std::vector<double>> rows;
    if (!series.empty()) {
        for (std::size_t r = 0; r < series[0].size(); ++r) {
            std::vector<double> row{series[0].times[r]};
            for (const auto& s : series) row.push_back(r < s.size() ? s.values[r] : 0.0);
            rows.push_back(std::move(row));
        }
    }
    write_csv((fs::path(cfg.out_dir) / "norms.csv").string(), header, rows);

    if (error.empty())
        write_checkpoint((fs::path(cfg.out_dir) / "final.mgsp").string(),
                         Checkpoint{state.t, cfg.params, state.theta});

    json summary;
    summary["subcommand"] = "simulate";
    summary["grid"] = {cfg.n1, cfg.n2, cfg.n3};
    summary["params"] = params_json(cfg.params);
    summary["init"] = {{"kind", cfg.init_kind}, {"seed", cfg.seed}};
    summary["dt"] = cfg.dt;
    summary["t_end"] = cfg.t_end;
    summary["t_final"] = state.t;
    summary["cfl_warning"] = state.cfl_warning;
    summary["checkpoints"] = checkpoints_written;
    summary["wall_seconds"] = timer.seconds();
    summary["invariants"] = {
        {"mean_abs", std::abs(state.theta.mean())},
        {"hermitian_defect", state.theta.hermitian_defect()},
        {"imag_residue", imag_residue(state.theta)},
    };
    if (!error.empty()) summary["error"] = error;
    std::ofstream(fs::path(cfg.out_dir) / "summary.json") << summary.dump(2) << "\n";

    if (!error.empty()) {
        std::cerr << "simulate: aborted: " << error << "\n";
        return 3;
    }
    std::cout << "simulate: finished at t = " << state.t << " ("
              << timer.seconds() << " s), outputs in " << cfg.out_dir << "\n";
    return 0;
}

int run_eigen(const RunConfig& cfg) {
    cfg.validate();
    fs::create_directories(cfg.out_dir);
    std::vector<std::vector<double>> rows;

    auto solve_one = [&](int k1, int k2) {
        StabilityProblem prob{k1, k2, cfg.params, cfg.eig_n_max};
        SigmaBounds b = sigma_bounds(prob);
        CfOutcome cf = sigma_star_cf(prob, b);
        ModeCoefficients mc = sigma_star_matrix(prob, false);
        double sigma = cf.found ? cf.sigma : std::numeric_limits<double>::quiet_NaN();
        rows.push_back({cfg.params.eps_nu, cfg.params.eps_kappa, double(k1), double(k2), b.lower,
                        sigma, b.upper, double(cfg.eig_n_max), mc.residual});
        if (!cf.found)
            std::cout << "eigen: no unstable real root at (k1,k2)=(" << k1 << "," << k2 << ")\n";
    };

    if (cfg.eig_box > 0) {
        for (int k1 = 1; k1 <= cfg.eig_box; ++k1)
            for (int k2 = 1; k2 <= cfg.eig_box; ++k2) solve_one(k1, k2);
        std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
            double xa = std::isnan(a[5]) ? -1e300 : a[5];
            double xb = std::isnan(b[5]) ? -1e300 : b[5];
            return xa > xb;
        });
    } else {
        solve_one(cfg.eig_k1, cfg.eig_k2);
    }

    const std::vector<std::string> header{"eps_nu", "eps_kappa", "k1",    "k2",      "sigma_lower",
                                          "sigma_star", "sigma_upper", "n_max", "residual"};
    write_csv((fs::path(cfg.out_dir) / "eigen.csv").string(), header, rows);
    std::cout << "eigen: wrote " << rows.size() << " row(s) to " << cfg.out_dir
              << "/eigen.csv\n";
    return 0;
}

int run_scan(const RunConfig& cfg) {
    cfg.validate();
    fs::create_directories(cfg.out_dir);
    RegimeCase c = cfg.scan_case == "i"     ? RegimeCase::i
                   : cfg.scan_case == "ii"  ? RegimeCase::ii
                   : cfg.scan_case == "iii" ? RegimeCase::iii
                                            : RegimeCase::iv;
    RegimeScanResult res = regime_scan(c, cfg.params, cfg.scan_epsilons, cfg.scan_alpha);

    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < res.epsilon_values.size(); ++i)
        rows.push_back({res.epsilon_values[i], double(res.argmax_k[i][0]),
                        double(res.argmax_k[i][1]), res.bound_max[i], res.sigma_star[i]});
    write_csv((fs::path(cfg.out_dir) / "scan.csv").string(),
              {"epsilon", "k1", "k2", "bound_lower_max", "sigma_star"}, rows);

    json summary;
    summary["subcommand"] = "scan";
    summary["case"] = cfg.scan_case;
    summary["alpha"] = cfg.scan_alpha;
    summary["fitted_exponent"] = res.fitted_exponent;
    summary["boundary_warning"] = res.boundary_warning;
    summary["params"] = params_json(cfg.params);
    std::ofstream(fs::path(cfg.out_dir) / "scan.json") << summary.dump(2) << "\n";
    std::cout << "scan: case " << cfg.scan_case << " fitted exponent = " << res.fitted_exponent
              << (res.boundary_warning ? " (warning: maximizer on box boundary)" : "") << "\n";
    return 0;
}

int run_kappa_sweep(const RunConfig& cfg) {
    cfg.validate();
    fs::create_directories(cfg.out_dir);
    SpectralScalar theta0 = build_initial_data(cfg);
    auto rows = kappa_sweep_compare(theta0, cfg.params, cfg.sweep_kappas, cfg.sweep_T,
                                    cfg.sweep_sample_times, cfg.dt);
    std::vector<std::vector<double>> csv_rows;
    for (const auto& r : rows)
        csv_rows.push_back({r.eps_kappa, r.t, r.distance, r.dissipation});
    write_csv((fs::path(cfg.out_dir) / "kappa_sweep.csv").string(),
              {"eps_kappa", "t", "distance", "dissipation"}, csv_rows);

    json summary;
    summary["subcommand"] = "kappa-sweep";
    summary["T"] = cfg.sweep_T;
    summary["params"] = params_json(cfg.params);
    json diss = json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == 0 || rows[i].eps_kappa != rows[i - 1].eps_kappa)
            diss.push_back({{"eps_kappa", rows[i].eps_kappa}, {"dissipation", rows[i].dissipation}});
    }
    summary["dissipation_integrals"] = diss;
    std::ofstream(fs::path(cfg.out_dir) / "kappa_sweep.json") << summary.dump(2) << "\n";
    std::cout << "kappa-sweep: " << diss.size() << " runs compared against eps_kappa = 0\n";
    return 0;
}

int run_mild_solve(const RunConfig& cfg) {
    cfg.validate();
    fs::create_directories(cfg.out_dir);
    SpectralScalar theta0 = build_initial_data(cfg);
    PicardOptions opts;
    opts.max_iter = cfg.mild_max_iter;
    opts.tol = cfg.mild_tol;
    opts.p = cfg.mild_p;
    opts.nodes = cfg.mild_nodes;
    opts.quad.panels = cfg.mild_panels;
    MildIterate sol = picard_solve(theta0, cfg.mild_T, cfg.params, opts);
    double residual = mild_residual(sol, theta0, cfg.params, opts.quad);

    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < sol.time_nodes.size(); ++i)
        rows.push_back({sol.time_nodes[i], norm(sol.fields[i], NormSpec::L2()),
                        norm(sol.fields[i], NormSpec::Lp(cfg.mild_p))});
    write_csv((fs::path(cfg.out_dir) / "mild.csv").string(), {"t", "norm_L2", "norm_Lp"}, rows);

    json summary;
    summary["subcommand"] = "mild-solve";
    summary["T"] = sol.horizon_T;
    summary["iterations"] = sol.iterations;
    summary["halvings"] = sol.halvings;
    summary["weighted_norm"] = sol.weighted_norm;
    summary["residual"] = residual;
    summary["tol"] = cfg.mild_tol;
    summary["params"] = params_json(cfg.params);
    std::ofstream(fs::path(cfg.out_dir) / "mild.json") << summary.dump(2) << "\n";
    std::cout << "mild-solve: converged in " << sol.iterations << " iteration"
              << (sol.iterations == 1 ? "" : "s") << " (T = " << sol.horizon_T
              << ", residual = " << residual << ")\n";
    return 0;
}

} // namespace mgs
