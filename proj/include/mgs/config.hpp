#pragma once

#include "mgs/norms.hpp"
#include "mgs/params.hpp"

#include <string>
#include <vector>

namespace mgs {

// Flat "key = value" run configuration with [section] headers. Parsing is
// total: every error names the offending key (and line); serialize/parse is
// an identity on the struct.
struct RunConfig {
    // [grid]
    int n1 = 32, n2 = 32, n3 = 32;

    // [params]
    PhysicalParams params{1.0, 0.0, 0.1, 0.0, 1.0, 1};

    // [init]
    std::string init_kind = "single_mode"; // single_mode | mg_steady | mg_steady_plus_perturbation
                                           // | random_smooth | from_checkpoint
    int init_k1 = 0, init_k2 = 0, init_k3 = 1;
    double init_amplitude = 1.0;
    double init_delta = 1e-6;   // perturbation scale (times A) for the steady preset
    int pert_k1 = 1, pert_k2 = 1;
    unsigned long long seed = 1234;
    double random_k0 = 3.0;     // spectral decay scale of random_smooth
    std::string checkpoint_path;

    // [run]
    double dt = 1e-3;
    double t_end = 1.0;
    double observe_dt = 1e-2;
    double checkpoint_dt = 0.0; // 0: only final checkpoint
    std::string forcing = "none"; // none | mg_steady
    std::vector<std::string> norms = {"L2", "L3", "Linf"};
    std::string out_dir = "out";

    // [eigen]
    int eig_k1 = 1, eig_k2 = 1;
    int eig_n_max = 64;
    int eig_box = 0; // 0: single (k1,k2); else scan 1..box x 1..box

    // [scan]
    std::string scan_case = "ii"; // i | ii | iii | iv
    std::vector<double> scan_epsilons = {1e-1, 1e-2, 1e-3, 1e-4};
    double scan_alpha = 2.0;

    // [sweep]
    std::vector<double> sweep_kappas = {1e-1, 1e-2, 1e-3, 1e-4};
    double sweep_T = 1.0;
    std::vector<double> sweep_sample_times = {0.5};

    // [mild]
    double mild_T = 0.5;
    double mild_p = 4.0;
    double mild_tol = 1e-9;
    int mild_max_iter = 25;
    int mild_nodes = 24;
    int mild_panels = 8;

    void validate() const; // aggregate message naming each offending key
    std::string serialize() const;
    static RunConfig parse_string(const std::string& text);
    static RunConfig parse_file(const std::string& path);

    bool operator==(const RunConfig&) const = default;
};

std::vector<NormSpec> parse_norm_list(const std::vector<std::string>& labels);

} // namespace mgs
