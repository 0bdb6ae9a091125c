#include "mgs/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace mgs {

namespace {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

// Split a comma list, respecting parentheses (norm labels carry commas).
std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char ch : s) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == ',' && depth == 0) {
            if (!trim(cur).empty()) out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!trim(cur).empty()) out.push_back(trim(cur));
    return out;
}

std::string join_list(const std::vector<std::string>& items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += ",";
        out += items[i];
    }
    return out;
}

std::string join_doubles(const std::vector<double>& items) {
    std::vector<std::string> s;
    for (double v : items) s.push_back(fmt17(v));
    return join_list(s);
}

struct KeyError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

double parse_double(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("");
        return d;
    } catch (...) {
        throw KeyError("config key '" + key + "': expected a number, got '" + v + "'");
    }
}

long long parse_int(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        long long d = std::stoll(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("");
        return d;
    } catch (...) {
        throw KeyError("config key '" + key + "': expected an integer, got '" + v + "'");
    }
}

std::vector<double> parse_double_list(const std::string& key, const std::string& v) {
    std::vector<double> out;
    for (const auto& item : split_list(v)) out.push_back(parse_double(key, item));
    return out;
}

} // namespace

std::vector<NormSpec> parse_norm_list(const std::vector<std::string>& labels) {
    std::vector<NormSpec> out;
    for (const auto& l : labels) out.push_back(NormSpec::parse(l));
    return out;
}

std::string RunConfig::serialize() const {
    std::ostringstream os;
    os << "[grid]\n";
    os << "n1 = " << n1 << "\n";
    os << "n2 = " << n2 << "\n";
    os << "n3 = " << n3 << "\n";
    os << "\n[params]\n";
    os << "n_squared = " << fmt17(params.n_squared) << "\n";
    os << "eps_nu = " << fmt17(params.eps_nu) << "\n";
    os << "eps_kappa = " << fmt17(params.eps_kappa) << "\n";
    os << "damping_c = " << fmt17(params.damping_c) << "\n";
    os << "amplitude_A = " << fmt17(params.amplitude_A) << "\n";
    os << "forcing_m = " << params.forcing_m << "\n";
    os << "\n[init]\n";
    os << "kind = " << init_kind << "\n";
    os << "k1 = " << init_k1 << "\n";
    os << "k2 = " << init_k2 << "\n";
    os << "k3 = " << init_k3 << "\n";
    os << "amplitude = " << fmt17(init_amplitude) << "\n";
    os << "delta = " << fmt17(init_delta) << "\n";
    os << "pert_k1 = " << pert_k1 << "\n";
    os << "pert_k2 = " << pert_k2 << "\n";
    os << "seed = " << seed << "\n";
    os << "random_k0 = " << fmt17(random_k0) << "\n";
    os << "checkpoint = " << checkpoint_path << "\n";
    os << "\n[run]\n";
    os << "dt = " << fmt17(dt) << "\n";
    os << "t_end = " << fmt17(t_end) << "\n";
    os << "observe_dt = " << fmt17(observe_dt) << "\n";
    os << "checkpoint_dt = " << fmt17(checkpoint_dt) << "\n";
    os << "forcing = " << forcing << "\n";
    os << "norms = " << join_list(norms) << "\n";
    os << "out_dir = " << out_dir << "\n";
    os << "\n[eigen]\n";
    os << "k1 = " << eig_k1 << "\n";
    os << "k2 = " << eig_k2 << "\n";
    os << "n_max = " << eig_n_max << "\n";
    os << "box = " << eig_box << "\n";
    os << "\n[scan]\n";
    os << "case = " << scan_case << "\n";
    os << "epsilons = " << join_doubles(scan_epsilons) << "\n";
    os << "alpha = " << fmt17(scan_alpha) << "\n";
    os << "\n[sweep]\n";
    os << "kappas = " << join_doubles(sweep_kappas) << "\n";
    os << "T = " << fmt17(sweep_T) << "\n";
    os << "sample_times = " << join_doubles(sweep_sample_times) << "\n";
    os << "\n[mild]\n";
    os << "T = " << fmt17(mild_T) << "\n";
    os << "p = " << fmt17(mild_p) << "\n";
    os << "tol = " << fmt17(mild_tol) << "\n";
    os << "max_iter = " << mild_max_iter << "\n";
    os << "nodes = " << mild_nodes << "\n";
    os << "panels = " << mild_panels << "\n";
    return os.str();
}

RunConfig RunConfig::parse_string(const std::string& text) {
    RunConfig cfg;
    std::istringstream is(text);
    std::string line, section;
    int lineno = 0;

    using Setter = std::function<void(const std::string&, const std::string&)>;
    std::map<std::string, Setter> setters;
    auto add = [&](const std::string& key, Setter s) { setters[key] = std::move(s); };

    add("grid.n1", [&](const std::string& k, const std::string& v) { cfg.n1 = int(parse_int(k, v)); });
    add("grid.n2", [&](const std::string& k, const std::string& v) { cfg.n2 = int(parse_int(k, v)); });
    add("grid.n3", [&](const std::string& k, const std::string& v) { cfg.n3 = int(parse_int(k, v)); });
    add("params.n_squared", [&](const std::string& k, const std::string& v) { cfg.params.n_squared = parse_double(k, v); });
    add("params.eps_nu", [&](const std::string& k, const std::string& v) { cfg.params.eps_nu = parse_double(k, v); });
    add("params.eps_kappa", [&](const std::string& k, const std::string& v) { cfg.params.eps_kappa = parse_double(k, v); });
    add("params.damping_c", [&](const std::string& k, const std::string& v) { cfg.params.damping_c = parse_double(k, v); });
    add("params.amplitude_A", [&](const std::string& k, const std::string& v) { cfg.params.amplitude_A = parse_double(k, v); });
    add("params.forcing_m", [&](const std::string& k, const std::string& v) { cfg.params.forcing_m = int(parse_int(k, v)); });
    add("init.kind", [&](const std::string&, const std::string& v) { cfg.init_kind = v; });
    add("init.k1", [&](const std::string& k, const std::string& v) { cfg.init_k1 = int(parse_int(k, v)); });
    add("init.k2", [&](const std::string& k, const std::string& v) { cfg.init_k2 = int(parse_int(k, v)); });
    add("init.k3", [&](const std::string& k, const std::string& v) { cfg.init_k3 = int(parse_int(k, v)); });
    add("init.amplitude", [&](const std::string& k, const std::string& v) { cfg.init_amplitude = parse_double(k, v); });
    add("init.delta", [&](const std::string& k, const std::string& v) { cfg.init_delta = parse_double(k, v); });
    add("init.pert_k1", [&](const std::string& k, const std::string& v) { cfg.pert_k1 = int(parse_int(k, v)); });
    add("init.pert_k2", [&](const std::string& k, const std::string& v) { cfg.pert_k2 = int(parse_int(k, v)); });
    add("init.seed", [&](const std::string& k, const std::string& v) { cfg.seed = (unsigned long long)(parse_int(k, v)); });
    add("init.random_k0", [&](const std::string& k, const std::string& v) { cfg.random_k0 = parse_double(k, v); });
    add("init.checkpoint", [&](const std::string&, const std::string& v) { cfg.checkpoint_path = v; });
    add("run.dt", [&](const std::string& k, const std::string& v) { cfg.dt = parse_double(k, v); });
    add("run.t_end", [&](const std::string& k, const std::string& v) { cfg.t_end = parse_double(k, v); });
    add("run.observe_dt", [&](const std::string& k, const std::string& v) { cfg.observe_dt = parse_double(k, v); });
    add("run.checkpoint_dt", [&](const std::string& k, const std::string& v) { cfg.checkpoint_dt = parse_double(k, v); });
    add("run.forcing", [&](const std::string&, const std::string& v) { cfg.forcing = v; });
    add("run.norms", [&](const std::string&, const std::string& v) { cfg.norms = split_list(v); });
    add("run.out_dir", [&](const std::string&, const std::string& v) { cfg.out_dir = v; });
    add("eigen.k1", [&](const std::string& k, const std::string& v) { cfg.eig_k1 = int(parse_int(k, v)); });
    add("eigen.k2", [&](const std::string& k, const std::string& v) { cfg.eig_k2 = int(parse_int(k, v)); });
    add("eigen.n_max", [&](const std::string& k, const std::string& v) { cfg.eig_n_max = int(parse_int(k, v)); });
    add("eigen.box", [&](const std::string& k, const std::string& v) { cfg.eig_box = int(parse_int(k, v)); });
    add("scan.case", [&](const std::string&, const std::string& v) { cfg.scan_case = v; });
    add("scan.epsilons", [&](const std::string& k, const std::string& v) { cfg.scan_epsilons = parse_double_list(k, v); });
    add("scan.alpha", [&](const std::string& k, const std::string& v) { cfg.scan_alpha = parse_double(k, v); });
    add("sweep.kappas", [&](const std::string& k, const std::string& v) { cfg.sweep_kappas = parse_double_list(k, v); });
    add("sweep.T", [&](const std::string& k, const std::string& v) { cfg.sweep_T = parse_double(k, v); });
    add("sweep.sample_times", [&](const std::string& k, const std::string& v) { cfg.sweep_sample_times = parse_double_list(k, v); });
    add("mild.T", [&](const std::string& k, const std::string& v) { cfg.mild_T = parse_double(k, v); });
    add("mild.p", [&](const std::string& k, const std::string& v) { cfg.mild_p = parse_double(k, v); });
    add("mild.tol", [&](const std::string& k, const std::string& v) { cfg.mild_tol = parse_double(k, v); });
    add("mild.max_iter", [&](const std::string& k, const std::string& v) { cfg.mild_max_iter = int(parse_int(k, v)); });
    add("mild.nodes", [&](const std::string& k, const std::string& v) { cfg.mild_nodes = int(parse_int(k, v)); });
    add("mild.panels", [&](const std::string& k, const std::string& v) { cfg.mild_panels = int(parse_int(k, v)); });

    while (std::getline(is, line)) {
        ++lineno;
        std::string s = trim(line);
        if (s.empty() || s[0] == '#' || s[0] == ';') continue;
        if (s.front() == '[') {
            if (s.back() != ']')
                throw KeyError("config line " + std::to_string(lineno) +
                               ": malformed section header '" + s + "'");
            section = s.substr(1, s.size() - 2);
            continue;
        }
        std::size_t eq = s.find('=');
        if (eq == std::string::npos)
            throw KeyError("config line " + std::to_string(lineno) + ": expected 'key = value' in '" +
                           s + "'");
        std::string key = trim(s.substr(0, eq));
        std::string value = trim(s.substr(eq + 1));
        std::string full = section.empty() ? key : section + "." + key;
        auto it = setters.find(full);
        if (it == setters.end())
            throw KeyError("config line " + std::to_string(lineno) + ": unknown key '" + full +
                           "'");
        it->second(full, value);
    }
    return cfg;
}

RunConfig RunConfig::parse_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_string(ss.str());
}

void RunConfig::validate() const {
    std::vector<std::string> errs;
    auto need = [&](bool ok, const std::string& msg) {
        if (!ok) errs.push_back(msg);
    };
    const std::vector<std::pair<int, std::string>> dims{
        {n1, "grid.n1"}, {n2, "grid.n2"}, {n3, "grid.n3"}};
    for (const auto& [n, key] : dims) need(n >= 8 && n % 2 == 0, key + " must be even and >= 8");
    need(params.n_squared > 0.0, "params.n_squared must be > 0");
    need(params.eps_nu >= 0.0, "params.eps_nu must be >= 0");
    need(params.eps_kappa >= 0.0, "params.eps_kappa must be >= 0");
    need(params.damping_c >= 0.0, "params.damping_c must be >= 0");
    need(params.forcing_m >= 1, "params.forcing_m must be >= 1");
    need(dt > 0.0, "run.dt must be > 0");
    need(t_end > 0.0, "run.t_end must be > 0");
    need(observe_dt >= 0.0, "run.observe_dt must be >= 0");
    need(init_kind == "single_mode" || init_kind == "mg_steady" ||
             init_kind == "mg_steady_plus_perturbation" || init_kind == "random_smooth" ||
             init_kind == "from_checkpoint",
         "init.kind must be one of single_mode|mg_steady|mg_steady_plus_perturbation|"
         "random_smooth|from_checkpoint");
    need(forcing == "none" || forcing == "mg_steady", "run.forcing must be none|mg_steady");
    need(mild_p > 3.0, "mild.p must be > 3");
    need(mild_tol > 0.0, "mild.tol must be > 0");
    need(scan_case == "i" || scan_case == "ii" || scan_case == "iii" || scan_case == "iv",
         "scan.case must be i|ii|iii|iv");
    try {
        parse_norm_list(norms);
    } catch (const std::exception& e) {
        errs.push_back(std::string("run.norms: ") + e.what());
    }
    if (!errs.empty()) {
        std::string msg = "invalid configuration:";
        for (const auto& e : errs) msg += "\n  - " + e;
        throw std::invalid_argument(msg);
    }
}

} // namespace mgs
