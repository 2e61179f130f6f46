// Command-line surface: every analysis in the library, emitted as CSV or
// JSON-lines tables. Output is deterministic for identical inputs and flags;
// the only randomness is the gen:random generator, which demands --seed and
// echoes it in the output header.
#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mlbalance/balance.hpp"
#include "mlbalance/cycles.hpp"
#include "mlbalance/dynamics.hpp"
#include "mlbalance/io.hpp"
#include "mlbalance/mittag_leffler.hpp"
#include "mlbalance/signed_graph.hpp"
#include "mlbalance/spectral.hpp"

namespace {

using json = nlohmann::json;
using namespace mlbalance;

struct Table {
    std::vector<std::pair<std::string, std::string>> meta;  // echoed as "# key=value"
    std::vector<std::string> columns;
    std::vector<std::vector<json>> rows;
};

std::string csv_cell(const json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number_float()) return format_value(v.get<double>());
    return v.dump();
}

void render(const Table& t, bool jsonl, std::ostream& out) {
    if (jsonl) {
        if (!t.meta.empty()) {
            json meta;
            for (const auto& [k, v] : t.meta) meta[k] = v;
            out << json{{"meta", meta}}.dump() << '\n';
        }
        for (const auto& row : t.rows) {
            json obj;
            for (size_t i = 0; i < t.columns.size(); ++i) obj[t.columns[i]] = row[i];
            out << obj.dump() << '\n';
        }
        return;
    }
    for (const auto& [k, v] : t.meta) out << "# " << k << '=' << v << '\n';
    for (size_t i = 0; i < t.columns.size(); ++i)
        out << (i ? "," : "") << t.columns[i];
    out << '\n';
    for (const auto& row : t.rows) {
        for (size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
        out << '\n';
    }
}

struct CliError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int to_int(const std::string& s, const std::string& what) {
    try {
        size_t pos;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw CliError("bad " + what + " \"" + s + "\"");
    }
}

SignedGraph random_graph(int n, int m, std::uint64_t seed) {
    if (n < 2) throw CliError("gen:random needs n >= 2");
    const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
    if (m < 0 || m > max_edges) throw CliError("gen:random edge count out of range");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::set<std::pair<int, int>> pairs;
    while (static_cast<int>(pairs.size()) < m) {
        int u = pick(rng), v = pick(rng);
        if (u == v) continue;
        pairs.insert({std::min(u, v), std::max(u, v)});
    }
    std::uniform_int_distribution<int> coin(0, 1);
    std::vector<Edge> edges;
    for (const auto& [u, v] : pairs) edges.push_back({u, v, coin(rng) ? 1 : -1});
    return SignedGraph(n, std::move(edges));
}

// Input tokens are file paths or generator specs: gen:cycle:n:k,
// gen:petersen:a..e, gen:random:n:m (the latter requires --seed).
struct InputSet {
    std::vector<std::string> tokens;
    std::optional<std::uint64_t> seed;
    bool used_random = false;

    SignedGraph load(size_t index) {
        const std::string& tok = tokens[index];
        if (tok.rfind("gen:", 0) != 0) {
            std::ifstream in(tok);
            if (!in) throw CliError(tok + ": cannot open input file");
            std::stringstream buf;
            buf << in.rdbuf();
            try {
                return parse_edge_list(buf.str());
            } catch (const ParseError& e) {
                throw CliError(tok + ": " + e.what());
            }
        }
        std::vector<std::string> parts;
        std::stringstream ss(tok);
        std::string item;
        while (std::getline(ss, item, ':')) parts.push_back(item);
        if (parts.size() >= 2 && parts[1] == "cycle") {
            if (parts.size() != 4) throw CliError(tok + ": want gen:cycle:n:k");
            return cycle_graph(to_int(parts[2], "cycle length"), to_int(parts[3], "edge count"));
        }
        if (parts.size() >= 2 && parts[1] == "petersen") {
            if (parts.size() != 3 || parts[2].size() != 1 || parts[2][0] < 'a' || parts[2][0] > 'e')
                throw CliError(tok + ": want gen:petersen:a..e");
            return petersen_signings()[parts[2][0] - 'a'].graph;
        }
        if (parts.size() >= 2 && parts[1] == "random") {
            if (parts.size() != 4) throw CliError(tok + ": want gen:random:n:m");
            if (!seed) throw CliError(tok + ": gen:random requires --seed");
            used_random = true;
            // Mix the input position in so repeated specs give distinct graphs.
            const std::uint64_t mixed = *seed + 0x9e3779b97f4a7c15ULL * (index + 1);
            return random_graph(to_int(parts[2], "vertex count"), to_int(parts[3], "edge count"),
                                mixed);
        }
        throw CliError(tok + ": unknown generator (want gen:cycle, gen:petersen, gen:random)");
    }
};

std::string alpha_label(double a) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", a);
    return buf;
}

MLParams params_for(double alpha, const std::optional<double>& gamma) {
    return gamma ? MLParams(alpha, *gamma) : MLParams(alpha);
}

std::vector<double> parse_alpha_grid(const std::string& spec) {
    std::vector<double> grid;
    if (spec.find(':') != std::string::npos) {
        double lo, hi, step;
        char c1, c2;
        std::istringstream ss(spec);
        if (!(ss >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':' || !(step > 0) ||
            hi < lo)
            throw CliError("--alpha-grid: want lo:hi:step");
        // Index-based so accumulation drift cannot push a point past hi.
        const int count = static_cast<int>(std::floor((hi - lo) / step + 1e-9)) + 1;
        for (int i = 0; i < count; ++i) grid.push_back(std::min(lo + i * step, hi));
    } else {
        std::istringstream ss(spec);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                grid.push_back(std::stod(item));
            } catch (const std::exception&) {
                throw CliError("--alpha-grid: bad value \"" + item + "\"");
            }
        }
    }
    if (grid.empty()) throw CliError("--alpha-grid: empty grid");
    for (double a : grid)
        if (!(a > 0.0) || a > 1.0) throw CliError("--alpha-grid: values must lie in (0, 1]");
    return grid;
}

struct Options {
    InputSet inputs;
    std::vector<double> alphas;
    std::string alpha_grid;
    std::optional<double> gamma;
    double beta = 1.0;
    std::optional<double> chi;
    double tolerance = 1e-5;
    double dt = 1.0;
    std::optional<double> tmax;
    int lmax = 9;
    bool allow_large = false;
    int r = 10;
    std::optional<int> impulse;
    std::string format = "csv";
    std::string output;
};

Vector initial_condition(const SignedGraph& g, const std::optional<int>& impulse) {
    if (!impulse) return default_initial_condition(g.order());
    if (*impulse < 0 || *impulse >= g.order()) throw CliError("--impulse vertex out of range");
    Vector u0 = Vector::Zero(g.order());
    u0(*impulse) = 1.0;
    return u0;
}

Table cmd_balance(Options& opt) {
    Table t;
    t.columns = {"graph", "n", "m", "balanced", "K_exp", "positive_part", "negative_part"};
    for (double a : opt.alphas) t.columns.push_back("K_" + alpha_label(a));
    for (size_t i = 0; i < opt.inputs.tokens.size(); ++i) {
        const SignedGraph g = opt.inputs.load(i);
        const BalanceReport exp_report = k_exp(g, opt.beta);
        std::vector<json> row = {opt.inputs.tokens[i], g.order(), g.size(),
                                 is_balanced(g).balanced, exp_report.index,
                                 exp_report.positive_part, exp_report.negative_part};
        for (double a : opt.alphas) row.push_back(k_ml(g, params_for(a, opt.gamma)).index);
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table cmd_profile(Options& opt) {
    const std::vector<double> grid =
        opt.alpha_grid.empty() ? default_profile_grid() : parse_alpha_grid(opt.alpha_grid);
    Table t;
    t.columns = {"graph", "alpha", "K"};
    for (size_t i = 0; i < opt.inputs.tokens.size(); ++i) {
        const SignedGraph g = opt.inputs.load(i);
        for (const auto& [a, k] : balance_profile(g, grid, opt.gamma))
            t.rows.push_back({opt.inputs.tokens[i], a, k});
    }
    return t;
}

Table cmd_cycles(Options& opt) {
    Table t;
    t.columns = {"graph", "length", "positive", "negative"};
    for (size_t i = 0; i < opt.inputs.tokens.size(); ++i) {
        const SignedGraph g = opt.inputs.load(i);
        const CycleCensus census = cycle_census(g, opt.lmax, opt.allow_large);
        for (const auto& c : census.counts)
            t.rows.push_back({opt.inputs.tokens[i], c.length, c.positive, c.negative});
    }
    return t;
}

Table cmd_consensus(Options& opt) {
    Table t;
    t.columns = {"graph", "n", "t_c", "final_spread", "dissensus"};
    for (size_t i = 0; i < opt.inputs.tokens.size(); ++i) {
        const SignedGraph g = opt.inputs.load(i);
        const Vector u0 = initial_condition(g, opt.impulse);
        const ConsensusResult res =
            consensus_time(g, u0, opt.tolerance, opt.dt, opt.tmax.value_or(1000.0));
        t.rows.push_back({opt.inputs.tokens[i], g.order(),
                          res.t_c ? json(*res.t_c) : json(nullptr), res.final_spread,
                          res.dissensus});
    }
    return t;
}

Table cmd_diffuse(Options& opt) {
    if (opt.inputs.tokens.size() != 1) throw CliError("diffuse takes exactly one input");
    const SignedGraph g = opt.inputs.load(0);
    const double alpha = opt.alphas.empty() ? 1.0 : opt.alphas.front();
    if (opt.alphas.size() > 1) throw CliError("diffuse takes a single --alpha");
    double chi;
    if (opt.chi) {
        chi = *opt.chi;
    } else {
        chi = sym_eig(abs_adjacency(g), false).eigenvalues(0);  // conservative default
    }
    const double tmax = opt.tmax.value_or(50.0);
    std::vector<double> times;
    for (int k = 0;; ++k) {
        const double tk = k * opt.dt;
        if (tk > tmax + 1e-9) break;
        times.push_back(tk);
    }
    const Vector u0 = initial_condition(g, opt.impulse);
    const DiffusionTrajectory traj = frac_diffusion_trajectory(g, chi, alpha, u0, times);
    Table t;
    t.meta = {{"graph", opt.inputs.tokens[0]},
              {"alpha", format_value(alpha)},
              {"chi", format_value(chi)}};
    t.columns = {"t"};
    for (int i = 0; i < g.order(); ++i) t.columns.push_back("v" + std::to_string(i));
    t.columns.push_back("total_mass");
    for (size_t k = 0; k < traj.times.size(); ++k) {
        std::vector<json> row = {traj.times[k]};
        for (int i = 0; i < g.order(); ++i) row.push_back(traj.states[k](i));
        row.push_back(traj.total_mass[k]);
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table cmd_approx(Options& opt) {
    const std::vector<double> alphas = opt.alphas.empty() ? default_alpha_c_grid() : opt.alphas;
    Table t;
    t.columns = {"graph", "alpha", "approx", "exact", "relative_error", "alpha_c"};
    for (size_t i = 0; i < opt.inputs.tokens.size(); ++i) {
        const SignedGraph g = opt.inputs.load(i);
        const MLParams tmpl = params_for(alphas.front(), opt.gamma);
        const std::optional<double> ac = alpha_c(g, tmpl);
        for (double a : alphas) {
            const GapApprox ga = k_ml_gap_approx(g, params_for(a, opt.gamma));
            t.rows.push_back({opt.inputs.tokens[i], a, ga.approx, ga.exact, ga.relative_error,
                              ac ? json(*ac) : json(nullptr)});
        }
    }
    return t;
}

Table cmd_moments(Options& opt) {
    if (opt.alphas.size() > 1) throw CliError("moments takes a single --alpha");
    const double alpha = opt.alphas.empty() ? 1.0 : opt.alphas.front();
    Table t;
    t.columns = {"graph", "k", "signed_moment", "unsigned_moment", "partial_ratio"};
    for (size_t i = 0; i < opt.inputs.tokens.size(); ++i) {
        const SignedGraph g = opt.inputs.load(i);
        const MomentLedger led = moment_ledger(g, alpha, opt.r);
        for (int k = 0; k <= led.r_effective; ++k)
            t.rows.push_back({opt.inputs.tokens[i], k, led.signed_moments[k],
                              led.unsigned_moments[k], led.partial_ratios[k]});
    }
    return t;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Structural balance of signed graphs via matrix functions"};
    app.require_subcommand(1);

    Options opt;

    auto add_common = [&](CLI::App* cmd, bool multi_input) {
        auto* positional = cmd->add_option("inputs", opt.inputs.tokens,
                                           "edge-list files or gen:... specs");
        positional->required();
        if (!multi_input) positional->expected(1);
        cmd->add_option_function<std::uint64_t>(
            "--seed", [&](std::uint64_t v) { opt.inputs.seed = v; },
            "seed for gen:random inputs");
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"csv", "jsonl", "json-lines"}));
        cmd->add_option("--output", opt.output, "write the table to this file");
        return cmd;
    };
    auto add_gamma = [&](CLI::App* cmd) {
        cmd->add_option_function<double>(
               "--gamma", [&](double v) { opt.gamma = v; },
               "walk scaling (default Gamma(alpha+1) per alpha)")
            ->check(CLI::PositiveNumber);
    };

    CLI::App* balance = add_common(app.add_subcommand("balance", "balance indices per graph"), true);
    balance->add_option("--alpha", opt.alphas, "memory parameters for extra K columns");
    balance->add_option("--beta", opt.beta, "inverse temperature of the exponential index")
        ->check(CLI::PositiveNumber);
    add_gamma(balance);

    CLI::App* profile = add_common(app.add_subcommand("profile", "K over an alpha grid"), true);
    profile->add_option("--alpha-grid", opt.alpha_grid, "lo:hi:step or comma list");
    add_gamma(profile);

    CLI::App* cycles = add_common(app.add_subcommand("cycles", "signed simple-cycle census"), true);
    cycles->add_option("--lmax", opt.lmax, "largest cycle length to count");
    cycles->add_flag("--allow-large", opt.allow_large, "permit lmax above the guard of 12");

    CLI::App* consensus =
        add_common(app.add_subcommand("consensus", "signed-Laplacian consensus times"), true);
    consensus->add_option("--tolerance", opt.tolerance, "spread threshold declaring consensus")
        ->check(CLI::PositiveNumber);
    consensus->add_option("--dt", opt.dt, "time grid step")->check(CLI::PositiveNumber);
    consensus->add_option("--tmax", opt.tmax, "give up beyond this time");
    consensus->add_option("--impulse", opt.impulse, "start from a unit impulse at this vertex");

    CLI::App* diffuse =
        add_common(app.add_subcommand("diffuse", "fractional diffusion trajectory"), false);
    diffuse->add_option("--alpha", opt.alphas, "memory parameter (single value)");
    diffuse->add_option("--chi", opt.chi, "diagonal shift of the diffusion operator "
                                          "(default: largest unsigned eigenvalue, echoed)");
    diffuse->add_option("--dt", opt.dt, "time grid step")->check(CLI::PositiveNumber);
    diffuse->add_option("--tmax", opt.tmax, "end of the time grid");
    diffuse->add_option("--impulse", opt.impulse, "start from a unit impulse at this vertex");

    CLI::App* approx =
        add_common(app.add_subcommand("approx", "spectral-gap approximation quality"), true);
    approx->add_option("--alpha", opt.alphas, "evaluation points (default: the alpha_c grid)");
    add_gamma(approx);

    CLI::App* moments = add_common(app.add_subcommand("moments", "truncated trace moments"), true);
    moments->add_option("--alpha", opt.alphas, "memory parameter (single value)");
    moments->add_option("--r", opt.r, "number of moments");

    CLI11_PARSE(app, argc, argv);

    try {
        Table table;
        if (balance->parsed()) table = cmd_balance(opt);
        if (profile->parsed()) table = cmd_profile(opt);
        if (cycles->parsed()) table = cmd_cycles(opt);
        if (consensus->parsed()) table = cmd_consensus(opt);
        if (diffuse->parsed()) table = cmd_diffuse(opt);
        if (approx->parsed()) table = cmd_approx(opt);
        if (moments->parsed()) table = cmd_moments(opt);

        if (opt.inputs.used_random)
            table.meta.insert(table.meta.begin(), {"seed", std::to_string(*opt.inputs.seed)});

        if (opt.output.empty()) {
            render(table, opt.format != "csv", std::cout);
        } else {
            std::ofstream out(opt.output);
            if (!out) throw CliError(opt.output + ": cannot open output file");
            render(table, opt.format != "csv", out);
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
