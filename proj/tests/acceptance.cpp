// Release gate: every shipped claim checked end to end, one line per check.
// Exit code is the number of failed lines, so CI can gate on zero.
#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mlbalance/balance.hpp"
#include "mlbalance/cycles.hpp"
#include "mlbalance/dynamics.hpp"
#include "mlbalance/mittag_leffler.hpp"
#include "mlbalance/signed_graph.hpp"
#include "mlbalance/spectral.hpp"

using namespace mlbalance;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

std::string strf(const char* fmt, ...) {
    char buf[2048];
    va_list ap;
    va_start(ap, fmt);
    std::vsnprintf(buf, sizeof buf, fmt, ap);
    va_end(ap);
    return buf;
}

void report(const std::string& name, bool pass, const std::string& detail) {
    std::printf("%-5s %s  %s\n", name.c_str(), pass ? "PASS" : "FAIL", detail.c_str());
    if (!pass) ++g_failures;
}

bool within(double got, double want, double tol) { return std::fabs(got - want) <= tol; }

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    return sxy / std::sqrt(sxx * syy);
}

std::vector<double> midranks(const std::vector<double>& v) {
    const std::size_t n = v.size();
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && v[idx[j + 1]] == v[idx[i]]) ++j;
        const double rank = 0.5 * (static_cast<double>(i) + static_cast<double>(j)) + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[idx[k]] = rank;
        i = j + 1;
    }
    return ranks;
}

double spearman(const std::vector<double>& x, const std::vector<double>& y) {
    return pearson(midranks(x), midranks(y));
}

// Truncated matrix-power series for Tr E_a(gamma A) / Tr E_a(gamma |A|),
// independent of the eigensolver path: powers of A/mu_1 stay bounded and the
// shared weight exp(k log(gamma mu_1) - lgamma(a k + 1)) carries the scale.
double power_series_index(const SignedGraph& g, const MLParams& p) {
    const Matrix a = adjacency(g);
    const Matrix au = abs_adjacency(g);
    const double mu1 = sym_eig(au, false).eigenvalues(0);
    const Matrix bs = a / mu1;
    const Matrix bu = au / mu1;
    const double lrho = std::log(p.gamma * mu1);
    Matrix ps = Matrix::Identity(a.rows(), a.cols());
    Matrix pu = ps;
    const double n = static_cast<double>(a.rows());
    double num = 0.0, den = 0.0, wpeak = 0.0;
    for (int k = 0; k <= 1000; ++k) {
        if (k > 0) {
            ps = Matrix(ps * bs);
            pu = Matrix(pu * bu);
        }
        const double w = std::exp(k * lrho - std::lgamma(p.alpha * k + 1.0));
        num += w * ps.trace();
        den += w * pu.trace();
        // The weight is unimodal in k and Tr((|A|/mu_1)^k) <= n, so once the
        // weight has passed its peak every remaining term is below w * n.
        if (w < wpeak && w * n < 1e-18 * den) break;
        wpeak = std::max(wpeak, w);
    }
    return num / den;
}

SignedGraph planted_graph(int n, double p, bool balanced, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Edge> edges;
    std::set<std::pair<int, int>> used;
    if (balanced) {
        std::vector<int> color(n);
        for (int v = 0; v < n; ++v) color[v] = unit(rng) < 0.5 ? 1 : -1;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (unit(rng) < p) edges.push_back({u, v, color[u] * color[v]});
    } else {
        edges = {{0, 1, 1}, {1, 2, 1}, {0, 2, -1}};  // frustrated triangle
        used = {{0, 1}, {1, 2}, {0, 2}};
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!used.count({u, v}) && unit(rng) < p)
                    edges.push_back({u, v, unit(rng) < 0.4 ? -1 : 1});
    }
    return SignedGraph(n, edges);
}

// Connected random signed graph: a shuffled spanning path plus extra edges.
SignedGraph path_plus_random(int n, double extra_p, double neg_frac, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::set<std::pair<int, int>> pairs;
    for (int i = 0; i + 1 < n; ++i)
        pairs.insert({std::min(perm[i], perm[i + 1]), std::max(perm[i], perm[i + 1])});
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (unit(rng) < extra_p) pairs.insert({u, v});
    std::vector<Edge> edges;
    for (const auto& [u, v] : pairs) edges.push_back({u, v, unit(rng) < neg_frac ? -1 : 1});
    return SignedGraph(n, edges);
}

// Two 9-vertex communities: dense inside, sparse across, connected by a
// shuffled spanning path. Cross density and negative fraction are the knobs
// that move the spectral gap.
SignedGraph two_block_graph(double p_out, double neg_frac, std::mt19937_64& rng) {
    const int n = 18;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::set<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const bool same_block = (u < 9) == (v < 9);
            if (unit(rng) < (same_block ? 0.5 : p_out)) pairs.insert({u, v});
        }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int i = 0; i + 1 < n; ++i)
        pairs.insert({std::min(perm[i], perm[i + 1]), std::max(perm[i], perm[i + 1])});
    std::vector<Edge> edges;
    for (const auto& [u, v] : pairs) edges.push_back({u, v, unit(rng) < neg_frac ? -1 : 1});
    return SignedGraph(n, edges);
}

void criterion_1() {
    const auto t0 = Clock::now();
    const double k3 = k_exp(cycle_graph(3, 1)).index;
    const double k4 = k_exp(cycle_graph(4, 1)).index;
    const double k5 = k_exp(cycle_graph(5, 1)).index;
    const double k10 = k_exp(cycle_graph(10, 1)).index;
    const double secs = seconds_since(t0);
    const bool ok = within(k3, 0.686, 5e-4) && within(k4, 0.915, 5e-4) &&
                    within(k5, 0.983, 5e-4) && within(k10, 0.99999947, 5e-8) && secs < 1.0;
    report("C1", ok,
           strf("K1 golden: C3-=%.6f C4-=%.6f C5-=%.6f C10-=%.10f in %.3fs", k3, k4, k5, k10,
                secs));
}

void criterion_2() {
    const SignedGraph c10 = cycle_graph(10, 1);
    // The C10- golden values use unit walk scaling; the alpha = 1 trace
    // checks are scaling-free either way since Gamma(2) = 1.
    const double k05 = k_ml(c10, MLParams(0.5, 1.0)).index;
    const double k025 = k_ml(c10, MLParams(0.25, 1.0)).index;
    const BalanceReport r1 = k_ml(c10, MLParams(1.0));
    const bool ok = within(k05, 0.98290619, 5e-8) && within(k025, 0.109, 5e-4) &&
                    within(r1.numerator_trace, 22.7958, 5e-5) &&
                    within(r1.denominator_trace, 22.7959, 5e-5);
    report("C2", ok,
           strf("ML golden on C10-: K(0.5)=%.10f K(0.25)=%.6f traces %.7f/%.7f", k05, k025,
                r1.numerator_trace, r1.denominator_trace));
}

void criterion_3() {
    const auto signings = petersen_signings();
    const double k1_want[5] = {0.968, 0.951, 0.941, 0.947, 0.919};
    const double k05_want[5] = {0.3878, 0.1973, 0.1514, 0.1302, 0.0787};
    const long long totals[7] = {0, 0, 12, 10, 0, 15, 20};
    const long long neg5[5] = {4, 6, 8, 6, 12};
    const long long neg6[5] = {4, 6, 4, 10, 0};
    bool ok = true;
    std::string note;
    for (int i = 0; i < 5; ++i) {
        const SignedGraph& g = signings[i].graph;
        const double k1 = k_exp(g).index;
        const double k05 = k_ml(g, MLParams(0.5)).index;
        if (!within(k1, k1_want[i], 5e-4)) {
            ok = false;
            note += strf(" K1(%c)=%.5f off", signings[i].label, k1);
        }
        if (!within(k05, k05_want[i], 5e-5)) {
            ok = false;
            note += strf(" K05(%c)=%.8f vs %.4f+-5e-5", signings[i].label, k05, k05_want[i]);
        }
        const CycleCensus cen = cycle_census(g, 9);
        for (int len = 3; len <= 9; ++len)
            if (cen.positive_at(len) + cen.negative_at(len) != totals[len - 3]) {
                ok = false;
                note += strf(" total(%c,%d) off", signings[i].label, len);
            }
        if (cen.negative_at(5) != neg5[i] || cen.negative_at(6) != neg6[i]) {
            ok = false;
            note += strf(" census(%c) off", signings[i].label);
        }
    }
    const CycleCensus cc = cycle_census(signings[2].graph, 9);
    const CycleCensus cd = cycle_census(signings[3].graph, 9);
    if (cc.negative_at(8) != 8 || cc.negative_at(9) != 8 || cd.negative_at(8) != 0 ||
        cd.negative_at(9) != 10) {
        ok = false;
        note += " long-cycle census off";
    }
    const MomentLedger lc = moment_ledger(signings[2].graph, 1.0, 10);
    const MomentLedger ld = moment_ledger(signings[3].graph, 1.0, 10);
    double d5 = 0.0, d6 = 0.0, dmin = 1e300, dmax = -1e300;
    for (int k = 0; k <= 10; ++k) {
        const double d = lc.signed_moments[k] - ld.signed_moments[k];
        if (k == 5) d5 = d;
        if (k == 6) d6 = d;
        dmin = std::min(dmin, d);
        dmax = std::max(dmax, d);
    }
    if (!within(d5, -1.0 / 3.0, 1e-3) || !within(d6, 0.2, 1e-3) || dmin != d5 || dmax != d6) {
        ok = false;
        note += strf(" moment diffs %.4f/%.4f", d5, d6);
    }
    report("C3", ok, "Petersen suite: K1, K05, censuses, moment extrema" + note);
}

void criterion_4() {
    std::vector<double> grid;
    for (int i = 80; i <= 200; ++i) grid.push_back(i / 200.0);
    const auto signings = petersen_signings();
    const auto pc = balance_profile(signings[2].graph, grid);
    const auto pd = balance_profile(signings[3].graph, grid);
    std::vector<double> diff(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) diff[i] = pc[i].second - pd[i].second;
    const double d_half = diff[20];   // alpha = 0.5
    const double d_one = diff.back(); // alpha = 1.0
    double crossing = -1.0;
    for (std::size_t i = 0; i + 1 < diff.size(); ++i)
        if (diff[i] > 0.0 && diff[i + 1] <= 0.0) {
            crossing = grid[i] + (grid[i + 1] - grid[i]) * diff[i] / (diff[i] - diff[i + 1]);
            break;
        }
    // Deepening memory first widens the gap in favor of d, bottoming out
    // inside (0.75, 0.95), then the trend reverses and the difference turns
    // positive with its peak near 0.5. The zero crossing sits below the
    // reversal and is printed alongside so the full curve shape is on record.
    const std::size_t imin = static_cast<std::size_t>(
        std::min_element(diff.begin(), diff.end()) - diff.begin());
    const std::size_t imax = static_cast<std::size_t>(
        std::max_element(diff.begin(), diff.end()) - diff.begin());
    const double amin = grid[imin];
    const bool ok = d_half > 0.0 && d_one < 0.0 && amin > 0.75 && amin < 0.95;
    report("C4", ok,
           strf("K(c)-K(d): %.5f at 0.5, %.5f at 1.0, trend reverses at alpha=%.3f "
                "(peak at %.3f, zero at %.4f)",
                d_half, d_one, amin, grid[imax], crossing));
}

void criterion_5() {
    const auto signings = petersen_signings();
    std::vector<double> k1(5), k05(5), tc(5);
    bool have_tc = true;
    for (int i = 0; i < 5; ++i) {
        k1[i] = k_exp(signings[i].graph).index;
        k05[i] = k_ml(signings[i].graph, MLParams(0.5)).index;
        const ConsensusResult r =
            consensus_time(signings[i].graph, default_initial_condition(10));
        if (!r.t_c) have_tc = false;
        tc[i] = r.t_c.value_or(-1.0);
    }
    const double r2_05 = pearson(k05, tc) * pearson(k05, tc);
    const double r2_1 = pearson(k1, tc) * pearson(k1, tc);
    const bool ok = have_tc && r2_05 > r2_1;
    report("C5", ok,
           strf("t_c=(%g,%g,%g,%g,%g), r2(K05,tc)=%.4f > r2(K1,tc)=%.4f", tc[0], tc[1], tc[2],
                tc[3], tc[4], r2_05, r2_1));
}

void criterion_6() {
    std::mt19937_64 rng(20240819);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    int checked = 0;
    bool ok = true;
    std::string note;
    for (int trial = 0; trial < 200 && ok; ++trial) {
        const int n = 5 + static_cast<int>(rng() % 36);
        const bool balanced = trial % 2 == 0;
        const SignedGraph g = planted_graph(n, 0.15, balanced, rng);
        if (is_balanced(g).balanced != balanced) {
            ok = false;
            note = strf(" planted balance mismatch at trial %d", trial);
            break;
        }
        std::vector<int> subset;
        for (int v = 0; v < n; ++v)
            if (unit(rng) < 0.5) subset.push_back(v);
        const SignedGraph h = switched(g, subset);
        for (double a : {0.5, 1.0}) {
            const double k = k_ml(g, MLParams(a)).index;
            if (!(k >= 0.0 && k <= 1.0)) {
                ok = false;
                note = strf(" K out of [0,1] at trial %d", trial);
            }
            if ((k == 1.0) != balanced) {
                ok = false;
                note = strf(" K=1 iff balanced violated at trial %d (K=%.17g)", trial, k);
            }
            const double ks = k_ml(h, MLParams(a)).index;
            if (std::fabs(ks - k) > 1e-9 * std::fabs(k)) {
                ok = false;
                note = strf(" switching moved K by %.3g at trial %d", std::fabs(ks - k), trial);
            }
        }
        ++checked;
    }
    report("C6", ok,
           strf("bounds, K=1 iff balanced, switching invariance on %d graphs%s", checked,
                note.c_str()));
}

void criterion_7() {
    std::mt19937_64 rng(777);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst = 0.0;
    bool ok = true;
    for (int trial = 0; trial < 50; ++trial) {
        SignedGraph g(1, {});
        do {
            const int n = 3 + static_cast<int>(rng() % 6);
            std::vector<Edge> edges;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (unit(rng) < 0.5) edges.push_back({u, v, unit(rng) < 0.4 ? -1 : 1});
            g = SignedGraph(n, edges);
        } while (g.size() == 0);
        for (double a : {0.4, 0.7, 1.0}) {
            const MLParams p(a);
            const double spectral = k_ml(g, p).index;
            const double series = power_series_index(g, p);
            worst = std::max(worst, std::fabs(spectral - series) / std::fabs(series));
        }
    }
    ok = worst <= 1e-8;
    report("C7", ok, strf("eigensolver vs matrix-power series on 150 cases, worst rel %.2e",
                          worst));
}

void criterion_8() {
    bool ok = true;
    double worst = 0.0;
    for (double a : {0.25, 0.5, 0.75, 1.0}) {
        const MLParams p(a);
        for (int n = 3; n <= 12; ++n) {
            const double closed = k_ml_cycle_analytic(n, p);
            const double direct = k_ml(cycle_graph(n, 1), p).index;
            worst = std::max(worst, std::fabs(closed - direct) / std::fabs(direct));
        }
    }
    ok = worst <= 1e-9;
    double worst_bessel = 0.0;
    const double pi = 3.14159265358979323846;
    for (double a : {0.25, 0.5, 0.75, 1.0}) {
        const MLParams p(a);
        double den = 0.0;
        for (int k = 1; k <= 512; ++k)
            den += ml_scalar(a, 2.0 * p.gamma * std::cos(2.0 * pi * k / 512.0));
        const double limit = frac_bessel(0, a, 2.0 * p.gamma);
        worst_bessel = std::max(worst_bessel, std::fabs(den / 512.0 - limit));
    }
    ok = ok && worst_bessel <= 1e-3;
    report("C8", ok,
           strf("analytic ring formula worst rel %.2e; trace mean vs bessel limit %.2e", worst,
                worst_bessel));
}

void criterion_9() {
    const auto signings = petersen_signings();
    std::vector<SignedGraph> drains = {cycle_graph(3, 1), cycle_graph(4, 1), cycle_graph(5, 1),
                                       SignedGraph(4, {{0, 1, -1},
                                                       {0, 2, 1},
                                                       {0, 3, 1},
                                                       {1, 2, 1},
                                                       {1, 3, 1},
                                                       {2, 3, 1}})};
    for (int i = 1; i < 5; ++i) drains.push_back(signings[i].graph);
    double worst_mass = 0.0;
    for (const SignedGraph& g : drains) {
        const Vector u = altafini_evolve(g, default_initial_condition(g.order()), 50.0);
        worst_mass = std::max(worst_mass, std::fabs(u.sum()));
    }
    bool ok = worst_mass < 1e-6;

    // Balanced ring with negative edges and an uneven bipartition: the
    // kernel mode of the signed Laplacian carries nonzero mass forever.
    const SignedGraph ring = cycle_graph(5, 2);
    const Spectrum ls = sym_eig(signed_laplacian(ring), true);
    const Vector phi1 = ls.eigenvectors->col(4);  // eigenvalue 0, listed last
    const double kernel_eig = ls.eigenvalues(4);
    const double mass0 = phi1.sum();
    const double mass50 = altafini_evolve(ring, phi1, 50.0).sum();
    ok = ok && std::fabs(kernel_eig) < 1e-10 && std::fabs(mass0) > 0.5 &&
         std::fabs(mass50 - mass0) <= 1e-8;

    double worst_rel = 0.0;
    const std::pair<SignedGraph, double> regular[] = {{cycle_graph(10, 1), 2.0},
                                                      {signings[2].graph, 3.0}};
    for (const auto& [g, chi] : regular) {
        const Vector u0 = default_initial_condition(g.order());
        for (double t : {1.0, 5.0, 20.0}) {
            const Vector a = frac_diffuse(g, chi, 1.0, u0, t);
            const Vector b = altafini_evolve(g, u0, t);
            worst_rel = std::max(worst_rel,
                                 (a - b).cwiseAbs().maxCoeff() / b.cwiseAbs().maxCoeff());
        }
    }
    ok = ok && worst_rel <= 1e-9;
    report("C9", ok,
           strf("mass at t=50 max %.2e; kernel-mode drift %.2e; alpha=1 equivalence %.2e",
                worst_mass, std::fabs(mass50 - mass0), worst_rel));
}

void criterion_10() {
    const double linear_target = 1.0 / std::tgamma(1.5);
    double worst_linear = 0.0;
    for (int steps : {8, 16, 32, 64, 128}) {
        const std::vector<double> ones(steps + 1, 1.0);
        const double v = caputo_discrete(ones, 0.5, 1.0 / steps);
        worst_linear = std::max(worst_linear, std::fabs(v - linear_target));
    }

    const double exact = 2.2906982523032382093;  // half derivative of e^t at t=1
    std::vector<double> errs;
    for (int steps : {8, 16, 32, 64, 128}) {
        const double h = 1.0 / steps;
        std::vector<double> uprime;
        for (int j = 0; j <= steps; ++j) uprime.push_back(std::exp(j * h));
        errs.push_back(std::fabs(caputo_discrete(uprime, 0.5, h) - exact));
    }
    const double order = std::log2(errs[errs.size() - 2] / errs.back());
    const bool ok = worst_linear <= 1e-12 && order >= 1.8;
    report("C10", ok,
           strf("linear signal exact to %.2e; smooth-signal order %.3f", worst_linear, order));
}

void criterion_11() {
    std::mt19937_64 rng(909090);
    std::vector<SignedGraph> family;
    for (const auto& s : petersen_signings()) family.push_back(s.graph);
    while (family.size() < 25) {
        const int n = 8 + static_cast<int>(rng() % 13);
        const SignedGraph g = path_plus_random(n, 0.3, 0.3, rng);
        const double lam1 = sym_eig(adjacency(g), false).eigenvalues(0);
        const double mu1 = sym_eig(abs_adjacency(g), false).eigenvalues(0);
        if (mu1 - lam1 > 1e-8) family.push_back(g);
    }
    bool monotone = true;
    for (const SignedGraph& g : family) {
        const double e04 = k_ml_gap_approx(g, MLParams(0.4)).relative_error;
        const double e10 = k_ml_gap_approx(g, MLParams(1.0)).relative_error;
        if (!(e04 < e10)) monotone = false;
    }

    std::mt19937_64 rng2(171717);
    std::vector<double> ac(30), gap(30);
    for (int i = 0; i < 30; ++i) {
        const double p_out = 0.02 + 0.03 * (i % 10);
        const double neg_frac = 0.25 + 0.05 * (i / 10);
        SignedGraph g(1, {});
        do {
            g = two_block_graph(p_out, neg_frac, rng2);
        } while (is_balanced(g).balanced);
        ac[i] = alpha_c(g, MLParams(1.0)).value_or(0.15);
        const Spectrum s = sym_eig(adjacency(g), false);
        gap[i] = (s.eigenvalues(0) - s.eigenvalues(1)) / std::fabs(s.eigenvalues(0));
    }
    const double rho = spearman(ac, gap);
    const bool ok = monotone && rho > 0.7;
    report("C11", ok,
           strf("gap-approx error shrinks with alpha on all %zu graphs: %s; "
                "spearman(alpha_c, gap)=%.3f",
                family.size(), monotone ? "yes" : "no", rho));
}

void criterion_scale() {
    const std::string path = "/tmp/mlbalance_accept_scale.txt";
    {
        std::mt19937_64 rng(424242);
        std::uniform_int_distribution<int> pick(0, 999);
        std::set<std::pair<int, int>> pairs;
        while (pairs.size() < 3000) {
            const int u = pick(rng), v = pick(rng);
            if (u != v) pairs.insert({std::min(u, v), std::max(u, v)});
        }
        std::ofstream out(path);
        std::uniform_int_distribution<int> coin(0, 1);
        for (const auto& [u, v] : pairs)
            out << u << ' ' << v << ' ' << (coin(rng) ? "+1" : "-1") << '\n';
    }
    const auto t0 = Clock::now();
    const std::string cmd =
        std::string(MLBALANCE_BIN_PATH) + " balance " + path + " --alpha 0.5 > /dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    const double secs = seconds_since(t0);
    const bool exited_ok = rc != -1 && WIFEXITED(rc) && WEXITSTATUS(rc) == 0;
    const bool ok = exited_ok && secs < 60.0;
    std::remove(path.c_str());
    report("SCALE", ok, strf("1000-vertex edge list through the CLI in %.1fs", secs));
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_scale();
    std::printf("%d of 12 checks failed\n", g_failures);
    return g_failures;
}
