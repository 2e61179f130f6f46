#include "mlbalance/balance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "mlbalance/mittag_leffler.hpp"
#include "mlbalance/parallel.hpp"

namespace mlbalance {
namespace {

constexpr double kUnitSnap = 1e-12;

double log_sum_exp(const std::vector<double>& logs) {
    double top = -std::numeric_limits<double>::infinity();
    for (double l : logs) top = std::max(top, l);
    if (!std::isfinite(top)) return top;
    double rest = 0.0;
    for (double l : logs) rest += std::exp(l - top);
    return top + std::log(rest);
}

BalanceReport report_from_spectra(const Spectrum& sa, const Spectrum& su, const MLParams& p) {
    BalanceReport r;
    r.alpha = p.alpha;
    r.gamma = p.gamma;
    r.numerator_trace = ml_trace(sa, p);
    r.denominator_trace = ml_trace(su, p);
    if (std::isfinite(r.numerator_trace) && std::isfinite(r.denominator_trace)) {
        r.index = std::fabs(r.numerator_trace - r.denominator_trace) <=
                          kUnitSnap * r.denominator_trace
                      ? 1.0
                      : r.numerator_trace / r.denominator_trace;
    } else {
        // Trace overflow: the ratio still makes sense, so take it in log space.
        const double d = ml_trace_log(sa, p) - ml_trace_log(su, p);
        r.index = std::fabs(d) <= kUnitSnap ? 1.0 : std::exp(d);
    }
    r.positive_part = (r.denominator_trace + r.numerator_trace) / 2.0;
    r.negative_part = (r.denominator_trace - r.numerator_trace) / 2.0;
    return r;
}

GapApprox gap_from_spectra(const Spectrum& sa, const Spectrum& su, const MLParams& p) {
    GapApprox ga;
    ga.exact = report_from_spectra(sa, su, p).index;
    const double m1 = static_cast<double>(sa.groups.front().second);
    const double lam1 = sa.groups.front().first;
    const double mu1 = su.groups.front().first;
    const double ea = ml_scalar(p.alpha, p.gamma * lam1);
    const double eb = ml_scalar(p.alpha, p.gamma * mu1);
    if (std::isfinite(ea) && std::isfinite(eb))
        ga.approx = m1 * ea / eb;
    else
        ga.approx = m1 * std::exp(ml_scalar_log(p.alpha, p.gamma * lam1) -
                                  ml_scalar_log(p.alpha, p.gamma * mu1));
    ga.relative_error = std::fabs(ga.approx - ga.exact) / std::fabs(ga.exact);
    return ga;
}

void check_grid(const std::vector<double>& grid) {
    if (grid.empty()) throw std::invalid_argument("alpha grid must not be empty");
    for (double a : grid)
        if (!(a > 0.0) || a > 1.0)
            throw std::domain_error("alpha grid values must lie in (0, 1]");
}

}  // namespace

BalanceReport k_exp(const SignedGraph& g, double beta) { return k_ml(g, MLParams(1.0, beta)); }

BalanceReport k_ml(const SignedGraph& g, const MLParams& p) {
    const Spectrum sa = sym_eig(adjacency(g), false);
    const Spectrum su = sym_eig(abs_adjacency(g), false);
    return report_from_spectra(sa, su, p);
}

double k_ml_cycle_analytic(int n, const MLParams& p) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    const double pi = 3.14159265358979323846;
    double num = 0.0, den = 0.0;
    for (int k = 1; k <= n; ++k) {
        num += ml_scalar(p.alpha, 2.0 * p.gamma * std::cos((2.0 * k + 1.0) * pi / n));
        den += ml_scalar(p.alpha, 2.0 * p.gamma * std::cos(2.0 * k * pi / n));
    }
    if (std::isfinite(num) && std::isfinite(den)) return num / den;
    std::vector<double> lnum(n), lden(n);
    for (int k = 1; k <= n; ++k) {
        lnum[k - 1] = ml_scalar_log(p.alpha, 2.0 * p.gamma * std::cos((2.0 * k + 1.0) * pi / n));
        lden[k - 1] = ml_scalar_log(p.alpha, 2.0 * p.gamma * std::cos(2.0 * k * pi / n));
    }
    return std::exp(log_sum_exp(lnum) - log_sum_exp(lden));
}

MomentLedger moment_ledger(const SignedGraph& g, double alpha, int r) {
    if (r < 0) throw std::invalid_argument("moment count must be >= 0");
    if (!(alpha > 0.0) || alpha > 1.0)
        throw std::domain_error("moment_ledger: alpha must lie in (0, 1]");
    const Spectrum sa = sym_eig(adjacency(g), false);
    const Spectrum su = sym_eig(abs_adjacency(g), false);
    const int n = g.order();

    MomentLedger led;
    led.r = r;
    led.r_effective = -1;
    long double run_s = 0.0L, run_u = 0.0L;
    for (int k = 0; k <= r; ++k) {
        long double ts = 0.0L, tu = 0.0L;
        for (int i = 0; i < n; ++i) {
            ts += powl(static_cast<long double>(sa.eigenvalues(i)), k);
            tu += powl(static_cast<long double>(su.eigenvalues(i)), k);
        }
        const long double inv_gamma = expl(-lgammal(static_cast<long double>(alpha) * k + 1.0L));
        const double ms = static_cast<double>(ts * inv_gamma);
        const double mu = static_cast<double>(tu * inv_gamma);
        if (!std::isfinite(ms) || !std::isfinite(mu)) break;  // double range exhausted
        led.signed_moments.push_back(ms);
        led.unsigned_moments.push_back(mu);
        run_s += ts * inv_gamma;
        run_u += tu * inv_gamma;
        led.partial_ratios.push_back(static_cast<double>(run_s / run_u));
        led.r_effective = k;
    }
    return led;
}

GapApprox k_ml_gap_approx(const SignedGraph& g, const MLParams& p) {
    const Spectrum sa = sym_eig(adjacency(g), false);
    const Spectrum su = sym_eig(abs_adjacency(g), false);
    return gap_from_spectra(sa, su, p);
}

const std::vector<double>& default_alpha_c_grid() {
    static const std::vector<double> grid = [] {
        std::vector<double> g;
        for (int i = 100; i >= 20; i -= 5) g.push_back(i / 100.0);
        return g;
    }();
    return grid;
}

std::optional<double> alpha_c(const SignedGraph& g, const MLParams& p_template, double threshold,
                              const std::vector<double>& grid) {
    check_grid(grid);
    if (!(threshold > 0.0)) throw std::domain_error("alpha_c: threshold must be > 0");
    std::vector<double> sorted = grid;
    std::sort(sorted.begin(), sorted.end(), std::greater<double>());
    const Spectrum sa = sym_eig(adjacency(g), false);
    const Spectrum su = sym_eig(abs_adjacency(g), false);
    for (double a : sorted) {
        const MLParams p = p_template.gamma_defaulted ? MLParams(a) : MLParams(a, p_template.gamma);
        if (gap_from_spectra(sa, su, p).relative_error < threshold) return a;
    }
    return std::nullopt;
}

const std::vector<double>& default_profile_grid() {
    static const std::vector<double> grid = [] {
        std::vector<double> g;
        for (int i = 40; i <= 100; i += 2) g.push_back(i / 100.0);
        return g;
    }();
    return grid;
}

std::vector<std::pair<double, double>> balance_profile(const SignedGraph& g,
                                                       const std::vector<double>& grid,
                                                       std::optional<double> gamma_override) {
    check_grid(grid);
    if (gamma_override && !(*gamma_override > 0.0))
        throw std::domain_error("gamma override must be > 0");
    const Spectrum sa = sym_eig(adjacency(g), false);
    const Spectrum su = sym_eig(abs_adjacency(g), false);
    std::vector<std::pair<double, double>> out(grid.size());
    const int points = static_cast<int>(grid.size());
#pragma omp parallel for schedule(dynamic) num_threads(max_threads())
    for (int i = 0; i < points; ++i) {
        const MLParams p =
            gamma_override ? MLParams(grid[i], *gamma_override) : MLParams(grid[i]);
        out[i] = {grid[i], report_from_spectra(sa, su, p).index};
    }
    return out;
}

}  // namespace mlbalance
