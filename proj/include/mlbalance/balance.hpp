#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mlbalance/signed_graph.hpp"
#include "mlbalance/spectral.hpp"

namespace mlbalance {

// Ratio of signed to unsigned matrix-function traces, with the split into
// positive- and negative-walk contributions: pos - neg = numerator,
// pos + neg = denominator. index is snapped to exactly 1.0 when
// |num - den| <= 1e-12 * den. Under trace overflow the traces and parts are
// +infinity but index stays finite (computed in log space).
struct BalanceReport {
    double index;
    double numerator_trace;
    double denominator_trace;
    double positive_part;
    double negative_part;
    double alpha;  // 1 for the exponential index
    double gamma;  // beta for the exponential index
};

// K(G, beta) = Tr(exp(beta*A)) / Tr(exp(beta*|A|)).
BalanceReport k_exp(const SignedGraph& g, double beta = 1.0);

// K_a^g = Tr(E_a(gamma*A)) / Tr(E_a(gamma*|A|)).
BalanceReport k_ml(const SignedGraph& g, const MLParams& p);

// Closed form of k_ml for the unbalanced n-cycle, from the cosine spectra:
// sum_k E_a(2g cos((2k+1)pi/n)) / sum_k E_a(2g cos(2k pi/n)), k = 1..n.
double k_ml_cycle_analytic(int n, const MLParams& p);

// Truncated trace series Tr(A^k)/Gamma(a*k+1), k = 0..r, for A and |A|,
// with running ratios M_k. r_effective < r when a Gamma-scaled term leaves
// double range; moments come from eigenvalue powers, not matrix powers.
struct MomentLedger {
    int r;            // requested
    int r_effective;  // last k actually computed
    std::vector<double> signed_moments;
    std::vector<double> unsigned_moments;
    std::vector<double> partial_ratios;
};

MomentLedger moment_ledger(const SignedGraph& g, double alpha, int r);

// Spectral-gap approximation m_1 * E_a(g*lambda_1) / E_a(g*mu_1) and its
// relative error against the full index.
struct GapApprox {
    double approx;
    double exact;
    double relative_error;
};

GapApprox k_ml_gap_approx(const SignedGraph& g, const MLParams& p);

const std::vector<double>& default_alpha_c_grid();  // 1.00 down to 0.20, step 0.05

// Largest grid alpha whose gap-approximation relative error is below
// `threshold`, scanning the (descending) grid from the top; nullopt when no
// grid point qualifies. `p_template` supplies the gamma rule: a defaulted
// gamma is re-derived as Gamma(alpha+1) per grid point, an explicit one is
// used as-is.
std::optional<double> alpha_c(const SignedGraph& g, const MLParams& p_template,
                              double threshold = 0.1,
                              const std::vector<double>& grid = default_alpha_c_grid());

// k_ml over an alpha grid; gamma per point follows the same rule as alpha_c.
// Grid points are evaluated in parallel when OpenMP is enabled.
std::vector<std::pair<double, double>> balance_profile(
    const SignedGraph& g, const std::vector<double>& grid,
    std::optional<double> gamma_override = std::nullopt);

const std::vector<double>& default_profile_grid();  // 0.40 to 1.00, step 0.02

}  // namespace mlbalance
