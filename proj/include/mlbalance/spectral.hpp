#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mlbalance/signed_graph.hpp"

namespace mlbalance {

// Memory parameter alpha in (0,1] and walk-scaling gamma > 0.
// The one-argument form applies the default rule gamma = Gamma(alpha + 1);
// gamma_defaulted records which form was used so grid sweeps can re-derive
// the default per grid point.
struct MLParams {
    double alpha;
    double gamma;
    bool gamma_defaulted;

    explicit MLParams(double a);
    MLParams(double a, double g);
};

// Eigendecomposition of a real symmetric matrix. Eigenvalues descending;
// eigenvectors (optional) are orthonormal columns aligned with them. Groups
// cluster eigenvalues closer than tol = 1e-8 * max(1, |lambda_1|); the first
// group's multiplicity is the m_1 of the spectral-gap approximation.
struct Spectrum {
    Vector eigenvalues;
    std::optional<Matrix> eigenvectors;
    std::vector<std::pair<double, int>> groups;  // (representative value, multiplicity)
};

// Throws std::invalid_argument if M is not square-symmetric
// (max asymmetry > 1e-12 * max(1, max|M_ij|)).
Spectrum sym_eig(const Matrix& M, bool want_vectors);

// sum_j E_a(gamma * lambda_j). +infinity if any term overflows.
double ml_trace(const Spectrum& s, const MLParams& p);

// log of the same trace, finite under overflow (log-sum-exp).
double ml_trace_log(const Spectrum& s, const MLParams& p);

}  // namespace mlbalance
