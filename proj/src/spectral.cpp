#include "mlbalance/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "mlbalance/mittag_leffler.hpp"

namespace mlbalance {

namespace {

void check_params(double alpha, double gamma) {
    if (!(alpha > 0.0) || alpha > 1.0)
        throw std::domain_error("MLParams: alpha must lie in (0, 1]");
    if (!(gamma > 0.0)) throw std::domain_error("MLParams: gamma must be > 0");
}

}  // namespace

MLParams::MLParams(double a) : alpha(a), gamma(std::tgamma(a + 1.0)), gamma_defaulted(true) {
    check_params(alpha, gamma);
}

MLParams::MLParams(double a, double g) : alpha(a), gamma(g), gamma_defaulted(false) {
    check_params(alpha, gamma);
}

Spectrum sym_eig(const Matrix& M, bool want_vectors) {
    if (M.rows() != M.cols()) throw std::invalid_argument("sym_eig: matrix is not square");
    const double scale = std::max(1.0, M.cwiseAbs().maxCoeff());
    const double asym = (M - M.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-12 * scale)
        throw std::invalid_argument("sym_eig: matrix is not symmetric");

    Eigen::SelfAdjointEigenSolver<Matrix> solver(
        M, want_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("sym_eig: eigensolver failed to converge");

    Spectrum s;
    s.eigenvalues = solver.eigenvalues().reverse();  // ascending -> descending
    if (want_vectors) s.eigenvectors = solver.eigenvectors().rowwise().reverse();

    const int n = static_cast<int>(s.eigenvalues.size());
    const double tol = 1e-8 * std::max(1.0, std::fabs(s.eigenvalues(0)));
    int start = 0;
    for (int i = 1; i <= n; ++i) {
        if (i == n || s.eigenvalues(start) - s.eigenvalues(i) > tol) {
            const int mult = i - start;
            s.groups.push_back({s.eigenvalues.segment(start, mult).mean(), mult});
            start = i;
        }
    }
    return s;
}

double ml_trace(const Spectrum& s, const MLParams& p) {
    double sum = 0.0;
    for (int i = 0; i < s.eigenvalues.size(); ++i)
        sum += ml_scalar(p.alpha, p.gamma * s.eigenvalues(i));
    return sum;
}

double ml_trace_log(const Spectrum& s, const MLParams& p) {
    const int n = static_cast<int>(s.eigenvalues.size());
    std::vector<double> logs(n);
    double top = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        logs[i] = ml_scalar_log(p.alpha, p.gamma * s.eigenvalues(i));
        top = std::max(top, logs[i]);
    }
    double rest = 0.0;
    for (int i = 0; i < n; ++i) rest += std::exp(logs[i] - top);
    return top + std::log(rest);
}

}  // namespace mlbalance
