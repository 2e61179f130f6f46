#include "mlbalance/dynamics.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "mlbalance/io.hpp"
#include "mlbalance/mittag_leffler.hpp"
#include "mlbalance/parallel.hpp"
#include "mlbalance/spectral.hpp"

namespace mlbalance {
namespace {

double spread_of(const Vector& u) { return u.maxCoeff() - u.minCoeff(); }

void push_sample(DiffusionTrajectory& traj, double t, Vector u) {
    traj.times.push_back(t);
    traj.total_mass.push_back(u.sum());
    traj.states.push_back(std::move(u));
}

}  // namespace

Vector altafini_evolve(const SignedGraph& g, const Vector& u0, double t) {
    if (u0.size() != g.order()) throw std::invalid_argument("initial condition has wrong size");
    if (!std::isfinite(t)) throw std::invalid_argument("time must be finite");
    const Spectrum s = sym_eig(signed_laplacian(g), true);
    const Matrix& v = *s.eigenvectors;
    Vector w = v.transpose() * u0;
    for (int i = 0; i < w.size(); ++i) w(i) *= std::exp(-t * s.eigenvalues(i));
    return v * w;
}

ConsensusResult consensus_time(const SignedGraph& g, const Vector& u0, double tolerance,
                               double dt, double t_max) {
    if (u0.size() != g.order()) throw std::invalid_argument("initial condition has wrong size");
    if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance must be > 0");
    if (!(dt > 0.0)) throw std::invalid_argument("dt must be > 0");
    const Spectrum s = sym_eig(signed_laplacian(g), true);
    const Matrix& v = *s.eigenvectors;
    const Vector w0 = v.transpose() * u0;

    ConsensusResult res;
    res.t_c = std::nullopt;
    res.dissensus = false;
    std::vector<double> spreads;
    for (int step = 0;; ++step) {
        const double t = step * dt;
        if (t > t_max) break;
        Vector w = w0;
        for (int i = 0; i < w.size(); ++i) w(i) *= std::exp(-t * s.eigenvalues(i));
        Vector u = v * w;
        const double spread = spread_of(u);
        push_sample(res.trajectory, t, std::move(u));
        spreads.push_back(spread);
        if (spread < tolerance) {
            res.t_c = t;
            break;
        }
        // Balanced graphs settle into a bipolar steady state: the spread
        // stops moving while still above tolerance.
        if (step >= 10 && std::fabs(spread - spreads[step - 10]) <
                              1e-12 * spreads[step - 10]) {
            res.dissensus = true;
            break;
        }
    }
    res.final_spread = spreads.empty() ? 0.0 : spreads.back();
    return res;
}

Vector default_initial_condition(int n) {
    if (n < 1) throw std::invalid_argument("vertex count must be >= 1");
    Vector u0(n);
    for (int i = 0; i < n; ++i) u0(i) = n == 1 ? 0.0 : static_cast<double>(i) / (n - 1);
    return u0;
}

Vector frac_diffuse(const SignedGraph& g, double chi, double alpha, const Vector& u0, double t) {
    if (u0.size() != g.order()) throw std::invalid_argument("initial condition has wrong size");
    if (!(t >= 0.0)) throw std::invalid_argument("time must be >= 0");
    const Spectrum s = sym_eig(lerman_ghosh_laplacian(g, chi), true);
    const Matrix& v = *s.eigenvectors;
    Vector w = v.transpose() * u0;
    const double ta = std::pow(t, alpha);
    for (int i = 0; i < w.size(); ++i) w(i) *= ml_scalar(alpha, -ta * s.eigenvalues(i));
    return v * w;
}

DiffusionTrajectory frac_diffusion_trajectory(const SignedGraph& g, double chi, double alpha,
                                              const Vector& u0,
                                              const std::vector<double>& times) {
    if (u0.size() != g.order()) throw std::invalid_argument("initial condition has wrong size");
    if (times.empty() || times.front() != 0.0)
        throw std::invalid_argument("time grid must start at 0");
    for (size_t i = 1; i < times.size(); ++i)
        if (!(times[i] > times[i - 1]))
            throw std::invalid_argument("time grid must be strictly increasing");
    if (!(alpha > 0.0) || alpha > 1.0)
        throw std::domain_error("frac_diffusion_trajectory: alpha must lie in (0, 1]");

    const Spectrum s = sym_eig(lerman_ghosh_laplacian(g, chi), true);
    const Matrix& v = *s.eigenvectors;
    const Vector w0 = v.transpose() * u0;
    const int n = g.order();
    const int steps = static_cast<int>(times.size());

    std::vector<double> tas(steps);
    for (int k = 0; k < steps; ++k) {
        tas[k] = std::pow(times[k], alpha);
        if (!std::isfinite(tas[k])) throw std::invalid_argument("time grid value too large");
    }

    std::vector<Vector> states(steps);
#pragma omp parallel for schedule(dynamic) num_threads(max_threads())
    for (int k = 0; k < steps; ++k) {
        Vector w = w0;
        for (int i = 0; i < n; ++i) w(i) *= ml_scalar(alpha, -tas[k] * s.eigenvalues(i));
        states[k] = v * w;
    }

    DiffusionTrajectory traj;
    for (int k = 0; k < steps; ++k) push_sample(traj, times[k], std::move(states[k]));
    return traj;
}

double caputo_discrete(const std::vector<double>& uprime, double alpha, double h) {
    if (uprime.size() < 2) throw std::invalid_argument("need at least two derivative samples");
    if (!(h > 0.0)) throw std::invalid_argument("step must be > 0");
    if (!(alpha > 0.0) || alpha > 1.0)
        throw std::domain_error("caputo_discrete: alpha must lie in (0, 1]");
    const int k = static_cast<int>(uprime.size()) - 1;
    const double e = 2.0 - alpha;
    double acc = (std::pow(k - 1.0, e) - (k + alpha - 2.0) * std::pow(k, 1.0 - alpha)) * uprime[0];
    for (int j = 1; j <= k - 1; ++j)
        acc += (std::pow(k - j + 1.0, e) - 2.0 * std::pow(k - j + 0.0, e) +
                std::pow(k - j - 1.0, e)) *
               uprime[j];
    acc += uprime[k];
    return std::pow(h, 1.0 - alpha) / std::tgamma(3.0 - alpha) * acc;
}

MassSeries mass_series(const DiffusionTrajectory& trajectory) {
    MassSeries ms;
    ms.mass = trajectory.total_mass;
    ms.deficit.reserve(ms.mass.size());
    for (double m : ms.mass) ms.deficit.push_back(m - (ms.mass.empty() ? 0.0 : ms.mass.front()));
    return ms;
}

std::string trajectory_csv(const DiffusionTrajectory& trajectory) {
    std::ostringstream out;
    const int n = trajectory.states.empty() ? 0 : static_cast<int>(trajectory.states[0].size());
    out << "t";
    for (int i = 0; i < n; ++i) out << ",v" << i;
    out << ",total_mass\n";
    for (size_t k = 0; k < trajectory.times.size(); ++k) {
        out << format_value(trajectory.times[k]);
        for (int i = 0; i < n; ++i) out << ',' << format_value(trajectory.states[k](i));
        out << ',' << format_value(trajectory.total_mass[k]) << '\n';
    }
    return out.str();
}

}  // namespace mlbalance
