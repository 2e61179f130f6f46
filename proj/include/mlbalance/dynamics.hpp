#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mlbalance/signed_graph.hpp"

namespace mlbalance {

struct DiffusionTrajectory {
    std::vector<double> times;    // strictly increasing, times[0] is t=0
    std::vector<Vector> states;   // states[0] == initial condition
    std::vector<double> total_mass;
};

struct ConsensusResult {
    std::optional<double> t_c;  // first grid time with spread < tolerance
    double final_spread;
    bool dissensus;  // spread stalled above tolerance (balanced signed graphs)
    DiffusionTrajectory trajectory;
};

struct MassSeries {
    std::vector<double> mass;
    std::vector<double> deficit;  // mass(t) - mass(0)
};

// Exact solution of u' = -L_A u via the spectral decomposition of the
// signed Laplacian: sum_i exp(-t mu_i) phi_i phi_i^T u0.
Vector altafini_evolve(const SignedGraph& g, const Vector& u0, double t);

// Walks t = 0, dt, 2dt, ... up to t_max; stops at the first grid time where
// max_{u,v} |u_u - u_v| < tolerance, or reports dissensus when the spread
// stalls (relative change < 1e-12 over 10 steps) while above tolerance.
ConsensusResult consensus_time(const SignedGraph& g, const Vector& u0,
                               double tolerance = 1e-5, double dt = 1.0,
                               double t_max = 1000.0);

// Deterministic default initial condition u0_i = i/(n-1).
Vector default_initial_condition(int n);

// u(t) = E_a(-t^a L_chi) u0 over the spectrum of L_chi = chi*I - A.
Vector frac_diffuse(const SignedGraph& g, double chi, double alpha,
                    const Vector& u0, double t);

// frac_diffuse sampled over a time grid, with the total-mass series.
DiffusionTrajectory frac_diffusion_trajectory(const SignedGraph& g, double chi,
                                              double alpha, const Vector& u0,
                                              const std::vector<double>& times);

// Discrete Caputo derivative of order alpha from derivative samples
// u'(0), u'(h), ..., u'(kh): second-difference weights over the past plus
// the present sample, scaled by h^(1-alpha)/Gamma(2-alpha+1). At alpha = 1
// every past weight vanishes and the result is exactly u'(kh).
// `uprime` must hold at least two samples (k >= 1).
double caputo_discrete(const std::vector<double>& uprime, double alpha, double h);

MassSeries mass_series(const DiffusionTrajectory& trajectory);

// CSV rows "t,v0,...,v{n-1},total_mass" with a header, 12 significant digits.
std::string trajectory_csv(const DiffusionTrajectory& trajectory);

}  // namespace mlbalance
