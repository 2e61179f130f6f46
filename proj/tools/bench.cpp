// Times the parallel kernels against their serial counterparts and checks
// that both produce the same numbers: the cycle census against its reference
// implementation, and the profile sweep against itself under a thread cap of
// one. Usage: bench [n] [m] [lmax].
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <set>
#include <vector>

#include "mlbalance/balance.hpp"
#include "mlbalance/cycles.hpp"
#include "mlbalance/parallel.hpp"
#include "mlbalance/signed_graph.hpp"

using namespace mlbalance;

namespace {

using Clock = std::chrono::steady_clock;

double seconds(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

SignedGraph random_graph(int n, int m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    std::set<std::pair<int, int>> pairs;
    while (static_cast<int>(pairs.size()) < m) {
        int u = pick(rng), v = pick(rng);
        if (u != v) pairs.insert({std::min(u, v), std::max(u, v)});
    }
    std::vector<Edge> edges;
    for (const auto& [u, v] : pairs) edges.push_back({u, v, coin(rng) ? 1 : -1});
    return SignedGraph(n, std::move(edges));
}

}  // namespace

int main(int argc, char** argv) {
    const int n = argc > 1 ? std::atoi(argv[1]) : 40;
    const int m = argc > 2 ? std::atoi(argv[2]) : 110;
    const int lmax = argc > 3 ? std::atoi(argv[3]) : 9;
    std::printf("threads=%d\n", max_threads());

    const SignedGraph g = random_graph(n, m, 20240817ULL);
    auto t0 = Clock::now();
    const CycleCensus serial = cycle_census_serial(g, lmax, true);
    auto t1 = Clock::now();
    const CycleCensus parallel = cycle_census(g, lmax, true);
    auto t2 = Clock::now();
    bool agree = serial.counts.size() == parallel.counts.size();
    long long total = 0;
    for (size_t i = 0; agree && i < serial.counts.size(); ++i) {
        agree = serial.counts[i].positive == parallel.counts[i].positive &&
                serial.counts[i].negative == parallel.counts[i].negative;
        total += serial.counts[i].positive + serial.counts[i].negative;
    }
    std::printf("census  n=%d m=%d lmax=%d cycles=%lld serial=%.3fs parallel=%.3fs agree=%s\n",
                n, m, lmax, total, seconds(t0, t1), seconds(t1, t2), agree ? "yes" : "NO");

    const SignedGraph ring = cycle_graph(300, 1);
    t0 = Clock::now();
    const auto wide = balance_profile(ring, default_profile_grid());
    t1 = Clock::now();
    setenv("MLBALANCE_THREADS", "1", 1);
    const auto narrow = balance_profile(ring, default_profile_grid());
    t2 = Clock::now();
    double max_diff = 0.0;
    for (size_t i = 0; i < wide.size(); ++i)
        max_diff = std::max(max_diff, std::fabs(wide[i].second - narrow[i].second));
    std::printf("profile n=300 points=%zu parallel=%.3fs capped=%.3fs max_diff=%.2e\n",
                wide.size(), seconds(t0, t1), seconds(t1, t2), max_diff);

    return agree && max_diff == 0.0 ? 0 : 1;
}
