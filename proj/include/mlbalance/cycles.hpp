#pragma once

#include <array>
#include <string>
#include <vector>

#include "mlbalance/signed_graph.hpp"

namespace mlbalance {

// Exact per-length counts of simple cycles, split by sign product.
struct CycleCensus {
    struct LengthCount {
        int length;
        long long positive;
        long long negative;
    };
    std::vector<LengthCount> counts;  // lengths 3..l_max in order

    long long positive_at(int length) const;
    long long negative_at(int length) const;
};

// Counts every simple cycle of length 3..l_max once (anchored DFS: a cycle is
// discovered from its smallest vertex, in one orientation). l_max > 12 is
// rejected unless allow_large is set; the search is exponential in l_max.
// Parallel over anchor vertices when OpenMP is enabled.
CycleCensus cycle_census(const SignedGraph& g, int l_max, bool allow_large = false);

// Single-threaded reference implementation with identical output; kept for
// testing the parallel kernel and as the benchmark baseline.
CycleCensus cycle_census_serial(const SignedGraph& g, int l_max, bool allow_large = false);

// Ring 0-1-...-(n-1)-0 with the first `negative_edges` edges negative.
SignedGraph cycle_graph(int n, int negative_edges);

// The 3-regular Petersen graph on 10 vertices, all edges positive:
// outer 5-cycle 0..4, inner pentagram 5..9, spokes i-(i+5).
SignedGraph petersen_graph();

// The five switching classes of the signed Petersen graph whose cycle
// censuses match the published tables, labeled a..e. Baked constants,
// regenerable with the petersen_search tool.
struct LabeledGraph {
    char label;
    SignedGraph graph;
};

std::array<LabeledGraph, 5> petersen_signings();

// CSV rows "length,positive,negative" with a header.
std::string census_csv(const CycleCensus& census);

}  // namespace mlbalance
