#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace mlbalance {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Undirected signed edge; normalized so u < v, sign is exactly +1 or -1.
struct Edge {
    int u;
    int v;
    int sign;

    friend bool operator==(const Edge&, const Edge&) = default;
};

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, int line_number)
        : std::runtime_error("line " + std::to_string(line_number) + ": " + msg),
          line(line_number) {}
    int line;
};

// Simple undirected graph with +-1 edge signs. Vertex ids are [0, n).
// No self-loops, no duplicate edges; invariants enforced at construction.
class SignedGraph {
  public:
    SignedGraph(int n, std::vector<Edge> edges);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    friend bool operator==(const SignedGraph&, const SignedGraph&) = default;

  private:
    int n_;
    std::vector<Edge> edges_;  // sorted by (u, v)
};

// Parses "u v s" lines, s in {+1, -1, +, -}; '#' starts a comment.
// n = 1 + max vertex id. Throws ParseError with the offending line number.
SignedGraph parse_edge_list(const std::string& text);

Matrix adjacency(const SignedGraph& g);
Matrix abs_adjacency(const SignedGraph& g);

// Unsigned-degree diagonal minus signed adjacency; positive semidefinite.
Matrix signed_laplacian(const SignedGraph& g);

// chi*I - A.
Matrix lerman_ghosh_laplacian(const SignedGraph& g, double chi);

// Flips the sign of every edge with exactly one endpoint in `subset`.
// The underlying unsigned graph (and the balance class) is unchanged.
SignedGraph switched(const SignedGraph& g, const std::vector<int>& subset);

struct BalanceCheck {
    bool balanced;
    // Present iff balanced: a 2-coloring where every negative edge crosses
    // colors and every positive edge stays inside one.
    std::optional<std::vector<int>> coloring;
};

// Sign-aware 2-coloring propagation per connected component.
BalanceCheck is_balanced(const SignedGraph& g);

}  // namespace mlbalance
