#include "mlbalance/signed_graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

namespace mlbalance {

SignedGraph::SignedGraph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 1) throw std::invalid_argument("vertex count must be >= 1");
    std::set<std::pair<int, int>> seen;
    for (Edge& e : edges) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
        if (e.u < 0 || e.v >= n)
            throw std::invalid_argument("vertex id out of range: (" + std::to_string(e.u) +
                                        ", " + std::to_string(e.v) + ")");
        if (e.sign != 1 && e.sign != -1)
            throw std::invalid_argument("edge sign must be +1 or -1");
        if (!seen.insert({e.u, e.v}).second)
            throw std::invalid_argument("duplicate edge (" + std::to_string(e.u) + ", " +
                                        std::to_string(e.v) + ")");
    }
    std::sort(edges.begin(), edges.end(),
              [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
    edges_ = std::move(edges);
}

SignedGraph parse_edge_list(const std::string& text) {
    std::vector<Edge> edges;
    int max_id = 0;
    std::istringstream in(text);
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string u_tok, v_tok, s_tok;
        if (!(fields >> u_tok)) continue;  // blank or comment-only line
        if (!(fields >> v_tok >> s_tok))
            throw ParseError("expected \"u v s\"", line_number);
        std::string extra;
        if (fields >> extra) throw ParseError("trailing token \"" + extra + "\"", line_number);

        int u, v, sign;
        try {
            size_t pos;
            u = std::stoi(u_tok, &pos);
            if (pos != u_tok.size()) throw std::invalid_argument(u_tok);
            v = std::stoi(v_tok, &pos);
            if (pos != v_tok.size()) throw std::invalid_argument(v_tok);
        } catch (const std::exception&) {
            throw ParseError("bad vertex id", line_number);
        }
        if (s_tok == "+" || s_tok == "+1")
            sign = 1;
        else if (s_tok == "-" || s_tok == "-1")
            sign = -1;
        else
            throw ParseError("bad sign \"" + s_tok + "\" (want +1, -1, +, -)", line_number);
        if (u < 0 || v < 0) throw ParseError("negative vertex id", line_number);
        if (u == v) throw ParseError("self-loop", line_number);
        edges.push_back({u, v, sign});
        max_id = std::max({max_id, u, v});
    }
    try {
        return SignedGraph(max_id + 1, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), line_number);
    }
}

Matrix adjacency(const SignedGraph& g) {
    Matrix A = Matrix::Zero(g.order(), g.order());
    for (const Edge& e : g.edges()) {
        A(e.u, e.v) = e.sign;
        A(e.v, e.u) = e.sign;
    }
    return A;
}

Matrix abs_adjacency(const SignedGraph& g) {
    Matrix A = Matrix::Zero(g.order(), g.order());
    for (const Edge& e : g.edges()) {
        A(e.u, e.v) = 1.0;
        A(e.v, e.u) = 1.0;
    }
    return A;
}

Matrix signed_laplacian(const SignedGraph& g) {
    Matrix L = Matrix::Zero(g.order(), g.order());
    for (const Edge& e : g.edges()) {
        L(e.u, e.v) = -e.sign;
        L(e.v, e.u) = -e.sign;
        L(e.u, e.u) += 1.0;
        L(e.v, e.v) += 1.0;
    }
    return L;
}

Matrix lerman_ghosh_laplacian(const SignedGraph& g, double chi) {
    Matrix L = -adjacency(g);
    L.diagonal().array() += chi;
    return L;
}

SignedGraph switched(const SignedGraph& g, const std::vector<int>& subset) {
    std::vector<char> in_subset(g.order(), 0);
    for (int v : subset) {
        if (v < 0 || v >= g.order())
            throw std::invalid_argument("switching set contains invalid vertex " + std::to_string(v));
        in_subset[v] = 1;
    }
    std::vector<Edge> edges = g.edges();
    for (Edge& e : edges)
        if (in_subset[e.u] != in_subset[e.v]) e.sign = -e.sign;
    return SignedGraph(g.order(), std::move(edges));
}

BalanceCheck is_balanced(const SignedGraph& g) {
    const int n = g.order();
    std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, sign)
    for (const Edge& e : g.edges()) {
        adj[e.u].push_back({e.v, e.sign});
        adj[e.v].push_back({e.u, e.sign});
    }
    std::vector<int> color(n, -1);
    for (int root = 0; root < n; ++root) {
        if (color[root] != -1) continue;
        color[root] = 0;
        std::queue<int> queue;
        queue.push(root);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop();
            for (auto [v, sign] : adj[u]) {
                int want = sign > 0 ? color[u] : 1 - color[u];
                if (color[v] == -1) {
                    color[v] = want;
                    queue.push(v);
                } else if (color[v] != want) {
                    return {false, std::nullopt};
                }
            }
        }
    }
    return {true, std::move(color)};
}

}  // namespace mlbalance
