#include "cc/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace cc {

SimpleGraph SimpleGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    SimpleGraph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void SimpleGraph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw validation_error("edge endpoint out of range");
    if (u == v) throw validation_error("loops are not allowed");
    if (adjacent(u, v)) throw validation_error("duplicate edge");
    adj_[static_cast<size_t>(u) * n_ + v] = 1;
    adj_[static_cast<size_t>(v) * n_ + u] = 1;
    edges_.emplace_back(std::min(u, v), std::max(u, v));
}

std::vector<int> SimpleGraph::neighbors(int v) const {
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
        if (adjacent(v, u)) out.push_back(u);
    return out;
}

int SimpleGraph::degree(int v) const {
    int d = 0;
    for (int u = 0; u < n_; ++u)
        if (adjacent(v, u)) ++d;
    return d;
}

std::vector<int> SimpleGraph::degree_histogram() const {
    std::vector<int> h;
    for (int v = 0; v < n_; ++v) {
        int d = degree(v);
        if (d >= static_cast<int>(h.size())) h.resize(d + 1, 0);
        ++h[d];
    }
    return h;
}

bool SimpleGraph::connected() const {
    if (n_ == 0) return true;
    std::vector<char> seen(n_, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int u = 0; u < n_; ++u)
            if (adjacent(v, u) && !seen[u]) {
                seen[u] = 1;
                ++count;
                q.push(u);
            }
    }
    return count == n_;
}

SimpleGraph SimpleGraph::relabeled(const std::vector<int>& perm) const {
    SimpleGraph g(n_);
    for (auto [u, v] : edges_) g.add_edge(perm[u], perm[v]);
    return g;
}

SimpleGraph read_edge_list(const std::string& text) {
    std::istringstream in(text);
    int n = -1, m = -1;
    if (!(in >> n >> m)) throw validation_error("edge list: missing 'n m' header");
    if (n < 0 || m < 0) throw validation_error("edge list: negative header values");
    SimpleGraph g(n);
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw validation_error("edge list: expected " + std::to_string(m) +
                                                    " edges, got " + std::to_string(i));
        g.add_edge(u, v);
    }
    return g;
}

std::string write_edge_list(const SimpleGraph& g) {
    std::ostringstream out;
    out << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

SimpleGraph cycle_graph(int n) {
    SimpleGraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

SimpleGraph path_graph(int n) {
    SimpleGraph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

SimpleGraph complete_graph(int n) {
    SimpleGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

SimpleGraph complete_bipartite(int a, int b) {
    SimpleGraph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

SimpleGraph generalized_petersen(int n, int k) {
    SimpleGraph g(2 * n);
    for (int i = 0; i < n; ++i) {
        g.add_edge(i, (i + 1) % n);      // outer cycle
        g.add_edge(i, n + i);            // spokes
        g.add_edge(n + i, n + (i + k) % n); // inner star, added once per pair
    }
    return g;
}

SimpleGraph shrikhande_graph() {
    // vertices Z4 x Z4, adjacent iff the difference is +-(1,0), +-(0,1), +-(1,1)
    SimpleGraph g(16);
    auto id = [](int x, int y) { return ((x % 4) + 4) % 4 * 4 + ((y % 4) + 4) % 4; };
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) {
            for (auto [dx, dy] : {std::pair{1, 0}, {0, 1}, {1, 1}}) {
                int u = id(x, y), v = id(x + dx, y + dy);
                if (!g.adjacent(u, v)) g.add_edge(u, v);
            }
        }
    return g;
}

} // namespace cc
