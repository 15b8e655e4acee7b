#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cc/errors.hpp"

namespace cc {

// Simple undirected graph on {0,...,n-1}.
class SimpleGraph {
  public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n) : n_(n), adj_(static_cast<size_t>(n) * n, 0) {}

    // Rejects loops and duplicate edges.
    static SimpleGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    bool adjacent(int u, int v) const { return adj_[static_cast<size_t>(u) * n_ + v] != 0; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::vector<int> neighbors(int v) const;
    int degree(int v) const;
    std::vector<int> degree_histogram() const; // counts per degree

    void add_edge(int u, int v);
    bool connected() const;

    SimpleGraph relabeled(const std::vector<int>& perm) const; // vertex u -> perm[u]

  private:
    int n_ = 0;
    std::vector<char> adj_;
    std::vector<std::pair<int, int>> edges_;
};

// Edge-list text format: "n m" header line, then one "u v" line per edge.
SimpleGraph read_edge_list(const std::string& text);
std::string write_edge_list(const SimpleGraph& g);

// Small constructors used across tests and the catalog.
SimpleGraph cycle_graph(int n);
SimpleGraph path_graph(int n);
SimpleGraph complete_graph(int n);
SimpleGraph complete_bipartite(int a, int b);
SimpleGraph generalized_petersen(int n, int k);
SimpleGraph shrikhande_graph();

} // namespace cc
