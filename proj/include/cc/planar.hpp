#pragma once

#include <optional>
#include <vector>

#include "cc/graph.hpp"

namespace cc {

// Exact planarity via the left-right (LR) criterion, with an
// m > 3n-6 fast reject.
bool is_planar(const SimpleGraph& g);

// Combinatorial embedding computed independently of the LR test by
// face-splitting (Demoucron-style), one face list per biconnected block.
// Each face is a closed vertex cycle. nullopt iff the graph is nonplanar.
struct BlockEmbedding {
    std::vector<int> vertices;                 // block vertex set
    std::vector<std::vector<int>> faces;       // simple cycles
    int edge_count = 0;
};
std::optional<std::vector<BlockEmbedding>> planar_embedding(const SimpleGraph& g);

// Euler check of an embedding: per block, faces = m - n + 2 and every edge
// borders exactly two faces.
bool embedding_satisfies_euler(const SimpleGraph& g, const std::vector<BlockEmbedding>& emb);

struct KuratowskiWitness {
    enum class Kind { k5, k33 } kind;
    std::vector<std::pair<int, int>> edges; // a subdivision of K5 or K3,3 in g
};

// Edge-minimal nonplanar subgraph, classified; nullopt if planar.
std::optional<KuratowskiWitness> kuratowski_witness(const SimpleGraph& g);

// Exact vertex connectivity via unit-capacity max-flow on the split network
// (Menger). Requires n >= 2.
int vertex_connectivity(const SimpleGraph& g);

// Planar and 3-connected.
bool is_polyhedral(const SimpleGraph& g);

} // namespace cc
