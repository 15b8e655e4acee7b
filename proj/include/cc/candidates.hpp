#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cc/color_graph.hpp"
#include "cc/graph.hpp"

namespace cc {

// Minimal symmetric non-reflexive color union s u s*.
struct SymmetricUnit {
    std::vector<ColorId> colors; // one or two colors
    int fiber_a = 0, fiber_b = 0;
    long long edge_count = 0;    // undirected edges contributed
};

struct StageCounts {
    long long raw = -1;          // all nonempty unit subsets
    long long edge_bounded = -1; // |X'|
    long long phi_reduced = -1;
    long long wl_exact = -1;     // |X|
    long long polyhedral = -1;
};

struct CandidateSet {
    ColorGraph base;
    std::vector<SymmetricUnit> units;
    std::vector<uint64_t> candidates; // bitmasks over units
    StageCounts counts;
};

// Enumeration bounds, calibrated against the published counts: the global
// planar bound 3n-6, the within-fiber bound 3k-6 on fibers with at least
// within_fiber_min points, no cross-block bound, empty relation included.
// (The published counts admit complete 6-point blocks and reject any
// cross-block bound; a strict 3min-6 bound on every block would even
// exclude the known polyhedral witnesses.)
struct EnumOptions {
    int within_fiber_min = 7;
    bool strict_per_fiber = false; // 3min-6 on every block pair instead
    bool include_empty = true;
};

// Edge relations E in S^u with |E| <= 3n-6 and the per-fiber-pair bound,
// enumerated by branch and bound over symmetric units.
CandidateSet enumerate_candidates(const ColorGraph& base, const EnumOptions& opt = {});

// Keep the lexicographically least bitmask of each Phi-orbit.
void phi_reduce(CandidateSet& cs, const std::vector<std::vector<int>>& phi_elements);

// Keep candidates whose graph has coherent closure equal to base (partition
// equality, not just rank).
void wl_filter(CandidateSet& cs);

SimpleGraph candidate_graph(const CandidateSet& cs, uint64_t mask);

struct PolyhedralWitness {
    uint64_t mask = 0;
    SimpleGraph graph;
};

std::vector<PolyhedralWitness> polyhedral_screen(const CandidateSet& cs);

} // namespace cc
