#pragma once

#include <vector>

#include "cc/color_graph.hpp"
#include "cc/graph.hpp"

namespace cc {

// Stable refinement of an initial pair coloring under the 2-dimensional
// Weisfeiler-Leman step
//   new(a,b) = (old(a,b), multiset over g of (old(a,g), old(g,b))).
//
// Output ids are assigned per round in sorted-signature order, so they are
// invariant under vertex relabeling whenever the initial ids are; the
// isomorphism search relies on this. The input need not satisfy any axiom.
struct WlResult {
    int rank = 0;
    std::vector<int> matrix;
    int rounds = 0;
};
WlResult wl_stabilize(int n, std::vector<int> init);

// Diagonal/off-diagonal separation plus converse-pair refinement, applied
// before iteration so (C1) and (C2) hold from the first round.
std::vector<int> wl_preprocess(int n, const std::vector<int>& init);

// Coherent closure of an arbitrary initial coloring.
ColorGraph wl_close(int n, const std::vector<int>& init);

// Coherent closure of a graph: initial colors diagonal / edge / non-edge.
ColorGraph wl_close_graph(const SimpleGraph& g);

// Coherent closure of a rainbow; throws validation_error if (C1)/(C2) fail.
ColorGraph wl_close_rainbow(const ColorGraph& rainbow);

} // namespace cc
