#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cc/color_graph.hpp"
#include "cc/perm.hpp"

namespace cc {

// Combinatorial automorphism group {f : s^f = s for all colors s}, found by
// individualization-refinement backtracking with WL stabilization as the
// refiner. Throws bound_error when n exceeds limits::max_n().
PermGroup aut_group(const ColorGraph& x);

// x is schurian iff the pair orbits of aut(x) are exactly the colors of x.
bool is_schurian(const ColorGraph& x);

// A vertex bijection f with S^f = S' (colors may be renamed), or nullopt.
std::optional<std::vector<int>> color_isomorphic(const ColorGraph& x, const ColorGraph& y);

// Color bijection preserving the diagonal set, the converse map and every
// intersection number.
bool is_algebraic_aut(const ColorGraph& x, const IntersectionTensor& t,
                      const std::vector<int>& sigma, std::string* why = nullptr);

// All algebraic automorphisms (the identity included), each as a color image
// array. Throws bound_error when rank exceeds limits::max_rank_algebraic().
std::vector<std::vector<int>> algebraic_aut_group(const ColorGraph& x);

// Color map induced by a vertex bijection f from x to y (throws if f does
// not induce one).
std::vector<int> induced_color_map(const ColorGraph& x, const ColorGraph& y,
                                   const std::vector<int>& f);

} // namespace cc
