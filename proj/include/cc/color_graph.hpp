#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cc/errors.hpp"

namespace cc {

using ColorId = int;

// A partition of Omega^2 into color classes, stored as an n x n color matrix
// plus derived metadata (fibers, converse map). Covers both rainbows and
// coherent configurations; coherence (C3) is checked by validate()/tensor().
//
// Color ids are always canonical: first appearance in a row-major scan.
class ColorGraph {
  public:
    ColorGraph() = default;

    // Renumbers the input matrix canonically and derives metadata. Never
    // throws: if (C1)/(C2) fail, the object is still inspectable and
    // rainbow_ok() is false, so validate() can report the defect.
    static ColorGraph from_matrix(int n, const std::vector<int>& colors);

    int n() const { return n_; }
    int rank() const { return rank_; }
    ColorId color(int a, int b) const { return color_[static_cast<size_t>(a) * n_ + b]; }
    const std::vector<int>& matrix() const { return color_; }

    bool rainbow_ok() const { return rainbow_ok_; }

    bool is_reflexive(ColorId s) const { return reflexive_[s] != 0; }
    bool is_symmetric(ColorId s) const { return converse_[s] == s; }
    ColorId converse(ColorId s) const { return converse_[s]; }
    long long color_size(ColorId s) const { return color_size_[s]; }

    int fiber_count() const { return static_cast<int>(fibers_.size()); }
    int fiber_of_point(int a) const { return fiber_of_point_[a]; }
    const std::vector<std::vector<int>>& fibers() const { return fibers_; }
    // (source fiber, target fiber) of a color.
    std::pair<int, int> color_fibers(ColorId s) const { return color_fiber_[s]; }

    // Out-degree |a s| for the first source point; constant over the fiber
    // iff the configuration is coherent.
    long long valency(ColorId s) const { return valency_[s]; }

    // First pair of color s in row-major order.
    std::pair<int, int> representative(ColorId s) const { return rep_[s]; }

    bool operator==(const ColorGraph& rhs) const { return n_ == rhs.n_ && color_ == rhs.color_; }

  private:
    int n_ = 0;
    int rank_ = 0;
    std::vector<int> color_;
    bool rainbow_ok_ = false;
    std::vector<ColorId> converse_;
    std::vector<char> reflexive_;
    std::vector<long long> color_size_;
    std::vector<long long> valency_;
    std::vector<int> fiber_of_point_;
    std::vector<std::vector<int>> fibers_;
    std::vector<std::pair<int, int>> color_fiber_;
    std::vector<std::pair<int, int>> rep_;
};

// (C1)-(C3) check outcome; detail carries the first violation witness.
struct ValidationReport {
    bool c1 = false;
    bool c2 = false;
    bool c3 = false;
    std::string detail;
    bool ok() const { return c1 && c2 && c3; }
};

ValidationReport validate(const ColorGraph& x);

// Sparse intersection tensor: for each result color t, the nonzero numbers
// c_{r,s}^t keyed by (r,s), plus valencies n_s.
struct IntersectionTensor {
    int rank = 0;
    std::vector<std::vector<std::pair<std::pair<ColorId, ColorId>, int>>> by_result;
    std::vector<long long> valency;

    int c(ColorId r, ColorId s, ColorId t) const;
};

// Computes the tensor from one representative pair per color. With
// verify_all_pairs, every pair is checked against its representative and a
// (C3) violation is reported with the offending (r,s,t).
IntersectionTensor tensor(const ColorGraph& x, bool verify_all_pairs = false);

// True iff the two color matrices define the same partition of Omega^2
// (color names may differ).
bool same_partition(const ColorGraph& x, const ColorGraph& y);

// ---- Parabolics, quotients, restrictions ----

// An equivalence relation on Omega that is a union of colors.
struct Parabolic {
    std::vector<ColorId> colors;            // sorted
    std::vector<std::vector<int>> classes;  // ordered by least element
    std::vector<int> class_of;              // point -> class index
    int num_classes() const { return static_cast<int>(classes.size()); }
};

// Least parabolic whose color set contains the seed colors.
Parabolic parabolic_closure(const ColorGraph& x, const IntersectionTensor& t,
                            std::vector<ColorId> seed);

// All parabolics when rank <= limits::max_rank_parabolics(); above the bound
// only single-color-generated parabolics and their diagonal are produced and
// a bound_error is thrown unless allow_partial is set.
std::vector<Parabolic> parabolics(const ColorGraph& x, const IntersectionTensor& t,
                                  bool allow_partial = false);

struct QuotientMap {
    std::vector<int> pi; // point -> class index
    ColorGraph quotient;
};

QuotientMap quotient(const ColorGraph& x, const Parabolic& e);

// Restriction to a homogeneity set (union of fibers), colors renumbered
// canonically. Throws validation_error if delta is not a union of fibers.
ColorGraph restriction(const ColorGraph& x, const std::vector<int>& delta);

// Complement of the parabolic e inside the restriction to delta: a parabolic
// of x_delta with exactly two classes, each meeting every class of e_delta in
// one point. Preconditions: e has uniform class size on delta and singleton
// classes outside it.
std::optional<Parabolic> find_complement(const ColorGraph& x, const Parabolic& e,
                                         const std::vector<int>& delta);

// Fusion by a group of algebraic automorphisms (each given as a color image
// array; verified against the tensor). Colors of the result are the orbit
// unions.
ColorGraph algebraic_fusion(const ColorGraph& x, const std::vector<std::vector<int>>& phi_group);

// Thinness predicates.
bool is_thin_color(const ColorGraph& x, ColorId s);
bool is_semiregular(const ColorGraph& x);
bool is_quasi_thin(const ColorGraph& x);

} // namespace cc
