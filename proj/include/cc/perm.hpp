#pragma once

#include <string>
#include <vector>

#include "cc/color_graph.hpp"
#include "cc/errors.hpp"

namespace cc {

// A permutation of {0,...,degree-1} stored as its image array. Composition is
// left to right: (p * q) maps a to q[p[a]], so exponent notation a^(pq) =
// (a^p)^q holds throughout.
class Perm {
  public:
    Perm() = default;
    explicit Perm(std::vector<int> images);
    static Perm identity(int degree);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator[](int a) const { return img_[a]; }
    const std::vector<int>& images() const { return img_; }

    Perm operator*(const Perm& rhs) const;
    Perm inverse() const;
    bool is_identity() const;

    bool operator==(const Perm& rhs) const { return img_ == rhs.img_; }
    bool operator<(const Perm& rhs) const { return img_ < rhs.img_; }

  private:
    std::vector<int> img_;
};

struct PermGroup {
    int degree = 0;
    std::vector<Perm> generators; // empty list = trivial group
    std::string name;
};

struct OrbitDecomposition {
    std::vector<int> orbit_id;            // per point
    std::vector<std::vector<int>> orbits; // ordered by least element
};

// Generator word: sequence of generator references, k >= 0 means generator k,
// k < 0 means the inverse of generator (-k-1).
using Word = std::vector<int>;

Perm evaluate_word(const PermGroup& g, const Word& w);

OrbitDecomposition orbits(const PermGroup& g);

// Coherent configuration of the group: colors are the orbits of g on
// Omega^2 under the componentwise action, numbered canonically.
ColorGraph inv(const PermGroup& g);

// All group elements by closure under the generators (BFS). Throws
// bound_error past limits::max_group_order().
std::vector<Perm> elements(const PermGroup& g);
long long group_order(const PermGroup& g);

// Action of g on the right cosets of the subgroup generated by the given
// words. Degree = index; the coset of the identity is point 0, remaining
// cosets ordered by their lexicographically least element.
PermGroup coset_action(const PermGroup& g, const std::vector<Word>& subgroup_words);

// Block sum of coset actions on several subgroups, one orbit per subgroup.
PermGroup orbit_sum_action(const PermGroup& g, const std::vector<std::vector<Word>>& subgroups);

// Action of g on its own element set by right multiplication.
PermGroup regular_representation(const PermGroup& g);

// Orbit dominance: gamma dominates delta iff some orbit of g on gamma x delta
// is functional from gamma to delta (|gs| = 1 for every g in gamma).
bool dominates(const PermGroup& g, const std::vector<int>& gamma, const std::vector<int>& delta);
bool mutually_dominating(const PermGroup& g, const std::vector<int>& delta, const std::vector<int>& gamma);
bool is_domination_free(const PermGroup& g);

} // namespace cc
