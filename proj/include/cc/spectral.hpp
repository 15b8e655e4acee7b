#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cc/color_graph.hpp"
#include "cc/graph.hpp"

namespace cc {

enum class MatrixKind { laplacian, adjacency };

std::string to_string(MatrixKind k);
MatrixKind matrix_kind_from_string(const std::string& s);

// Eigenvalue selector: an explicit value (matched within 1e-6), the Fiedler
// value (second smallest Laplacian eigenvalue), or automatic search over
// multiplicity-3 eigenvalues.
struct EigenvalueChoice {
    enum class Mode { value, fiedler, automatic } mode = Mode::automatic;
    double value = 0.0;

    static EigenvalueChoice parse(const std::string& s); // "auto" | "fiedler" | decimal
};

// Rank-3 spectral projection P = sum of v v^T over an eigenvalue's
// eigenspace, validated to be constant on every color class of x.
struct Projection {
    MatrixKind kind = MatrixKind::laplacian;
    double lambda = 0.0;
    int multiplicity = 0;
    int n = 0;
    std::vector<double> p;          // n x n, row-major
    std::vector<std::array<double, 3>> basis_rows; // per-vertex rows of the orthonormal basis
};

// Distinct eigenvalues of multiplicity exactly 3, ascending.
std::vector<double> multiplicity3_eigenvalues(const SimpleGraph& g, MatrixKind kind);

Projection projection(const SimpleGraph& g, const ColorGraph& x, MatrixKind kind,
                      const EigenvalueChoice& choice);

// Unit-sphere representation derived from a projection: per-vertex unit
// vectors, the Gram matrix, the clustered value set W, the color -> W map
// and the antipodal parabolic s(1) u s(-1).
struct SphericalRep {
    int n = 0;
    MatrixKind kind = MatrixKind::laplacian;
    double lambda = 0.0;
    std::vector<std::array<double, 3>> points;
    std::vector<double> gram;      // n x n
    std::vector<double> W;         // sorted distinct Gram values
    std::vector<int> w_of_color;   // per color of x
    int w_one = -1;                // index of 1 in W
    int w_minus_one = -1;          // index of -1 in W, or -1 if absent
    Parabolic antipodal;

    int w_of_pair(int a, int b, const ColorGraph& x) const { return w_of_color[x.color(a, b)]; }
};

SphericalRep build_rep(const ColorGraph& x, const Projection& p);

// The rainbow X_rho: pairs partitioned by clustered Gram value. Class ids
// are canonical; w_values[c] is the Gram value of class c.
struct RainbowRho {
    ColorGraph rainbow;
    std::vector<double> w_values;
};

RainbowRho rainbow_rho(const ColorGraph& x, const SphericalRep& rep);

// Faithful iff the coherent closure of the Gram rainbow has the rank of x.
bool is_faithful(const ColorGraph& x, const RainbowRho& rb);

} // namespace cc
