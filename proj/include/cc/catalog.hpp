#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cc/graph.hpp"
#include "cc/perm.hpp"
#include "cc/spectral.hpp"

namespace cc {

// Oriented 2-sphere polyhedron: faces are cyclic vertex lists with every
// directed arc used exactly once. Seeds plus the dual/ambo/truncate
// operators generate all catalog solids.
struct EmbeddedPoly {
    int n = 0;
    std::vector<std::vector<int>> faces;
};

EmbeddedPoly seed_tetrahedron();
EmbeddedPoly seed_cube();
EmbeddedPoly seed_icosahedron();

EmbeddedPoly poly_dual(const EmbeddedPoly& p);
EmbeddedPoly poly_ambo(const EmbeddedPoly& p);     // rectification
EmbeddedPoly poly_truncate(const EmbeddedPoly& p);

void check_poly(const EmbeddedPoly& p); // arc coverage + Euler, throws on failure
SimpleGraph skeleton(const EmbeddedPoly& p);

// Catalog solid with spectral hints and expected WL data.
struct SolidEntry {
    std::string name;
    SimpleGraph graph;
    MatrixKind kind = MatrixKind::laplacian;
    double lambda = 0.0;      // hinted eigenvalue of multiplicity 3
    int expected_rank = 0;    // |S| of the coherent closure
    int expected_srho = 0;    // |S_rho| of the Gram rainbow
};

const std::vector<SolidEntry>& catalog_solids();

// Graph lookup by name: the solids plus a few named test graphs
// (mobius-kantor, petersen, shrikhande). Throws validation_error on unknown
// names.
SimpleGraph catalog_graph(const std::string& name);
std::vector<std::string> catalog_graph_names();

// Spherical groups with the presentation generators realized as concrete
// permutations on a small faithful set. Orbit actions are built by
// coset_action on the listed point stabilizers.
struct GroupCatalogEntry {
    std::string name;                           // e.g. "sym4xC2"
    PermGroup faithful;
    std::vector<std::string> orbit_keys;        // e.g. {"24I","24II","12","8","6"}
    std::vector<std::vector<Word>> stabilizers; // parallel to orbit_keys
    std::vector<int> orbit_sizes;               // parallel to orbit_keys
};

const std::vector<GroupCatalogEntry>& catalog_groups();

// Group spec format: "<name>/orbits=<k1>+<k2>+..." per the orbit keys above,
// e.g. "alt4/orbits=6+4" or "sym4xC2/orbits=24II+8".
PermGroup catalog_group(const std::string& spec);

// Dihedral-family groups used in tests: D_{2n} x C2 with Coxeter generators
// t1, t2 acting on an n-gon and central t3 swapping two extra points.
PermGroup dihedral_times_c2(int n);

} // namespace cc
