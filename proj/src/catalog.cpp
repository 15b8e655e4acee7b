#include "cc/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

namespace cc {

namespace {

using Arc = std::pair<int, int>;

// face index of each directed arc; throws if an arc repeats or is missing
std::map<Arc, std::pair<int, int>> arc_positions(const EmbeddedPoly& p) {
    std::map<Arc, std::pair<int, int>> pos; // arc -> (face, index)
    for (size_t f = 0; f < p.faces.size(); ++f) {
        const auto& face = p.faces[f];
        for (size_t i = 0; i < face.size(); ++i) {
            Arc a{face[i], face[(i + 1) % face.size()]};
            if (!pos.emplace(a, std::make_pair(static_cast<int>(f), static_cast<int>(i))).second)
                throw validation_error("polyhedron: directed arc used twice");
        }
    }
    for (const auto& [arc, where] : pos)
        if (!pos.count({arc.second, arc.first}))
            throw validation_error("polyhedron: arc without a reverse");
    return pos;
}

} // namespace

void check_poly(const EmbeddedPoly& p) {
    auto pos = arc_positions(p);
    long long arcs = static_cast<long long>(pos.size());
    long long v = p.n, e = arcs / 2, f = static_cast<long long>(p.faces.size());
    if (v - e + f != 2)
        throw validation_error("polyhedron: Euler formula fails (V-E+F = " +
                               std::to_string(v - e + f) + ")");
}

SimpleGraph skeleton(const EmbeddedPoly& p) {
    SimpleGraph g(p.n);
    for (const auto& face : p.faces)
        for (size_t i = 0; i < face.size(); ++i) {
            int u = face[i], v = face[(i + 1) % face.size()];
            if (!g.adjacent(u, v)) g.add_edge(u, v);
        }
    return g;
}

EmbeddedPoly seed_tetrahedron() {
    EmbeddedPoly p;
    p.n = 4;
    p.faces = {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}};
    check_poly(p);
    return p;
}

EmbeddedPoly seed_cube() {
    EmbeddedPoly p;
    p.n = 8;
    // 0..3 bottom, 4..7 top, faces oriented outward
    p.faces = {{0, 3, 2, 1}, {4, 5, 6, 7}, {0, 1, 5, 4}, {1, 2, 6, 5}, {2, 3, 7, 6}, {3, 0, 4, 7}};
    check_poly(p);
    return p;
}

EmbeddedPoly seed_icosahedron() {
    // vertices (0,±1,±phi) and cyclic shifts; faces = triangles at minimal
    // distance, oriented outward
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<std::array<double, 3>> v;
    for (double s1 : {1.0, -1.0})
        for (double s2 : {1.0, -1.0}) {
            v.push_back({0.0, s1, s2 * phi});
            v.push_back({s1, s2 * phi, 0.0});
            v.push_back({s2 * phi, 0.0, s1});
        }
    const int n = static_cast<int>(v.size());
    auto d2 = [&](int a, int b) {
        double s = 0;
        for (int k = 0; k < 3; ++k) s += (v[a][k] - v[b][k]) * (v[a][k] - v[b][k]);
        return s;
    };
    double min_d = 1e300;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) min_d = std::min(min_d, d2(a, b));
    std::vector<std::vector<int>> adj(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && d2(a, b) < min_d * 1.0001) adj[a].push_back(b);

    EmbeddedPoly p;
    p.n = n;
    for (int a = 0; a < n; ++a)
        for (int b : adj[a])
            for (int c : adj[b]) {
                if (!(a < b && b < c)) continue;
                if (std::find(adj[a].begin(), adj[a].end(), c) == adj[a].end()) continue;
                // orient so that the normal points away from the origin
                double ux = v[b][0] - v[a][0], uy = v[b][1] - v[a][1], uz = v[b][2] - v[a][2];
                double wx = v[c][0] - v[a][0], wy = v[c][1] - v[a][1], wz = v[c][2] - v[a][2];
                double nx = uy * wz - uz * wy, ny = uz * wx - ux * wz, nz = ux * wy - uy * wx;
                double cx = v[a][0] + v[b][0] + v[c][0];
                double dot = nx * cx + ny * (v[a][1] + v[b][1] + v[c][1]) +
                             nz * (v[a][2] + v[b][2] + v[c][2]);
                if (dot > 0)
                    p.faces.push_back({a, b, c});
                else
                    p.faces.push_back({a, c, b});
            }
    check_poly(p);
    return p;
}

namespace {

// faces around each vertex in a consistent rotational order: successor of
// face F at v is the face containing the arc (v, predecessor of v in F)
std::vector<std::vector<int>> vertex_face_cycles(const EmbeddedPoly& p) {
    auto pos = arc_positions(p);
    std::vector<std::vector<int>> cycles(p.n);
    std::vector<char> done(p.n, 0);
    for (size_t f = 0; f < p.faces.size(); ++f) {
        const auto& face = p.faces[f];
        for (size_t i = 0; i < face.size(); ++i) {
            int v = face[i];
            if (done[v]) continue;
            done[v] = 1;
            int cur = static_cast<int>(f);
            for (;;) {
                cycles[v].push_back(cur);
                const auto& cf = p.faces[cur];
                size_t idx = 0;
                while (cf[idx] != v) ++idx;
                int prev = cf[(idx + cf.size() - 1) % cf.size()];
                cur = pos.at({v, prev}).first;
                if (cur == static_cast<int>(f)) break;
            }
        }
    }
    return cycles;
}

// neighbors of each vertex in the rotation order induced by the face cycles
std::vector<std::vector<int>> vertex_neighbor_cycles(const EmbeddedPoly& p) {
    std::vector<std::vector<int>> fc = vertex_face_cycles(p);
    std::vector<std::vector<int>> out(p.n);
    for (int v = 0; v < p.n; ++v)
        for (int f : fc[v]) {
            const auto& face = p.faces[f];
            size_t idx = 0;
            while (face[idx] != v) ++idx;
            out[v].push_back(face[(idx + face.size() - 1) % face.size()]);
        }
    return out;
}

} // namespace

EmbeddedPoly poly_dual(const EmbeddedPoly& p) {
    std::vector<std::vector<int>> fc = vertex_face_cycles(p);
    EmbeddedPoly d;
    d.n = static_cast<int>(p.faces.size());
    d.faces = std::move(fc);
    check_poly(d);
    return d;
}

EmbeddedPoly poly_ambo(const EmbeddedPoly& p) {
    std::map<Arc, int> edge_id;
    for (const auto& face : p.faces)
        for (size_t i = 0; i < face.size(); ++i) {
            int u = face[i], v = face[(i + 1) % face.size()];
            Arc key{std::min(u, v), std::max(u, v)};
            edge_id.emplace(key, static_cast<int>(edge_id.size()));
        }
    auto eid = [&](int u, int v) { return edge_id.at({std::min(u, v), std::max(u, v)}); };

    EmbeddedPoly a;
    a.n = static_cast<int>(edge_id.size());
    for (const auto& face : p.faces) {
        std::vector<int> nf;
        for (size_t i = 0; i < face.size(); ++i)
            nf.push_back(eid(face[i], face[(i + 1) % face.size()]));
        a.faces.push_back(std::move(nf));
    }
    std::vector<std::vector<int>> nc = vertex_neighbor_cycles(p);
    for (int v = 0; v < p.n; ++v) {
        std::vector<int> nf;
        for (int u : nc[v]) nf.push_back(eid(v, u));
        a.faces.push_back(std::move(nf));
    }
    check_poly(a);
    return a;
}

EmbeddedPoly poly_truncate(const EmbeddedPoly& p) {
    // new vertices = directed arcs (v,u): the corner of v on edge {v,u}
    std::map<Arc, int> corner;
    for (const auto& face : p.faces)
        for (size_t i = 0; i < face.size(); ++i) {
            int u = face[i], v = face[(i + 1) % face.size()];
            corner.emplace(Arc{u, v}, static_cast<int>(corner.size()));
            corner.emplace(Arc{v, u}, static_cast<int>(corner.size()));
        }

    EmbeddedPoly t;
    t.n = static_cast<int>(corner.size());
    for (const auto& face : p.faces) {
        std::vector<int> nf;
        for (size_t i = 0; i < face.size(); ++i) {
            int u = face[i], v = face[(i + 1) % face.size()];
            nf.push_back(corner.at({u, v}));
            nf.push_back(corner.at({v, u}));
        }
        t.faces.push_back(std::move(nf));
    }
    std::vector<std::vector<int>> nc = vertex_neighbor_cycles(p);
    for (int v = 0; v < p.n; ++v) {
        std::vector<int> nf;
        for (int u : nc[v]) nf.push_back(corner.at({v, u}));
        t.faces.push_back(std::move(nf));
    }
    check_poly(t);
    return t;
}

namespace {

SimpleGraph mobius_kantor_graph() { return generalized_petersen(8, 3); }

struct SolidTable {
    std::vector<SolidEntry> entries;

    void add(const std::string& name, const SimpleGraph& g, MatrixKind kind, double lambda,
             int rank, int srho) {
        entries.push_back({name, g, kind, lambda, rank, srho});
    }
};

const SolidTable& solid_table() {
    static const SolidTable table = [] {
        const double s2 = std::sqrt(2.0), s5 = std::sqrt(5.0), s17 = std::sqrt(17.0);
        EmbeddedPoly tet = seed_tetrahedron();
        EmbeddedPoly cube = seed_cube();
        EmbeddedPoly ico = seed_icosahedron();
        EmbeddedPoly oct = poly_dual(cube);
        EmbeddedPoly dod = poly_dual(ico);
        EmbeddedPoly cubocta = poly_ambo(cube);
        EmbeddedPoly icosidod = poly_ambo(dod);
        SolidTable t;
        t.add("tetrahedron", skeleton(tet), MatrixKind::laplacian, 4.0, 2, 2);
        t.add("octahedron", skeleton(oct), MatrixKind::laplacian, 4.0, 3, 3);
        t.add("cube", skeleton(cube), MatrixKind::laplacian, 2.0, 4, 4);
        t.add("icosahedron", skeleton(ico), MatrixKind::laplacian, 5.0 - s5, 4, 4);
        t.add("cuboctahedron", skeleton(cubocta), MatrixKind::laplacian, 2.0, 5, 5);
        t.add("dodecahedron", skeleton(dod), MatrixKind::laplacian, 3.0 - s5, 6, 6);
        t.add("truncated-tetrahedron", skeleton(poly_truncate(tet)), MatrixKind::laplacian, 1.0,
              7, 6);
        t.add("icosidodecahedron", skeleton(icosidod), MatrixKind::laplacian, 3.0 - s5, 10, 9);
        t.add("rhombic-dodecahedron", skeleton(poly_dual(cubocta)), MatrixKind::laplacian,
              (7.0 - s17) / 2.0, 11, 11);
        t.add("small-rhombicuboctahedron", skeleton(poly_ambo(cubocta)), MatrixKind::laplacian,
              1.0, 14, 12);
        t.add("truncated-octahedron", skeleton(poly_truncate(oct)), MatrixKind::laplacian,
              4.0 - s2, 16, 11);
        t.add("rhombic-triacontahedron", skeleton(poly_dual(icosidod)), MatrixKind::laplacian,
              3.0 - s5, 18, 18);
        t.add("disdyakis-dodecahedron", skeleton(poly_dual(poly_truncate(cubocta))),
              MatrixKind::adjacency, 4.0, 28, 25);
        t.add("small-rhombicosidodecahedron", skeleton(poly_ambo(icosidod)),
              MatrixKind::laplacian, (3.0 - s5) / 2.0, 32, 22);
        t.add("disdyakis-triacontahedron", skeleton(poly_dual(poly_truncate(icosidod))),
              MatrixKind::adjacency, s5, 52, 49);
        return t;
    }();
    return table;
}

} // namespace

const std::vector<SolidEntry>& catalog_solids() { return solid_table().entries; }

SimpleGraph catalog_graph(const std::string& name) {
    for (const SolidEntry& e : catalog_solids())
        if (e.name == name) return e.graph;
    if (name == "mobius-kantor") return mobius_kantor_graph();
    if (name == "petersen") return generalized_petersen(5, 2);
    if (name == "shrikhande") return shrikhande_graph();
    throw validation_error("unknown catalog graph '" + name + "'");
}

std::vector<std::string> catalog_graph_names() {
    std::vector<std::string> names;
    for (const SolidEntry& e : catalog_solids()) names.push_back(e.name);
    names.push_back("mobius-kantor");
    names.push_back("petersen");
    names.push_back("shrikhande");
    return names;
}

namespace {

Perm perm_from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> img(degree);
    for (int i = 0; i < degree; ++i) img[i] = i;
    for (const auto& c : cycles)
        for (size_t i = 0; i < c.size(); ++i) img[c[i]] = c[(i + 1) % c.size()];
    return Perm(img);
}

std::vector<GroupCatalogEntry> build_groups() {
    std::vector<GroupCatalogEntry> out;

    // alt(4) = <r1,r2 | r1^3 = r2^3 = (r1 r2)^2 = 1>, natural on 4 points;
    // stabilizers <r1 r2> (orbit 6) and <r1> (orbit 4)
    {
        GroupCatalogEntry e;
        e.name = "alt4";
        e.faithful.degree = 4;
        e.faithful.name = "alt4";
        e.faithful.generators = {perm_from_cycles(4, {{0, 1, 2}}), perm_from_cycles(4, {{0, 1, 3}})};
        e.orbit_keys = {"6", "4", "4b"};
        e.stabilizers = {{{0, 1}}, {{0}}, {{0}}};
        e.orbit_sizes = {6, 4, 4};
        out.push_back(std::move(e));
    }

    // sym(4) I = <t1,t2,t3 | ti^2 = (t1 t3)^3 = (t1 t2)^3 = (t2 t3)^2 = 1>:
    // t1 = (1 2), t2 = (0 1), t3 = (2 3)
    {
        GroupCatalogEntry e;
        e.name = "sym4I";
        e.faithful.degree = 4;
        e.faithful.name = "sym4I";
        e.faithful.generators = {perm_from_cycles(4, {{1, 2}}), perm_from_cycles(4, {{0, 1}}),
                                 perm_from_cycles(4, {{2, 3}})};
        e.orbit_keys = {"12", "6", "4"};
        e.stabilizers = {{{0}}, {{1}, {2}}, {{0}, {1}}};
        e.orbit_sizes = {12, 6, 4};
        out.push_back(std::move(e));
    }

    // sym(4) II = <r1,r2 | r1^3 = r2^4 = (r1 r2)^2 = 1>:
    // r1 = (1 3 2), r2 = (0 1 2 3)
    {
        GroupCatalogEntry e;
        e.name = "sym4II";
        e.faithful.degree = 4;
        e.faithful.name = "sym4II";
        e.faithful.generators = {perm_from_cycles(4, {{1, 3, 2}}), perm_from_cycles(4, {{0, 1, 2, 3}})};
        e.orbit_keys = {"12", "8", "6"};
        e.stabilizers = {{{0, 1}}, {{0}}, {{1}}};
        e.orbit_sizes = {12, 8, 6};
        out.push_back(std::move(e));
    }

    // alt(5) = <r1,r2 | r1^3 = r2^5 = (r1 r2)^2 = 1>:
    // r1 = (1 4 3), r2 = (0 1 2 3 4)
    {
        GroupCatalogEntry e;
        e.name = "alt5";
        e.faithful.degree = 5;
        e.faithful.name = "alt5";
        e.faithful.generators = {perm_from_cycles(5, {{1, 4, 3}}),
                                 perm_from_cycles(5, {{0, 1, 2, 3, 4}})};
        e.orbit_keys = {"30", "20", "12"};
        e.stabilizers = {{{0, 1}}, {{0}}, {{1}}};
        e.orbit_sizes = {30, 20, 12};
        out.push_back(std::move(e));
    }

    // alt(4) x C2 = <r,t,z | r^3 = t^2 = z^2 = (rt)^3 = [z,r] = [z,t] = 1>:
    // r = (0 1 2), t = (0 1)(2 3) on 0..3, z = (4 5)
    {
        GroupCatalogEntry e;
        e.name = "alt4xC2";
        e.faithful.degree = 6;
        e.faithful.name = "alt4xC2";
        e.faithful.generators = {perm_from_cycles(6, {{0, 1, 2}}),
                                 perm_from_cycles(6, {{0, 1}, {2, 3}}),
                                 perm_from_cycles(6, {{4, 5}})};
        e.orbit_keys = {"12", "8", "6"};
        e.stabilizers = {{{2}}, {{0}}, {{2}, {1}}};
        e.orbit_sizes = {12, 8, 6};
        out.push_back(std::move(e));
    }

    // sym(4) x C2 = B3 = <t1,t2,t3 | ti^2 = (t1 t2)^4 = (t1 t3)^3 = (t2 t3)^2 = 1>
    // acting on the octahedron vertices 0=+x 1=-x 2=+y 3=-y 4=+z 5=-z:
    // t1 = swap y,z; t2 = negate z; t3 = swap x,y
    {
        GroupCatalogEntry e;
        e.name = "sym4xC2";
        e.faithful.degree = 6;
        e.faithful.name = "sym4xC2";
        e.faithful.generators = {perm_from_cycles(6, {{2, 4}, {3, 5}}),
                                 perm_from_cycles(6, {{4, 5}}),
                                 perm_from_cycles(6, {{0, 2}, {1, 3}})};
        e.orbit_keys = {"24I", "24II", "12", "8", "6"};
        e.stabilizers = {{{0}}, {{1}}, {{1}, {2}}, {{0}, {2}}, {{0}, {1}}};
        e.orbit_sizes = {24, 24, 12, 8, 6};
        out.push_back(std::move(e));
    }

    // alt(5) x C2 = H3 = <t1,t2,t3 | ti^2 = (t1 t2)^5 = (t2 t3)^2 = (t1 t3)^3 = 1>
    // as rotations x {+-1}: ti = rho_i on 0..4 plus the swap (5 6);
    // rho1 = (0 1)(2 3), rho2 = (1 2)(3 4), rho3 = (1 4)(2 3)
    {
        GroupCatalogEntry e;
        e.name = "alt5xC2";
        e.faithful.degree = 7;
        e.faithful.name = "alt5xC2";
        e.faithful.generators = {perm_from_cycles(7, {{0, 1}, {2, 3}, {5, 6}}),
                                 perm_from_cycles(7, {{1, 2}, {3, 4}, {5, 6}}),
                                 perm_from_cycles(7, {{1, 4}, {2, 3}, {5, 6}})};
        e.orbit_keys = {"60", "30", "20", "12"};
        e.stabilizers = {{{0}}, {{1}, {2}}, {{0}, {2}}, {{0}, {1}}};
        e.orbit_sizes = {60, 30, 20, 12};
        out.push_back(std::move(e));
    }
    return out;
}

} // namespace

const std::vector<GroupCatalogEntry>& catalog_groups() {
    static const std::vector<GroupCatalogEntry> groups = build_groups();
    return groups;
}

PermGroup catalog_group(const std::string& spec) {
    auto slash = spec.find('/');
    std::string name = spec.substr(0, slash);
    const GroupCatalogEntry* entry = nullptr;
    for (const auto& e : catalog_groups())
        if (e.name == name) entry = &e;
    if (!entry) throw validation_error("unknown catalog group '" + name + "'");
    if (slash == std::string::npos)
        throw validation_error("group spec needs '/orbits=...': " + spec);
    std::string rest = spec.substr(slash + 1);
    if (rest.rfind("orbits=", 0) != 0)
        throw validation_error("group spec needs '/orbits=...': " + spec);
    rest = rest.substr(7);

    std::vector<std::vector<Word>> subgroups;
    std::string key;
    std::istringstream in(rest);
    while (std::getline(in, key, '+')) {
        auto it = std::find(entry->orbit_keys.begin(), entry->orbit_keys.end(), key);
        if (it == entry->orbit_keys.end())
            throw validation_error("group '" + name + "' has no orbit '" + key + "'");
        subgroups.push_back(entry->stabilizers[it - entry->orbit_keys.begin()]);
    }
    if (subgroups.empty()) throw validation_error("group spec lists no orbits: " + spec);
    PermGroup g = orbit_sum_action(entry->faithful, subgroups);
    g.name = spec;
    return g;
}

PermGroup dihedral_times_c2(int n) {
    if (n < 2) throw validation_error("dihedral_times_c2: need n >= 2");
    // t1: a -> -a, t2: a -> 1-a (mod n) on the n-gon; t3 = (n n+1)
    std::vector<int> i1(n + 2), i2(n + 2), i3(n + 2);
    for (int a = 0; a < n + 2; ++a) i1[a] = i2[a] = i3[a] = a;
    for (int a = 0; a < n; ++a) {
        i1[a] = ((n - a) % n + n) % n;
        i2[a] = ((1 - a) % n + n) % n;
    }
    i3[n] = n + 1;
    i3[n + 1] = n;
    PermGroup g;
    g.degree = n + 2;
    g.name = "D" + std::to_string(2 * n) + "xC2";
    g.generators = {Perm(i1), Perm(i2), Perm(i3)};
    return g;
}

} // namespace cc
