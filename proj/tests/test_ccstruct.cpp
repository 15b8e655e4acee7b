#include <doctest.h>

#include <algorithm>
#include <set>

#include "cc/catalog.hpp"
#include "cc/graph.hpp"
#include "cc/isomorph.hpp"
#include "cc/perm.hpp"
#include "cc/wl.hpp"

using namespace cc;

namespace {

ColorGraph trivial_config(int n) {
    std::vector<int> m(static_cast<size_t>(n) * n, 1);
    for (int i = 0; i < n; ++i) m[static_cast<size_t>(i) * n + i] = 0;
    return ColorGraph::from_matrix(n, m);
}

// brute-force count |a r  ∩  b s*| for a representative pair of t
int oracle_c(const ColorGraph& x, ColorId r, ColorId s, ColorId t) {
    auto [a, b] = x.representative(t);
    int count = 0;
    for (int g = 0; g < x.n(); ++g)
        if (x.color(a, g) == r && x.color(g, b) == s) ++count;
    return count;
}

} // namespace

TEST_CASE("trivial configuration is valid, rank 2") {
    ColorGraph x = trivial_config(5);
    CHECK(x.rank() == 2);
    CHECK(validate(x).ok());
}

TEST_CASE("WL closure outputs validate") {
    for (const char* name : {"cube", "icosahedron", "truncated-tetrahedron"}) {
        ColorGraph x = wl_close_graph(catalog_graph(name));
        ValidationReport rep = validate(x);
        CHECK_MESSAGE(rep.ok(), name, ": ", rep.detail);
    }
}

TEST_CASE("broken converse is reported as a (C2) violation") {
    // 3-point matrix where color(0,1)=1 but color(1,0)=2 while (0,2)/(2,0)
    // also use 1/2 inconsistently
    std::vector<int> m = {0, 1, 2,
                          2, 0, 1,
                          1, 2, 0};
    // this one is actually consistent (converse swaps 1 and 2); break it:
    m[1 * 3 + 0] = 1;
    m[0 * 3 + 1] = 1;
    ColorGraph x = ColorGraph::from_matrix(3, m);
    ValidationReport rep = validate(x);
    CHECK_FALSE(rep.ok());
    CHECK_FALSE(rep.c2);
    CHECK(rep.detail.find("(C2)") != std::string::npos);
}

TEST_CASE("pentagon distance scheme tensor") {
    ColorGraph x = wl_close_graph(cycle_graph(5));
    REQUIRE(x.rank() == 3);
    IntersectionTensor t = tensor(x, true);
    // colors: 0 diagonal, 1 adjacent, 2 distance two
    CHECK(t.c(1, 1, 2) == oracle_c(x, 1, 1, 2));
    CHECK(t.c(1, 1, 2) == 1);
    // c_{r,s}^t with t reflexive and s != r* vanishes
    CHECK(t.c(1, 2, 0) == 0);
}

TEST_CASE("cube distance scheme valencies") {
    ColorGraph x = wl_close_graph(catalog_graph("cube"));
    REQUIRE(x.rank() == 4);
    std::multiset<long long> vals;
    for (ColorId s = 0; s < x.rank(); ++s) vals.insert(x.valency(s));
    CHECK(vals == std::multiset<long long>{1, 1, 3, 3});
}

TEST_CASE("tensor counting identities") {
    for (const char* name : {"octahedron", "cube", "truncated-tetrahedron"}) {
        ColorGraph x = wl_close_graph(catalog_graph(name));
        IntersectionTensor t = tensor(x, true);
        // sum over t of c_{r,s}^t n_t = n_r n_s when fibers line up
        for (ColorId r = 0; r < x.rank(); ++r)
            for (ColorId s = 0; s < x.rank(); ++s) {
                if (x.color_fibers(r).second != x.color_fibers(s).first) continue;
                long long lhs = 0;
                for (ColorId u = 0; u < x.rank(); ++u) {
                    if (x.color_fibers(u).first != x.color_fibers(r).first) continue;
                    if (x.color_fibers(u).second != x.color_fibers(s).second) continue;
                    lhs += static_cast<long long>(t.c(r, s, u)) * t.valency[u];
                }
                CHECK(lhs == t.valency[r] * t.valency[s]);
            }
        // n_{s*} |source fiber| = n_s |target fiber| ... i.e. |s| = |s*|
        for (ColorId s = 0; s < x.rank(); ++s) {
            auto [fa, fb] = x.color_fibers(s);
            CHECK(x.valency(s) * static_cast<long long>(x.fibers()[fa].size()) ==
                  x.color_size(s));
            CHECK(x.color_size(s) == x.color_size(x.converse(s)));
        }
    }
}

TEST_CASE("thinness predicates") {
    // regular C5: thin scheme
    PermGroup c5;
    c5.degree = 5;
    c5.generators = {Perm({1, 2, 3, 4, 0})};
    ColorGraph thin = inv(c5);
    CHECK(is_semiregular(thin));
    CHECK(is_quasi_thin(thin));

    // D10 on 5 points: quasi-thin, not semiregular
    PermGroup d10;
    d10.degree = 5;
    d10.generators = {Perm({1, 2, 3, 4, 0}), Perm({0, 4, 3, 2, 1})};
    ColorGraph qt = inv(d10);
    std::multiset<long long> vals;
    for (ColorId s = 0; s < qt.rank(); ++s) vals.insert(qt.valency(s));
    CHECK(vals == std::multiset<long long>{1, 2, 2});
    CHECK(is_quasi_thin(qt));
    CHECK_FALSE(is_semiregular(qt));

    // octahedron scheme has a valency-4 color
    CHECK_FALSE(is_quasi_thin(wl_close_graph(catalog_graph("octahedron"))));
}

TEST_CASE("parabolics of the trivial configuration") {
    ColorGraph x = trivial_config(4);
    IntersectionTensor t = tensor(x);
    std::vector<Parabolic> ps = parabolics(x, t);
    CHECK(ps.size() == 2); // 1_Omega and Omega^2
}

TEST_CASE("antipodal parabolics of the cube and icosahedron schemes") {
    for (auto [name, classes] : {std::pair<const char*, int>{"cube", 4}, {"icosahedron", 6}}) {
        ColorGraph x = wl_close_graph(catalog_graph(name));
        IntersectionTensor t = tensor(x);
        bool found = false;
        for (const Parabolic& e : parabolics(x, t))
            if (e.num_classes() == classes) {
                bool all2 = true;
                for (const auto& cls : e.classes)
                    if (cls.size() != 2) all2 = false;
                found = found || all2;
            }
        CHECK_MESSAGE(found, name);
    }
}

TEST_CASE("quotient by the identity parabolic is the original") {
    ColorGraph x = wl_close_graph(catalog_graph("cube"));
    IntersectionTensor t = tensor(x);
    Parabolic one = parabolic_closure(x, t, {});
    REQUIRE(one.num_classes() == x.n());
    QuotientMap qm = quotient(x, one);
    CHECK(same_partition(qm.quotient, x));
}

TEST_CASE("cube scheme modulo the antipodal parabolic is the rank-2 K4 configuration") {
    ColorGraph x = wl_close_graph(catalog_graph("cube"));
    IntersectionTensor t = tensor(x);
    Parabolic anti;
    bool found = false;
    for (const Parabolic& e : parabolics(x, t))
        if (e.num_classes() == 4) {
            anti = e;
            found = true;
        }
    REQUIRE(found);
    QuotientMap qm = quotient(x, anti);
    CHECK(qm.quotient.n() == 4);
    CHECK(qm.quotient.rank() == 2);
}

TEST_CASE("quotient by the full parabolic is a point") {
    ColorGraph x = wl_close_graph(catalog_graph("octahedron"));
    IntersectionTensor t = tensor(x);
    std::vector<ColorId> all;
    for (ColorId s = 0; s < x.rank(); ++s) all.push_back(s);
    Parabolic full = parabolic_closure(x, t, all);
    REQUIRE(full.num_classes() == 1);
    CHECK(quotient(x, full).quotient.n() == 1);
}

TEST_CASE("quotients of group configurations validate") {
    ColorGraph x = inv(catalog_group("sym4xC2/orbits=12+6"));
    IntersectionTensor t = tensor(x);
    for (const Parabolic& e : parabolics(x, t)) {
        QuotientMap qm = quotient(x, e);
        CHECK(validate(qm.quotient).ok());
        // color containment: pi^-1(pi(s)) contains s
        for (int a = 0; a < x.n(); ++a)
            for (int b = 0; b < x.n(); ++b) {
                int qc = qm.quotient.color(qm.pi[a], qm.pi[b]);
                auto [ra, rb] = x.representative(x.color(a, b));
                CHECK(qm.quotient.color(qm.pi[ra], qm.pi[rb]) == qc);
            }
    }
}

TEST_CASE("restriction to the whole set is the identity") {
    ColorGraph x = wl_close_graph(catalog_graph("cube"));
    std::vector<int> omega(x.n());
    for (int i = 0; i < x.n(); ++i) omega[i] = i;
    CHECK(same_partition(restriction(x, omega), x));
}

TEST_CASE("restriction of sym(4)I on 12+6 to the 6-orbit matches the constituent") {
    ColorGraph whole = inv(catalog_group("sym4I/orbits=12+6"));
    std::vector<int> six;
    for (int i = 12; i < 18; ++i) six.push_back(i);
    ColorGraph restricted = restriction(whole, six);
    ColorGraph constituent = inv(catalog_group("sym4I/orbits=6"));
    CHECK(restricted.rank() == constituent.rank());
    CHECK(color_isomorphic(restricted, constituent).has_value());
}

TEST_CASE("restriction of a fiber of a semiregular configuration is regular") {
    PermGroup c4;
    c4.degree = 4;
    c4.generators = {Perm({1, 2, 3, 0})};
    PermGroup two = orbit_sum_action(regular_representation(c4), {{{}}, {{}}});
    // two regular orbits of C4; restrict to the first fiber
    ColorGraph x = inv(two);
    std::vector<int> first;
    for (int i = 0; i < 4; ++i) first.push_back(i);
    ColorGraph r = restriction(x, first);
    CHECK(is_semiregular(r));
    CHECK(r.rank() == 4);
}

TEST_CASE("restriction accepts parabolic classes and rejects arbitrary sets") {
    ColorGraph x = inv(catalog_group("sym4I/orbits=12+6"));
    // {0,1,2} is a class of a parabolic with four 3-classes on the 12-orbit
    ColorGraph r = restriction(x, std::vector<int>{0, 1, 2});
    CHECK(r.n() == 3);
    CHECK(validate(r).ok());
    // a mixed pair straddling the two orbits is not a class of anything
    CHECK_THROWS_AS(restriction(x, std::vector<int>{0, 12}), validation_error);
}

TEST_CASE("find_complement on D8xC2 acting on the two 8-orbits") {
    // Claim 2 setting: Delta1 u Delta2 = cosets of <t1> and <t2>, e = e(t3)
    PermGroup d8c2 = dihedral_times_c2(4);
    PermGroup act = orbit_sum_action(d8c2, {{{0}}, {{1}}});
    REQUIRE(act.degree == 16);
    ColorGraph x = inv(act);

    // e(sigma) for sigma = the central involution t3
    Perm sigma = act.generators[2];
    std::vector<int> cls(act.degree, -1);
    std::vector<std::vector<int>> classes;
    for (int a = 0; a < act.degree; ++a) {
        if (cls[a] >= 0) continue;
        int id = static_cast<int>(classes.size());
        cls[a] = id;
        if (sigma[a] != a) {
            cls[sigma[a]] = id;
            classes.push_back({a, sigma[a]});
        } else {
            classes.push_back({a});
        }
    }
    Parabolic e;
    e.classes = classes;
    e.class_of = cls;
    std::set<ColorId> colors;
    for (int a = 0; a < act.degree; ++a) colors.insert(x.color(a, sigma[a]));
    for (int a = 0; a < act.degree; ++a) colors.insert(x.color(a, a));
    e.colors.assign(colors.begin(), colors.end());

    std::vector<int> delta;
    for (int a = 0; a < act.degree; ++a)
        if (sigma[a] != a) delta.push_back(a);
    REQUIRE(delta.size() == 16); // t3 moves every coset of <t1> and <t2>

    auto comp = find_complement(x, e, delta);
    REQUIRE(comp.has_value());
    CHECK(comp->num_classes() == 2);
    // each class meets each e-class once
    for (const auto& cc_cls : comp->classes) CHECK(cc_cls.size() == 8);
}

TEST_CASE("find_complement returns none when no 2-class parabolic exists") {
    // C4 regular: antipodal parabolic e has two classes of size 2; x has a
    // 2-class parabolic only if some color union gives one -- check the
    // contract on the pentagon scheme instead, whose only parabolics are
    // trivial
    ColorGraph x = wl_close_graph(cycle_graph(5));
    IntersectionTensor t = tensor(x);
    Parabolic one = parabolic_closure(x, t, {});
    std::vector<int> omega{0, 1, 2, 3, 4};
    CHECK_FALSE(find_complement(x, one, omega).has_value());
}

TEST_CASE("quotient rejects a non-parabolic") {
    ColorGraph x = wl_close_graph(cycle_graph(5));
    Parabolic fake;
    fake.colors = {0, 1}; // diagonal plus the adjacency color: not transitive
    fake.classes = {{0, 1, 2, 3, 4}};
    fake.class_of = {0, 0, 0, 0, 0};
    CHECK_THROWS_AS(quotient(x, fake), validation_error);
}

TEST_CASE("algebraic fusion by the trivial group is the identity") {
    ColorGraph x = wl_close_graph(catalog_graph("cube"));
    std::vector<int> id(x.rank());
    for (int i = 0; i < x.rank(); ++i) id[i] = i;
    CHECK(same_partition(algebraic_fusion(x, {id}), x));
}

TEST_CASE("fusing the thin C3 scheme by the converse map drops rank to 2") {
    PermGroup c3;
    c3.degree = 3;
    c3.generators = {Perm({1, 2, 0})};
    ColorGraph x = inv(c3);
    REQUIRE(x.rank() == 3);
    std::vector<int> conv(x.rank());
    for (ColorId s = 0; s < x.rank(); ++s) conv[s] = x.converse(s);
    ColorGraph fused = algebraic_fusion(x, {conv});
    CHECK(fused.rank() == 2);
}

TEST_CASE("fusion rejects a non-automorphism") {
    ColorGraph x = wl_close_graph(catalog_graph("cube"));
    // swapping a reflexive and a non-reflexive color is never algebraic
    std::vector<int> bad(x.rank());
    for (int i = 0; i < x.rank(); ++i) bad[i] = i;
    std::swap(bad[0], bad[1]);
    CHECK_THROWS_AS(algebraic_fusion(x, {bad}), validation_error);
}

TEST_CASE("dihedral two-orbit fusion is quasi-thin with one thin basis relation") {
    // inv(D_2n on two faithful n-orbits), n = 4, fused by the involution
    // swapping the two fibers
    PermGroup d8;
    d8.degree = 4;
    d8.generators = {Perm({3, 2, 1, 0}), Perm({1, 0, 3, 2})}; // t1: a->-a-? t2: a->1-a
    // use explicit dihedral action: t1 = reflection a -> -a, t2 = a -> 1-a
    std::vector<int> i1(4), i2(4);
    for (int a = 0; a < 4; ++a) {
        i1[a] = ((4 - a) % 4);
        i2[a] = ((1 - a) % 4 + 4) % 4;
    }
    d8.generators = {Perm(i1), Perm(i2)};
    PermGroup act = orbit_sum_action(d8, {{{0}}, {{1}}});
    ColorGraph x = inv(act);

    // find an algebraic automorphism swapping the two fibers
    std::vector<std::vector<int>> phi = algebraic_aut_group(x);
    bool fused_ok = false;
    for (const auto& sigma : phi) {
        ColorId refl0 = x.color(0, 0);
        ColorId refl1 = x.color(act.degree - 1, act.degree - 1);
        if (sigma[refl0] != refl1) continue;
        ColorGraph fused = algebraic_fusion(x, {sigma});
        int thin = 0;
        for (ColorId s = 0; s < fused.rank(); ++s)
            if (!fused.is_reflexive(s) && is_thin_color(fused, s)) ++thin;
        if (is_quasi_thin(fused) && thin == 1) fused_ok = true;
    }
    CHECK(fused_ok);
}

TEST_CASE("fusion never increases rank") {
    ColorGraph x = inv(catalog_group("alt4/orbits=6+4"));
    for (const auto& sigma : algebraic_aut_group(x))
        CHECK(algebraic_fusion(x, {sigma}).rank() <= x.rank());
}
