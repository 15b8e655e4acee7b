#include <doctest.h>

#include <Eigen/Dense>

#include <cmath>
#include <map>
#include <set>

#include "cc/catalog.hpp"
#include "cc/graph.hpp"
#include "cc/isomorph.hpp"
#include "cc/spectral.hpp"
#include "cc/wl.hpp"

using namespace cc;

namespace {

SphericalRep rep_of(const char* name, SimpleGraph* out_g = nullptr, ColorGraph* out_x = nullptr) {
    SimpleGraph g = catalog_graph(name);
    ColorGraph x = wl_close_graph(g);
    const SolidEntry* entry = nullptr;
    for (const SolidEntry& e : catalog_solids())
        if (e.name == name) entry = &e;
    REQUIRE(entry);
    EigenvalueChoice c;
    c.mode = EigenvalueChoice::Mode::value;
    c.value = entry->lambda;
    Projection p = projection(g, x, entry->kind, c);
    SphericalRep rep = build_rep(x, p);
    if (out_g) *out_g = g;
    if (out_x) *out_x = x;
    return rep;
}

} // namespace

TEST_CASE("icosahedron Laplacian eigenvalue 5-sqrt(5) gives a rank-3 projection") {
    SimpleGraph g = catalog_graph("icosahedron");
    ColorGraph x = wl_close_graph(g);
    EigenvalueChoice c;
    c.mode = EigenvalueChoice::Mode::value;
    c.value = 5.0 - std::sqrt(5.0);
    Projection p = projection(g, x, MatrixKind::laplacian, c);
    CHECK(p.multiplicity == 3);
    CHECK(p.lambda == doctest::Approx(2.7639320225).epsilon(1e-9));
    // fiedler selection picks the same eigenvalue here
    EigenvalueChoice f;
    f.mode = EigenvalueChoice::Mode::fiedler;
    CHECK(projection(g, x, MatrixKind::laplacian, f).lambda == doctest::Approx(p.lambda));
}

TEST_CASE("truncated tetrahedron at lambda 1 and disdyakis triacontahedron at sqrt(5)") {
    {
        SimpleGraph g = catalog_graph("truncated-tetrahedron");
        ColorGraph x = wl_close_graph(g);
        EigenvalueChoice c;
        c.mode = EigenvalueChoice::Mode::value;
        c.value = 1.0;
        CHECK(projection(g, x, MatrixKind::laplacian, c).multiplicity == 3);
    }
    {
        SimpleGraph g = catalog_graph("disdyakis-triacontahedron");
        ColorGraph x = wl_close_graph(g);
        EigenvalueChoice c;
        c.mode = EigenvalueChoice::Mode::value;
        c.value = std::sqrt(5.0);
        CHECK(projection(g, x, MatrixKind::adjacency, c).multiplicity == 3);
    }
}

TEST_CASE("no multiplicity-3 eigenvalue is an error") {
    SimpleGraph g = path_graph(5); // path spectrum is simple
    ColorGraph x = wl_close_graph(g);
    EigenvalueChoice c; // automatic
    CHECK_THROWS_AS(projection(g, x, MatrixKind::laplacian, c), validation_error);
}

TEST_CASE("fewer than three vertices cannot carry a rank-3 projection") {
    SimpleGraph g = path_graph(2);
    ColorGraph x = wl_close_graph(g);
    EigenvalueChoice c;
    CHECK_THROWS_AS(projection(g, x, MatrixKind::laplacian, c), validation_error);
}

TEST_CASE("icosahedron representation: W, antipodal parabolic") {
    ColorGraph x;
    SphericalRep rep = rep_of("icosahedron", nullptr, &x);
    CHECK(rep.W.size() == 4);
    CHECK(rep.antipodal.num_classes() == 6);
    for (const auto& cls : rep.antipodal.classes) CHECK(cls.size() == 2);
    // unit vectors and symmetric Gram with unit diagonal
    for (int v = 0; v < rep.n; ++v) {
        double norm = 0;
        for (double c : rep.points[v]) norm += c * c;
        CHECK(std::abs(norm - 1.0) < 1e-9);
        CHECK(std::abs(rep.gram[v * rep.n + v] - 1.0) < 1e-9);
    }
}

TEST_CASE("tetrahedron representation has W = {1, -1/3} and trivial antipodal parabolic") {
    SphericalRep rep = rep_of("tetrahedron");
    REQUIRE(rep.W.size() == 2);
    CHECK(rep.W[0] == doctest::Approx(-1.0 / 3));
    CHECK(rep.W[1] == doctest::Approx(1.0));
    CHECK(rep.w_minus_one == -1);
    CHECK(rep.antipodal.num_classes() == 4);
}

TEST_CASE("rainbow class counts |S_rho| = |W| (published values on one fiber)") {
    for (const SolidEntry& e : catalog_solids()) {
        ColorGraph x;
        SphericalRep rep = rep_of(e.name.c_str(), nullptr, &x);
        RainbowRho rho = rainbow_rho(x, rep);
        CHECK(rho.rainbow.rank() == static_cast<int>(rep.W.size()));
        if (x.fiber_count() == 1) CHECK_MESSAGE(static_cast<int>(rep.W.size()) == e.expected_srho, e.name);
    }
}

TEST_CASE("rhombic dodecahedron Gram values are the octahedral axis cosines") {
    // cross-fiber coincidences are exact: W = {0, +-1/3, +-1/sqrt(3), +-1},
    // so the Gram rainbow has 7 classes even though the published table
    // lists the per-fiber-block refinement (11) for this row
    SphericalRep rep = rep_of("rhombic-dodecahedron");
    std::vector<double> expect = {-1.0, -1.0 / std::sqrt(3.0), -1.0 / 3.0, 0.0,
                                  1.0 / 3.0, 1.0 / std::sqrt(3.0), 1.0};
    REQUIRE(rep.W.size() == expect.size());
    for (size_t i = 0; i < expect.size(); ++i) CHECK(rep.W[i] == doctest::Approx(expect[i]));
}

TEST_CASE("multi-fiber Gram class counts, by value and by value-within-block") {
    // the four Catalan solids have exact cross-block Gram coincidences; the
    // per-ordered-block refinement reproduces the published counts for the
    // two-fiber rows
    std::map<std::string, std::pair<int, int>> expect = {
        {"rhombic-dodecahedron", {7, 11}},
        {"rhombic-triacontahedron", {12, 18}},
        {"disdyakis-dodecahedron", {13, 28}},
        {"disdyakis-triacontahedron", {29, 51}},
    };
    for (const SolidEntry& e : catalog_solids()) {
        if (!expect.count(e.name)) continue;
        ColorGraph x;
        SphericalRep rep = rep_of(e.name.c_str(), nullptr, &x);
        CHECK_MESSAGE(static_cast<int>(rep.W.size()) == expect[e.name].first, e.name);
        std::set<std::pair<int, std::pair<int, int>>> blocked;
        for (ColorId s = 0; s < x.rank(); ++s)
            blocked.insert({rep.w_of_color[s], x.color_fibers(s)});
        CHECK_MESSAGE(static_cast<int>(blocked.size()) == expect[e.name].second, e.name);
    }
}

TEST_CASE("A_rho reconstruction from the w map") {
    ColorGraph x;
    SphericalRep rep = rep_of("cube", nullptr, &x);
    for (int a = 0; a < rep.n; ++a)
        for (int b = 0; b < rep.n; ++b) {
            double w = rep.W[rep.w_of_color[x.color(a, b)]];
            CHECK(std::abs(w - rep.gram[a * rep.n + b]) < 1e-7);
        }
}

TEST_CASE("w is converse-invariant and the octahedron rainbow equals the scheme") {
    ColorGraph x;
    SphericalRep rep = rep_of("octahedron", nullptr, &x);
    for (ColorId s = 0; s < x.rank(); ++s)
        CHECK(rep.w_of_color[s] == rep.w_of_color[x.converse(s)]);
    RainbowRho rho = rainbow_rho(x, rep);
    CHECK(same_partition(rho.rainbow, x)); // 3/3 case: X_rho = X
}

TEST_CASE("intersection numbers are bounded by 2 on non-thin colors whenever a rep exists") {
    for (const char* name : {"icosahedron", "truncated-tetrahedron", "rhombic-dodecahedron"}) {
        ColorGraph x;
        SphericalRep rep = rep_of(name, nullptr, &x);
        IntersectionTensor t = tensor(x);
        for (ColorId u = 0; u < x.rank(); ++u) {
            if (is_thin_color(x, u)) continue;
            for (const auto& [key, c] : t.by_result[u]) CHECK_MESSAGE(c <= 2, name);
        }
    }
}

TEST_CASE("faithfulness of the catalog representations") {
    for (const char* name : {"tetrahedron", "cube", "truncated-octahedron"}) {
        ColorGraph x;
        SphericalRep rep = rep_of(name, nullptr, &x);
        RainbowRho rho = rainbow_rho(x, rep);
        CHECK_MESSAGE(is_faithful(x, rho), name);
    }
}

TEST_CASE("Mobius-Kantor eigenvalues 1 and -1 do not give faithful representations") {
    // both eigenspaces identify vertices in groups of four: the normalized
    // projection map violates the injectivity condition, so no faithful
    // S2-representation arises at these eigenvalues
    SimpleGraph g = catalog_graph("mobius-kantor");
    ColorGraph x = wl_close_graph(g);
    for (double lambda : {1.0, -1.0}) {
        EigenvalueChoice c;
        c.mode = EigenvalueChoice::Mode::value;
        c.value = lambda;
        Projection p = projection(g, x, MatrixKind::adjacency, c);
        REQUIRE(p.multiplicity == 3);
        CHECK_THROWS_WITH_AS(build_rep(x, p),
                             doctest::Contains("not injective"), validation_error);
    }
}

TEST_CASE("algebraic images of A_rho keep entry set, symmetry and eigenvalues") {
    // apply an algebraic automorphism sigma to A_rho (as the value sum over
    // remapped colors) and compare invariants of the image matrix
    ColorGraph x = wl_close_graph(catalog_graph("cube"));
    SphericalRep rep = rep_of("cube");
    for (const auto& sigma : algebraic_aut_group(x)) {
        const int n = x.n();
        std::vector<double> image(static_cast<size_t>(n) * n, 0.0);
        // A' = sum_w w A_{sigma(s_w)}
        std::vector<int> sigma_inv(x.rank());
        for (int s = 0; s < x.rank(); ++s) sigma_inv[sigma[s]] = s;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                image[static_cast<size_t>(a) * n + b] =
                    rep.W[rep.w_of_color[sigma_inv[x.color(a, b)]]];
        // (1) same entry set
        std::set<long long> s1, s2;
        for (size_t i = 0; i < image.size(); ++i) {
            s1.insert(llround(rep.gram[i] * 1e6));
            s2.insert(llround(image[i] * 1e6));
        }
        CHECK(s1 == s2);
        // (2) symmetry
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                CHECK(image[static_cast<size_t>(a) * n + b] ==
                      doctest::Approx(image[static_cast<size_t>(b) * n + a]));
        // (3) equal eigenvalues to 1e-8
        Eigen::MatrixXd ma(n, n), mb(n, n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                ma(a, b) = rep.gram[static_cast<size_t>(a) * n + b];
                mb(a, b) = image[static_cast<size_t>(a) * n + b];
            }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ea(ma), eb(mb);
        for (int i = 0; i < n; ++i)
            CHECK(std::abs(ea.eigenvalues()(i) - eb.eigenvalues()(i)) < 1e-8);
        // (4) column coincidence transfers
        auto has_equal_columns = [n](const Eigen::MatrixXd& m) {
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    if ((m.col(a) - m.col(b)).norm() < 1e-9) return true;
            return false;
        };
        CHECK(has_equal_columns(ma) == has_equal_columns(mb));
    }
}
