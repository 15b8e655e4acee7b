#include "cc/spectral.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

#include "cc/wl.hpp"

namespace cc {

namespace {

constexpr double kIdempotentTol = 1e-9;
constexpr double kColorConstTol = 1e-7;
constexpr double kGramClusterTol = 1e-6;
constexpr double kLambdaMatchTol = 1e-6;

Eigen::MatrixXd graph_matrix(const SimpleGraph& g, MatrixKind kind) {
    const int n = g.n();
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (auto [u, v] : g.edges()) {
        m(u, v) = 1.0;
        m(v, u) = 1.0;
    }
    if (kind == MatrixKind::laplacian) {
        for (int v = 0; v < n; ++v) {
            m(v, v) = g.degree(v);
            for (int u = 0; u < n; ++u)
                if (u != v && m(v, u) != 0.0) m(v, u) = -1.0;
        }
    }
    return m;
}

// distinct eigenvalues with multiplicities, grouped at 1e-7 * scale
struct Spectrum {
    std::vector<double> values;
    std::vector<int> first;        // index of first eigenvector column
    std::vector<int> multiplicity;
    Eigen::MatrixXd vectors;
};

Spectrum eigen_spectrum(const Eigen::MatrixXd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
    if (solver.info() != Eigen::Success) throw error("eigensolver failed to converge");
    Spectrum s;
    s.vectors = solver.eigenvectors();
    const auto& ev = solver.eigenvalues();
    double scale = std::max(1.0, std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1))));
    double tol = 1e-7 * scale;
    for (int i = 0; i < ev.size(); ++i) {
        if (!s.values.empty() && std::abs(ev(i) - s.values.back()) <= tol) {
            ++s.multiplicity.back();
        } else {
            s.values.push_back(ev(i));
            s.first.push_back(i);
            s.multiplicity.push_back(1);
        }
    }
    return s;
}

} // namespace

std::string to_string(MatrixKind k) { return k == MatrixKind::laplacian ? "L" : "A"; }

MatrixKind matrix_kind_from_string(const std::string& s) {
    if (s == "L" || s == "l" || s == "laplacian") return MatrixKind::laplacian;
    if (s == "A" || s == "a" || s == "adjacency") return MatrixKind::adjacency;
    throw validation_error("unknown matrix kind '" + s + "' (expected L or A)");
}

EigenvalueChoice EigenvalueChoice::parse(const std::string& s) {
    EigenvalueChoice c;
    if (s == "auto") {
        c.mode = Mode::automatic;
    } else if (s == "fiedler") {
        c.mode = Mode::fiedler;
    } else {
        c.mode = Mode::value;
        size_t pos = 0;
        c.value = std::stod(s, &pos);
        if (pos != s.size()) throw validation_error("bad eigenvalue '" + s + "'");
    }
    return c;
}

std::vector<double> multiplicity3_eigenvalues(const SimpleGraph& g, MatrixKind kind) {
    Spectrum s = eigen_spectrum(graph_matrix(g, kind));
    std::vector<double> out;
    for (size_t i = 0; i < s.values.size(); ++i)
        if (s.multiplicity[i] == 3) out.push_back(s.values[i]);
    return out;
}

Projection projection(const SimpleGraph& g, const ColorGraph& x, MatrixKind kind,
                      const EigenvalueChoice& choice) {
    if (g.n() != x.n()) throw validation_error("projection: graph and configuration sizes differ");
    if (g.n() < 3) throw validation_error("projection: need n >= 3 for a rank-3 projection");
    Spectrum s = eigen_spectrum(graph_matrix(g, kind));

    int idx = -1;
    switch (choice.mode) {
        case EigenvalueChoice::Mode::value: {
            for (size_t i = 0; i < s.values.size(); ++i)
                if (std::abs(s.values[i] - choice.value) <= kLambdaMatchTol) idx = static_cast<int>(i);
            if (idx < 0)
                throw validation_error("projection: no eigenvalue matches " +
                                       std::to_string(choice.value));
            break;
        }
        case EigenvalueChoice::Mode::fiedler: {
            if (kind != MatrixKind::laplacian)
                throw validation_error("projection: fiedler selection requires the Laplacian");
            if (s.values.size() < 2) throw validation_error("projection: no Fiedler eigenvalue");
            idx = 1;
            break;
        }
        case EigenvalueChoice::Mode::automatic: {
            for (size_t i = 0; i < s.values.size(); ++i)
                if (s.multiplicity[i] == 3) {
                    idx = static_cast<int>(i);
                    break;
                }
            if (idx < 0)
                throw validation_error("projection: no eigenvalue of multiplicity 3");
            break;
        }
    }
    if (s.multiplicity[idx] != 3)
        throw validation_error("projection: eigenvalue " + std::to_string(s.values[idx]) +
                               " has multiplicity " + std::to_string(s.multiplicity[idx]) +
                               ", need exactly 3");

    const int n = g.n();
    Eigen::MatrixXd basis = s.vectors.block(0, s.first[idx], n, 3);
    Eigen::MatrixXd P = basis * basis.transpose();

    // idempotency (diagnostic; holds by construction up to fp error)
    double idem = (P * P - P).cwiseAbs().maxCoeff();
    if (idem > kIdempotentTol)
        throw validation_error("projection: P^2 - P deviation " + std::to_string(idem));
    // no zero column
    for (int v = 0; v < n; ++v)
        if (P.col(v).norm() < 1e-9)
            throw validation_error("projection: zero column at vertex " + std::to_string(v) +
                                   " (no-zero-column hypothesis fails)");
    // P must lie in the adjacency algebra: constant on every color class
    std::vector<double> lo(x.rank(), 1e300), hi(x.rank(), -1e300);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            ColorId c = x.color(a, b);
            lo[c] = std::min(lo[c], P(a, b));
            hi[c] = std::max(hi[c], P(a, b));
        }
    for (ColorId c = 0; c < x.rank(); ++c)
        if (hi[c] - lo[c] > kColorConstTol)
            throw validation_error(
                "projection: P is not constant on color " + std::to_string(c) +
                " (numerics inconsistent with the combinatorial partition)");

    Projection out;
    out.kind = kind;
    out.lambda = s.values[idx];
    out.multiplicity = 3;
    out.n = n;
    out.p.assign(P.data(), P.data() + static_cast<size_t>(n) * n); // column-major is fine: symmetric
    out.basis_rows.resize(n);
    for (int v = 0; v < n; ++v) out.basis_rows[v] = {basis(v, 0), basis(v, 1), basis(v, 2)};
    return out;
}

SphericalRep build_rep(const ColorGraph& x, const Projection& proj) {
    const int n = proj.n;
    if (x.n() != n) throw validation_error("build_rep: size mismatch");

    SphericalRep rep;
    rep.n = n;
    rep.kind = proj.kind;
    rep.lambda = proj.lambda;
    rep.points.resize(n);
    for (int v = 0; v < n; ++v) {
        const auto& r = proj.basis_rows[v];
        double norm = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
        if (norm < 1e-9) throw validation_error("build_rep: zero projection column");
        rep.points[v] = {r[0] / norm, r[1] / norm, r[2] / norm};
    }
    rep.gram.assign(static_cast<size_t>(n) * n, 0.0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const auto& pa = rep.points[a];
            const auto& pb = rep.points[b];
            rep.gram[static_cast<size_t>(a) * n + b] =
                pa[0] * pb[0] + pa[1] * pb[1] + pa[2] * pb[2];
        }

    // Gram entries must be constant on every color class of x
    {
        std::vector<double> lo(x.rank(), 1e300), hi(x.rank(), -1e300);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                ColorId c = x.color(a, b);
                double v = rep.gram[static_cast<size_t>(a) * n + b];
                lo[c] = std::min(lo[c], v);
                hi[c] = std::max(hi[c], v);
            }
        for (ColorId c = 0; c < x.rank(); ++c)
            if (hi[c] - lo[c] > kColorConstTol)
                throw validation_error("build_rep: Gram matrix is not constant on color " +
                                       std::to_string(c));
    }

    // cluster the Gram values
    std::vector<double> sorted(rep.gram);
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::pair<double, double>> clusters; // (sum, count) -> mean later
    std::vector<double> bounds;                      // last value of each cluster
    for (double v : sorted) {
        if (clusters.empty() || v - bounds.back() > kGramClusterTol) {
            clusters.emplace_back(v, 1.0);
            bounds.push_back(v);
        } else {
            clusters.back().first += v;
            clusters.back().second += 1.0;
            bounds.back() = v;
        }
    }
    rep.W.resize(clusters.size());
    for (size_t i = 0; i < clusters.size(); ++i) rep.W[i] = clusters[i].first / clusters[i].second;
    for (size_t i = 0; i + 1 < rep.W.size(); ++i)
        if (rep.W[i + 1] - rep.W[i] < 10 * kGramClusterTol)
            throw validation_error("build_rep: Gram clustering ambiguous near " +
                                   std::to_string(rep.W[i]));

    auto w_index = [&](double v) {
        int lo = 0, hi = static_cast<int>(rep.W.size()) - 1;
        while (lo < hi) {
            int mid = (lo + hi) / 2;
            if (v > (rep.W[mid] + rep.W[mid + 1]) / 2)
                lo = mid + 1;
            else
                hi = mid;
        }
        return lo;
    };

    // every color must land in one cluster; this cross-check arbitrates the
    // numerics against the combinatorial partition
    rep.w_of_color.assign(x.rank(), -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            ColorId c = x.color(a, b);
            int w = w_index(rep.gram[static_cast<size_t>(a) * n + b]);
            if (rep.w_of_color[c] < 0)
                rep.w_of_color[c] = w;
            else if (rep.w_of_color[c] != w)
                throw validation_error("build_rep: color " + std::to_string(c) +
                                       " straddles two Gram clusters");
        }

    for (size_t i = 0; i < rep.W.size(); ++i) {
        if (std::abs(rep.W[i] - 1.0) <= 1e-7) rep.w_one = static_cast<int>(i);
        if (std::abs(rep.W[i] + 1.0) <= 1e-7) rep.w_minus_one = static_cast<int>(i);
    }
    if (rep.w_one < 0) throw validation_error("build_rep: 1 is missing from the Gram value set");

    // injectivity: the w=1 class must be exactly the diagonal
    for (ColorId c = 0; c < x.rank(); ++c)
        if (rep.w_of_color[c] == rep.w_one && !x.is_reflexive(c))
            throw validation_error("build_rep: representation is not injective "
                                   "(two vertices share a unit vector)");

    // antipodal parabolic s(1) u s(-1)
    std::vector<ColorId> anti_colors;
    for (ColorId c = 0; c < x.rank(); ++c)
        if (rep.w_of_color[c] == rep.w_one || (rep.w_minus_one >= 0 && rep.w_of_color[c] == rep.w_minus_one))
            anti_colors.push_back(c);
    // build classes directly: a is paired with b iff gram ~ -1
    std::vector<int> cls(n, -1);
    std::vector<std::vector<int>> classes;
    for (int a = 0; a < n; ++a) {
        if (cls[a] >= 0) continue;
        int id = static_cast<int>(classes.size());
        classes.push_back({a});
        cls[a] = id;
        for (int b = a + 1; b < n; ++b) {
            if (cls[b] >= 0) continue;
            int w = rep.w_of_color[x.color(a, b)];
            if (w == rep.w_minus_one && rep.w_minus_one >= 0) {
                if (classes[id].size() >= 2)
                    throw validation_error("build_rep: antipodal class larger than 2");
                classes[id].push_back(b);
                cls[b] = id;
            }
        }
    }
    rep.antipodal.colors = std::move(anti_colors);
    rep.antipodal.classes = std::move(classes);
    rep.antipodal.class_of = std::move(cls);
    return rep;
}

RainbowRho rainbow_rho(const ColorGraph& x, const SphericalRep& rep) {
    const int n = rep.n;
    std::vector<int> matrix(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            matrix[static_cast<size_t>(a) * n + b] = rep.w_of_color[x.color(a, b)];
    RainbowRho rb;
    rb.rainbow = ColorGraph::from_matrix(n, matrix);
    if (!rb.rainbow.rainbow_ok())
        throw validation_error("rainbow_rho: Gram partition violates the rainbow axioms");
    // map canonical class ids back to Gram values
    rb.w_values.assign(rb.rainbow.rank(), 0.0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            rb.w_values[rb.rainbow.color(a, b)] = rep.W[rep.w_of_color[x.color(a, b)]];
    return rb;
}

bool is_faithful(const ColorGraph& x, const RainbowRho& rb) {
    ColorGraph closed = wl_close_rainbow(rb.rainbow);
    return closed.rank() == x.rank();
}

} // namespace cc
