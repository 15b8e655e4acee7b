#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "cc/color_graph.hpp"

namespace cc {

namespace {

// Classes of the union of the given colors, or empty class_of if the union is
// not an equivalence relation on all of Omega.
bool build_classes(const ColorGraph& x, const std::vector<char>& in_set, Parabolic* out) {
    const int n = x.n();
    // reflexivity: every reflexive color present
    for (int a = 0; a < n; ++a)
        if (!in_set[x.color(a, a)]) return false;
    // symmetry
    for (ColorId s = 0; s < x.rank(); ++s)
        if (in_set[s] && !in_set[x.converse(s)]) return false;
    // connected components of the relation, then transitivity check
    std::vector<int> cls(n, -1);
    std::vector<std::vector<int>> classes;
    for (int a = 0; a < n; ++a) {
        if (cls[a] >= 0) continue;
        int id = static_cast<int>(classes.size());
        classes.emplace_back();
        std::queue<int> q;
        q.push(a);
        cls[a] = id;
        while (!q.empty()) {
            int b = q.front();
            q.pop();
            classes[id].push_back(b);
            for (int c = 0; c < n; ++c)
                if (in_set[x.color(b, c)] && cls[c] < 0) {
                    cls[c] = id;
                    q.push(c);
                }
        }
        std::sort(classes[id].begin(), classes[id].end());
    }
    // transitive <=> the relation restricted to each component is complete
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            bool related = in_set[x.color(a, b)];
            if (related != (cls[a] == cls[b])) return false;
        }
    out->colors.clear();
    for (ColorId s = 0; s < x.rank(); ++s)
        if (in_set[s]) out->colors.push_back(s);
    out->classes = std::move(classes);
    out->class_of = std::move(cls);
    return true;
}

std::vector<char> color_mask(const ColorGraph& x, const std::vector<ColorId>& colors) {
    std::vector<char> mask(x.rank(), 0);
    for (ColorId s : colors) mask[s] = 1;
    return mask;
}

} // namespace

Parabolic parabolic_closure(const ColorGraph& x, const IntersectionTensor& t,
                            std::vector<ColorId> seed) {
    std::vector<char> in_set(x.rank(), 0);
    for (int a = 0; a < x.n(); ++a) in_set[x.color(a, a)] = 1;
    for (ColorId s : seed) {
        in_set[s] = 1;
        in_set[x.converse(s)] = 1;
    }
    // close under composition-containment: if r,s inside and c_{r,s}^u > 0,
    // then u joins (and its converse)
    bool grew = true;
    while (grew) {
        grew = false;
        for (ColorId u = 0; u < x.rank(); ++u) {
            if (in_set[u]) continue;
            for (const auto& [key, c] : t.by_result[u]) {
                if (in_set[key.first] && in_set[key.second]) {
                    in_set[u] = 1;
                    in_set[x.converse(u)] = 1;
                    grew = true;
                    break;
                }
            }
        }
    }
    Parabolic e;
    if (!build_classes(x, in_set, &e))
        throw validation_error("parabolic closure produced a non-equivalence (input not coherent?)");
    return e;
}

std::vector<Parabolic> parabolics(const ColorGraph& x, const IntersectionTensor& t,
                                  bool allow_partial) {
    const bool partial = x.rank() > limits::max_rank_parabolics();
    if (partial && !allow_partial)
        throw bound_error("rank " + std::to_string(x.rank()) +
                          " exceeds the parabolic enumeration bound; generate parabolics from "
                          "chosen colors instead");

    // single-color generated parabolics, then closure under pairwise join
    std::set<std::vector<ColorId>> seen;
    std::vector<Parabolic> result;
    auto push = [&](Parabolic e) {
        if (seen.insert(e.colors).second) result.push_back(std::move(e));
    };
    push(parabolic_closure(x, t, {}));
    for (ColorId s = 0; s < x.rank(); ++s) push(parabolic_closure(x, t, {s}));
    if (!partial) {
        for (size_t i = 0; i < result.size(); ++i)
            for (size_t j = 0; j < i; ++j) {
                std::vector<ColorId> joined = result[i].colors;
                joined.insert(joined.end(), result[j].colors.begin(), result[j].colors.end());
                push(parabolic_closure(x, t, joined));
            }
    }
    std::sort(result.begin(), result.end(), [](const Parabolic& a, const Parabolic& b) {
        return a.colors.size() != b.colors.size() ? a.colors.size() < b.colors.size()
                                                  : a.colors < b.colors;
    });
    return result;
}

QuotientMap quotient(const ColorGraph& x, const Parabolic& e) {
    // verify e is a parabolic of x
    Parabolic check;
    if (e.class_of.size() != static_cast<size_t>(x.n()) ||
        !build_classes(x, color_mask(x, e.colors), &check) || check.class_of != e.class_of)
        throw validation_error("quotient: e is not a parabolic of x");

    const int nc = e.num_classes();
    // merge colors whose images on class pairs intersect
    std::vector<int> merge(x.rank());
    std::iota(merge.begin(), merge.end(), 0);
    std::vector<int> owner(static_cast<size_t>(nc) * nc, -1);
    auto find = [&](int s) {
        while (merge[s] != s) s = merge[s] = merge[merge[s]];
        return s;
    };
    for (int a = 0; a < x.n(); ++a)
        for (int b = 0; b < x.n(); ++b) {
            size_t cell = static_cast<size_t>(e.class_of[a]) * nc + e.class_of[b];
            int s = find(x.color(a, b));
            if (owner[cell] < 0)
                owner[cell] = s;
            else {
                int o = find(owner[cell]);
                if (o != s) merge[std::max(o, s)] = std::min(o, s);
            }
        }
    std::vector<int> qcolors(static_cast<size_t>(nc) * nc);
    for (size_t cell = 0; cell < qcolors.size(); ++cell) qcolors[cell] = find(owner[cell]);

    QuotientMap qm;
    qm.pi = e.class_of;
    qm.quotient = ColorGraph::from_matrix(nc, qcolors);
    ValidationReport rep = validate(qm.quotient);
    if (!rep.ok()) throw validation_error("quotient is not coherent: " + rep.detail);
    return qm;
}

ColorGraph restriction(const ColorGraph& x, const std::vector<int>& delta) {
    if (!x.rainbow_ok()) throw validation_error("restriction: input violates (C1)/(C2)");
    if (delta.empty()) throw validation_error("restriction: delta is empty");
    std::vector<char> in_delta(x.n(), 0);
    for (int a : delta) in_delta[a] = 1;
    bool fiber_union = true;
    for (const auto& fiber : x.fibers()) {
        bool any = false, all = true;
        for (int a : fiber) {
            if (in_delta[a])
                any = true;
            else
                all = false;
        }
        if (any && !all) fiber_union = false;
    }
    std::vector<int> pts = delta;
    std::sort(pts.begin(), pts.end());
    const int m = static_cast<int>(pts.size());
    std::vector<int> sub(static_cast<size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) sub[static_cast<size_t>(i) * m + j] = x.color(pts[i], pts[j]);
    ColorGraph result = ColorGraph::from_matrix(m, sub);
    if (!fiber_union) {
        // delta is a parabolic class iff it is a class of the parabolic
        // generated by the colors meeting delta x delta
        std::vector<ColorId> seed;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) seed.push_back(x.color(pts[i], pts[j]));
        std::sort(seed.begin(), seed.end());
        seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
        Parabolic e = parabolic_closure(x, tensor(x), seed);
        bool is_class = false;
        for (const auto& cls : e.classes) is_class = is_class || cls == pts;
        if (!is_class)
            throw validation_error("restriction: delta is not a homogeneity set or parabolic class");
    }
    return result;
}

std::optional<Parabolic> find_complement(const ColorGraph& x, const Parabolic& e,
                                         const std::vector<int>& delta) {
    std::vector<char> in_delta(x.n(), 0);
    for (int a : delta) in_delta[a] = 1;
    // preconditions: uniform class size on delta, singletons outside
    size_t uniform = 0;
    for (const auto& cls : e.classes) {
        bool inside = in_delta[cls[0]];
        for (int a : cls)
            if (in_delta[a] != inside)
                throw validation_error("find_complement: a class of e straddles delta");
        if (!inside && cls.size() != 1)
            throw validation_error("find_complement: e is not trivial outside delta");
        if (inside) {
            if (uniform == 0)
                uniform = cls.size();
            else if (uniform != cls.size())
                throw validation_error("find_complement: classes of e on delta are not uniform");
        }
    }

    ColorGraph xd = restriction(x, delta);
    std::vector<int> pts = delta;
    std::sort(pts.begin(), pts.end());
    // classes of e_delta in restricted numbering
    std::vector<int> e_class(pts.size());
    std::map<int, int> class_remap;
    for (size_t i = 0; i < pts.size(); ++i) {
        int c = e.class_of[pts[i]];
        auto [it, inserted] = class_remap.emplace(c, static_cast<int>(class_remap.size()));
        e_class[i] = it->second;
    }
    const int num_e_classes = static_cast<int>(class_remap.size());

    IntersectionTensor td = tensor(xd);
    for (const Parabolic& cand : parabolics(xd, td, /*allow_partial=*/true)) {
        if (cand.num_classes() != 2) continue;
        bool ok = true;
        for (const auto& cls : cand.classes) {
            std::vector<int> hits(num_e_classes, 0);
            for (int a : cls) ++hits[e_class[a]];
            for (int h : hits)
                if (h != 1) ok = false;
        }
        if (ok) return cand;
    }
    return std::nullopt;
}

namespace {

bool is_algebraic_automorphism(const ColorGraph& x, const IntersectionTensor& t,
                               const std::vector<int>& sigma, std::string* why) {
    if (sigma.size() != static_cast<size_t>(x.rank())) {
        *why = "color image array has wrong length";
        return false;
    }
    std::vector<char> hit(x.rank(), 0);
    for (int img : sigma) {
        if (img < 0 || img >= x.rank() || hit[img]) {
            *why = "color image array is not a bijection";
            return false;
        }
        hit[img] = 1;
    }
    for (ColorId s = 0; s < x.rank(); ++s) {
        if (x.is_reflexive(s) != x.is_reflexive(sigma[s])) {
            *why = "diagonal color set not preserved by image of " + std::to_string(s);
            return false;
        }
        if (sigma[x.converse(s)] != x.converse(sigma[s])) {
            *why = "converse map not preserved at color " + std::to_string(s);
            return false;
        }
    }
    for (ColorId u = 0; u < x.rank(); ++u)
        for (const auto& [key, c] : t.by_result[u]) {
            if (t.c(sigma[key.first], sigma[key.second], sigma[u]) != c) {
                *why = "intersection number c_{" + std::to_string(key.first) + "," +
                       std::to_string(key.second) + "}^" + std::to_string(u) +
                       " not preserved";
                return false;
            }
        }
    return true;
}

} // namespace

ColorGraph algebraic_fusion(const ColorGraph& x, const std::vector<std::vector<int>>& phi_group) {
    IntersectionTensor t = tensor(x);
    for (const auto& sigma : phi_group) {
        std::string why;
        if (!is_algebraic_automorphism(x, t, sigma, &why))
            throw validation_error("algebraic_fusion: " + why);
    }
    // orbits of the generated group on colors
    std::vector<int> orbit(x.rank());
    std::iota(orbit.begin(), orbit.end(), 0);
    bool changed = true;
    auto find = [&](int s) {
        while (orbit[s] != s) s = orbit[s] = orbit[orbit[s]];
        return s;
    };
    while (changed) {
        changed = false;
        for (const auto& sigma : phi_group)
            for (ColorId s = 0; s < x.rank(); ++s) {
                int a = find(s), b = find(sigma[s]);
                if (a != b) {
                    orbit[std::max(a, b)] = std::min(a, b);
                    changed = true;
                }
            }
    }
    std::vector<int> fused(x.matrix().size());
    for (size_t i = 0; i < fused.size(); ++i) fused[i] = find(x.matrix()[i]);
    ColorGraph result = ColorGraph::from_matrix(x.n(), fused);
    ValidationReport rep = validate(result);
    if (!rep.ok()) throw validation_error("algebraic fusion is not coherent: " + rep.detail);
    return result;
}

} // namespace cc
