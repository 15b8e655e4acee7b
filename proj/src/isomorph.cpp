#include "cc/isomorph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "cc/wl.hpp"

namespace cc {

namespace {

// Invariant initial labels for the pair coloring of x: colors grouped by a
// relabeling-invariant signature, so two configurations with renamed colors
// get comparable labels. Returns per-color key ids; the sorted key
// vocabulary with multiplicities goes to *vocab for cross-checking.
using ColorKey = std::vector<long long>;

std::vector<int> invariant_color_keys(const ColorGraph& x, std::vector<ColorKey>* vocab) {
    std::vector<ColorKey> keys(x.rank());
    for (ColorId s = 0; s < x.rank(); ++s) {
        auto [fa, fb] = x.color_fibers(s);
        keys[s] = {x.is_reflexive(s) ? 1 : 0,
                   x.is_symmetric(s) ? 1 : 0,
                   x.valency(s),
                   x.valency(x.converse(s)),
                   x.color_size(s),
                   static_cast<long long>(x.fibers()[fa].size()),
                   static_cast<long long>(x.fibers()[fb].size())};
    }
    std::map<ColorKey, int> ids;
    for (const auto& k : keys) ids.emplace(k, 0);
    int next = 0;
    for (auto& [k, id] : ids) id = next++;
    std::vector<int> out(x.rank());
    for (ColorId s = 0; s < x.rank(); ++s) out[s] = ids.at(keys[s]);
    if (vocab) {
        vocab->clear();
        for (ColorId s = 0; s < x.rank(); ++s) vocab->push_back(keys[s]);
        std::sort(vocab->begin(), vocab->end());
    }
    return out;
}

struct Refined {
    int rank = 0;
    std::vector<int> matrix;
    std::vector<long long> histogram;            // count per color id
    std::vector<std::vector<int>> diag_cells;    // by diagonal color id (empty allowed)
    bool discrete = false;
};

Refined refine(const ColorGraph& x, const std::vector<int>& base_init, int fresh_base,
               const std::vector<int>& fixed) {
    const int n = x.n();
    std::vector<int> init = base_init;
    for (size_t k = 0; k < fixed.size(); ++k)
        init[static_cast<size_t>(fixed[k]) * n + fixed[k]] = fresh_base + static_cast<int>(k);
    WlResult r = wl_stabilize(n, wl_preprocess(n, init));
    Refined out;
    out.rank = r.rank;
    out.histogram.assign(r.rank, 0);
    for (int c : r.matrix) ++out.histogram[c];
    out.diag_cells.assign(r.rank, {});
    out.discrete = true;
    for (int v = 0; v < n; ++v) {
        int c = r.matrix[static_cast<size_t>(v) * n + v];
        out.diag_cells[c].push_back(v);
    }
    for (const auto& cell : out.diag_cells)
        if (cell.size() > 1) out.discrete = false;
    out.matrix = std::move(r.matrix);
    return out;
}

// target cell: smallest non-singleton diagonal cell, ties by color id
int pick_target_cell(const Refined& r) {
    int best = -1;
    for (int c = 0; c < r.rank; ++c) {
        const auto& cell = r.diag_cells[c];
        if (cell.size() < 2) continue;
        if (best < 0 || cell.size() < r.diag_cells[best].size()) best = c;
    }
    return best;
}

struct IsoSearch {
    const ColorGraph& x;
    const ColorGraph& y;
    std::vector<int> base_x, base_y;
    int fresh_base;
    bool aut_mode;
    bool find_all;
    std::vector<std::vector<int>> found; // maps x -> y
    long long nodes = 0;

    bool leaf_check(const Refined& rx, const Refined& ry) {
        const int n = x.n();
        std::vector<int> f(n, -1);
        for (int c = 0; c < rx.rank; ++c) {
            if (rx.diag_cells[c].size() != 1) continue;
            f[rx.diag_cells[c][0]] = ry.diag_cells[c][0];
        }
        if (aut_mode) {
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    if (y.color(f[a], f[b]) != x.color(a, b)) return false;
        } else {
            std::vector<int> sigma(x.rank(), -1), used(y.rank(), 0);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    int s = x.color(a, b), t = y.color(f[a], f[b]);
                    if (sigma[s] < 0) {
                        if (used[t]) return false;
                        sigma[s] = t;
                        used[t] = 1;
                    } else if (sigma[s] != t)
                        return false;
                }
        }
        found.push_back(std::move(f));
        return true;
    }

    // orbit pruning data: generators found so far (aut mode)
    std::vector<int> orbit_reps(const std::vector<int>& fixed_y) const {
        const int n = x.n();
        std::vector<int> rep(n);
        std::iota(rep.begin(), rep.end(), 0);
        auto find = [&](int v) {
            while (rep[v] != v) v = rep[v] = rep[rep[v]];
            return v;
        };
        for (const auto& g : found) {
            bool fixes = true;
            for (int w : fixed_y)
                if (g[w] != w) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            for (int v = 0; v < n; ++v) {
                int a = find(v), b = find(g[v]);
                if (a != b) rep[std::max(a, b)] = std::min(a, b);
            }
        }
        std::vector<int> out(n);
        for (int v = 0; v < n; ++v) out[v] = find(v);
        return out;
    }

    // returns true when the search should stop (first hit in find-one mode)
    bool run(std::vector<int> fixed_x, std::vector<int> fixed_y) {
        if (++nodes > limits::max_search_nodes())
            throw bound_error("isomorphism search exceeded the node bound");
        Refined rx = refine(x, base_x, fresh_base, fixed_x);
        Refined ry = refine(y, base_y, fresh_base, fixed_y);
        if (rx.rank != ry.rank || rx.histogram != ry.histogram) return false;
        if (rx.discrete) {
            bool ok = leaf_check(rx, ry);
            return ok && !find_all;
        }
        int cell = pick_target_cell(rx);
        if (cell < 0 || ry.diag_cells[cell].size() != rx.diag_cells[cell].size()) return false;
        int v = rx.diag_cells[cell][0];
        fixed_x.push_back(v);
        std::vector<char> tried(x.n(), 0);
        for (int w : ry.diag_cells[cell]) {
            if (aut_mode) {
                std::vector<int> reps = orbit_reps(fixed_y);
                if (tried[reps[w]]) continue;
                tried[reps[w]] = 1;
            }
            fixed_y.push_back(w);
            bool stop = run(fixed_x, fixed_y);
            fixed_y.pop_back();
            if (stop) return true;
        }
        return false;
    }
};

} // namespace

PermGroup aut_group(const ColorGraph& x) {
    if (!x.rainbow_ok()) throw validation_error("aut_group: input violates (C1)/(C2)");
    if (x.n() > limits::max_n())
        throw bound_error("aut_group: n exceeds the configured bound (set CC_MAX_N to raise)");
    IsoSearch search{x, x, x.matrix(), x.matrix(), x.rank(), /*aut_mode=*/true,
                     /*find_all=*/true, {}, 0};
    search.run({}, {});
    PermGroup g;
    g.degree = x.n();
    g.name = "aut";
    for (auto& f : search.found) {
        Perm p{std::move(f)};
        if (!p.is_identity()) g.generators.push_back(std::move(p));
    }
    return g;
}

bool is_schurian(const ColorGraph& x) {
    ColorGraph orbital = inv(aut_group(x));
    return orbital.rank() == x.rank();
}

std::optional<std::vector<int>> color_isomorphic(const ColorGraph& x, const ColorGraph& y) {
    if (!x.rainbow_ok() || !y.rainbow_ok())
        throw validation_error("color_isomorphic: input violates (C1)/(C2)");
    if (x.n() != y.n() || x.rank() != y.rank()) return std::nullopt;
    if (x.n() > limits::max_n())
        throw bound_error("color_isomorphic: n exceeds the configured bound");
    std::vector<ColorKey> vx, vy;
    std::vector<int> kx = invariant_color_keys(x, &vx);
    std::vector<int> ky = invariant_color_keys(y, &vy);
    if (vx != vy) return std::nullopt;

    const int n = x.n();
    std::vector<int> bx(static_cast<size_t>(n) * n), by(bx.size());
    for (size_t i = 0; i < bx.size(); ++i) {
        bx[i] = kx[x.matrix()[i]];
        by[i] = ky[y.matrix()[i]];
    }
    int fresh = static_cast<int>(std::max(vx.size(), vy.size()));
    IsoSearch search{x, y, std::move(bx), std::move(by), fresh, /*aut_mode=*/false,
                     /*find_all=*/false, {}, 0};
    search.run({}, {});
    if (search.found.empty()) return std::nullopt;
    return search.found.front();
}

std::vector<int> induced_color_map(const ColorGraph& x, const ColorGraph& y,
                                   const std::vector<int>& f) {
    std::vector<int> sigma(x.rank(), -1), used(y.rank(), 0);
    for (int a = 0; a < x.n(); ++a)
        for (int b = 0; b < x.n(); ++b) {
            int s = x.color(a, b), t = y.color(f[a], f[b]);
            if (sigma[s] < 0) {
                if (used[t])
                    throw validation_error("bijection does not induce a color map (not injective)");
                sigma[s] = t;
                used[t] = 1;
            } else if (sigma[s] != t)
                throw validation_error("bijection does not induce a color map (not functional)");
        }
    return sigma;
}

bool is_algebraic_aut(const ColorGraph& x, const IntersectionTensor& t,
                      const std::vector<int>& sigma, std::string* why) {
    std::string local;
    std::string* out = why ? why : &local;
    if (sigma.size() != static_cast<size_t>(x.rank())) {
        *out = "color image array has wrong length";
        return false;
    }
    std::vector<char> hit(x.rank(), 0);
    for (int img : sigma) {
        if (img < 0 || img >= x.rank() || hit[img]) {
            *out = "color image array is not a bijection";
            return false;
        }
        hit[img] = 1;
    }
    for (ColorId s = 0; s < x.rank(); ++s) {
        if (x.is_reflexive(s) != x.is_reflexive(sigma[s])) {
            *out = "diagonal color set not preserved at color " + std::to_string(s);
            return false;
        }
        if (sigma[x.converse(s)] != x.converse(sigma[s])) {
            *out = "converse map not preserved at color " + std::to_string(s);
            return false;
        }
    }
    for (ColorId u = 0; u < x.rank(); ++u)
        for (const auto& [key, c] : t.by_result[u])
            if (t.c(sigma[key.first], sigma[key.second], sigma[u]) != c) {
                *out = "intersection number c_{" + std::to_string(key.first) + "," +
                       std::to_string(key.second) + "}^" + std::to_string(u) + " not preserved";
                return false;
            }
    return true;
}

namespace {

struct AlgAutSearch {
    const ColorGraph& x;
    const IntersectionTensor& t;
    std::vector<int> key_id;       // invariant key class per color
    std::vector<ColorId> order;    // assignment order
    std::vector<int> sigma, used;  // partial map
    std::vector<std::vector<int>> elements;
    long long nodes = 0;

    bool consistent(ColorId s) {
        ColorId b = sigma[s];
        if (key_id[s] != key_id[b]) return false;
        ColorId sc = x.converse(s);
        if (sigma[sc] >= 0 && sigma[sc] != x.converse(b)) return false;
        if (sigma[sc] < 0 && x.converse(b) == b && sc != s) return false;
        // fiber consistency via reflexive colors
        auto [fa, fb] = x.color_fibers(s);
        ColorId ra = x.color(x.fibers()[fa][0], x.fibers()[fa][0]);
        ColorId rb = x.color(x.fibers()[fb][0], x.fibers()[fb][0]);
        auto [ga, gb] = x.color_fibers(b);
        ColorId qa = x.color(x.fibers()[ga][0], x.fibers()[ga][0]);
        ColorId qb = x.color(x.fibers()[gb][0], x.fibers()[gb][0]);
        if (sigma[ra] >= 0 && sigma[ra] != qa) return false;
        if (sigma[rb] >= 0 && sigma[rb] != qb) return false;
        // tensor entries whose colors are all assigned
        for (ColorId u = 0; u < x.rank(); ++u) {
            if (sigma[u] < 0) continue;
            for (const auto& [key, c] : t.by_result[u]) {
                auto [r, s2] = key;
                if (sigma[r] < 0 || sigma[s2] < 0) continue;
                if (r != s && s2 != s && u != s) continue; // unchanged by this assignment
                if (t.c(sigma[r], sigma[s2], sigma[u]) != c) return false;
            }
        }
        return true;
    }

    void run(size_t depth) {
        if (++nodes > limits::max_search_nodes())
            throw bound_error("algebraic automorphism search exceeded the node bound");
        if (depth == order.size()) {
            elements.push_back(sigma);
            return;
        }
        ColorId s = order[depth];
        if (sigma[s] >= 0) { // forced earlier by a converse assignment
            run(depth + 1);
            return;
        }
        for (ColorId b = 0; b < x.rank(); ++b) {
            if (used[b] || key_id[s] != key_id[b]) continue;
            ColorId sc = x.converse(s), bc = x.converse(b);
            bool pair = sc != s && sigma[sc] < 0;
            if (pair && (used[bc] || bc == b)) continue;
            sigma[s] = b;
            used[b] = 1;
            if (pair) {
                sigma[sc] = bc;
                used[bc] = 1;
            }
            if (consistent(s) && (!pair || consistent(sc))) run(depth + 1);
            sigma[s] = -1;
            used[b] = 0;
            if (pair) {
                sigma[sc] = -1;
                used[bc] = 0;
            }
        }
    }
};

} // namespace

std::vector<std::vector<int>> algebraic_aut_group(const ColorGraph& x) {
    if (!x.rainbow_ok()) throw validation_error("algebraic_aut_group: input violates (C1)/(C2)");
    if (x.rank() > limits::max_rank_algebraic())
        throw bound_error("algebraic_aut_group: rank exceeds the configured bound");
    IntersectionTensor t = tensor(x);

    // invariant keys: structural flags plus the sorted tensor row of each color
    std::vector<ColorKey> keys(x.rank());
    for (ColorId s = 0; s < x.rank(); ++s) {
        auto [fa, fb] = x.color_fibers(s);
        ColorKey k = {x.is_reflexive(s) ? 1 : 0,
                      x.is_symmetric(s) ? 1 : 0,
                      x.valency(s),
                      x.valency(x.converse(s)),
                      x.color_size(s),
                      static_cast<long long>(x.fibers()[fa].size()),
                      static_cast<long long>(x.fibers()[fb].size()),
                      -1};
        std::vector<long long> row;
        for (const auto& [key, c] : t.by_result[s]) row.push_back(c);
        std::sort(row.begin(), row.end());
        k.insert(k.end(), row.begin(), row.end());
        keys[s] = std::move(k);
    }
    std::map<ColorKey, int> ids;
    for (const auto& k : keys) ids.emplace(k, 0);
    int next = 0;
    for (auto& [k, id] : ids) id = next++;

    AlgAutSearch search{x, t, {}, {}, {}, {}, {}, 0};
    search.key_id.resize(x.rank());
    for (ColorId s = 0; s < x.rank(); ++s) search.key_id[s] = ids.at(keys[s]);
    search.sigma.assign(x.rank(), -1);
    search.used.assign(x.rank(), 0);
    // most constrained first: small key classes, reflexive colors first
    std::vector<long long> class_size(next, 0);
    for (ColorId s = 0; s < x.rank(); ++s) ++class_size[search.key_id[s]];
    search.order.resize(x.rank());
    std::iota(search.order.begin(), search.order.end(), 0);
    std::sort(search.order.begin(), search.order.end(), [&](ColorId a, ColorId b) {
        bool ra = x.is_reflexive(a), rb = x.is_reflexive(b);
        if (ra != rb) return ra;
        if (class_size[search.key_id[a]] != class_size[search.key_id[b]])
            return class_size[search.key_id[a]] < class_size[search.key_id[b]];
        return a < b;
    });
    search.run(0);
    std::sort(search.elements.begin(), search.elements.end());
    return search.elements;
}

} // namespace cc
