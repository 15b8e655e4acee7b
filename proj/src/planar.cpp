#include "cc/planar.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>

namespace cc {

namespace {

// ---- Left-right planarity test (decision only) ----

struct LrTest {
    int n, m;
    std::vector<std::vector<std::pair<int, int>>> incidence; // vertex -> (other, edge id)
    std::vector<int> src, dst;     // orientation after DFS1
    std::vector<char> visited_edge;
    std::vector<int> height, parent_edge;
    std::vector<int> lowpt, lowpt2, nesting;
    std::vector<int> lowpt_edge, ref_, side_;
    std::vector<size_t> stack_bottom;

    struct Interval {
        int low = -1, high = -1;
        bool empty() const { return low < 0 && high < 0; }
    };
    struct CPair {
        Interval l, r;
    };
    std::vector<CPair> stack;
    bool planar = true;

    explicit LrTest(const SimpleGraph& g) : n(g.n()), m(g.m()) {
        incidence.resize(n);
        src.resize(m);
        dst.resize(m);
        for (int e = 0; e < m; ++e) {
            auto [u, v] = g.edges()[e];
            incidence[u].emplace_back(v, e);
            incidence[v].emplace_back(u, e);
        }
        visited_edge.assign(m, 0);
        height.assign(n, -1);
        parent_edge.assign(n, -1);
        lowpt.assign(m, 0);
        lowpt2.assign(m, 0);
        nesting.assign(m, 0);
        lowpt_edge.assign(m, -1);
        ref_.assign(m, -1);
        side_.assign(m, 1);
        stack_bottom.assign(m, 0);
    }

    void dfs1(int v) {
        int e = parent_edge[v];
        for (auto [w, ei] : incidence[v]) {
            if (visited_edge[ei]) continue;
            visited_edge[ei] = 1;
            src[ei] = v;
            dst[ei] = w;
            lowpt[ei] = height[v];
            lowpt2[ei] = height[v];
            if (height[w] < 0) {
                parent_edge[w] = ei;
                height[w] = height[v] + 1;
                dfs1(w);
            } else {
                lowpt[ei] = height[w];
            }
            nesting[ei] = 2 * lowpt[ei];
            if (lowpt2[ei] < height[v]) ++nesting[ei];
            if (e >= 0) {
                if (lowpt[ei] < lowpt[e]) {
                    lowpt2[e] = std::min(lowpt[e], lowpt2[ei]);
                    lowpt[e] = lowpt[ei];
                } else if (lowpt[ei] > lowpt[e]) {
                    lowpt2[e] = std::min(lowpt2[e], lowpt[ei]);
                } else {
                    lowpt2[e] = std::min(lowpt2[e], lowpt2[ei]);
                }
            }
        }
    }

    bool conflicting(const Interval& i, int b) const {
        return !i.empty() && lowpt[i.high] > lowpt[b];
    }
    int lowest(const CPair& p) const {
        if (p.l.empty()) return lowpt[p.r.low];
        if (p.r.empty()) return lowpt[p.l.low];
        return std::min(lowpt[p.l.low], lowpt[p.r.low]);
    }

    bool add_constraints(int ei, int e) {
        CPair p;
        // merge return edges of ei into p.r
        do {
            CPair q = stack.back();
            stack.pop_back();
            if (!q.l.empty()) std::swap(q.l, q.r);
            if (!q.l.empty()) return false;
            if (lowpt[q.r.low] > lowpt[e]) {
                if (p.r.empty())
                    p.r.high = q.r.high;
                else
                    ref_[p.r.low] = q.r.high;
                p.r.low = q.r.low;
            } else {
                ref_[q.r.low] = lowpt_edge[e];
            }
        } while (stack.size() > stack_bottom[ei]);
        // merge conflicting return edges of earlier siblings into p.l
        while (!stack.empty() &&
               (conflicting(stack.back().l, ei) || conflicting(stack.back().r, ei))) {
            CPair q = stack.back();
            stack.pop_back();
            if (conflicting(q.r, ei)) std::swap(q.l, q.r);
            if (conflicting(q.r, ei)) return false;
            ref_[p.r.low] = q.r.high;
            if (q.r.low >= 0) p.r.low = q.r.low;
            if (p.l.empty())
                p.l.high = q.l.high;
            else
                ref_[p.l.low] = q.l.high;
            p.l.low = q.l.low;
        }
        if (!p.l.empty() || !p.r.empty()) stack.push_back(p);
        return true;
    }

    void trim_back_edges(int u) {
        while (!stack.empty() && lowest(stack.back()) == height[u]) {
            CPair p = stack.back();
            stack.pop_back();
            if (p.l.low >= 0) side_[p.l.low] = -1;
        }
        if (!stack.empty()) {
            CPair p = stack.back();
            stack.pop_back();
            while (p.l.high >= 0 && dst[p.l.high] == u) p.l.high = ref_[p.l.high];
            if (p.l.high < 0 && p.l.low >= 0) {
                ref_[p.l.low] = p.r.low;
                side_[p.l.low] = -1;
                p.l.low = -1;
            }
            while (p.r.high >= 0 && dst[p.r.high] == u) p.r.high = ref_[p.r.high];
            if (p.r.high < 0 && p.r.low >= 0) {
                ref_[p.r.low] = p.l.low;
                side_[p.r.low] = -1;
                p.r.low = -1;
            }
            stack.push_back(p);
        }
    }

    bool dfs2(int v) {
        int e = parent_edge[v];
        bool first = true;
        for (int ei : ordered_out[v]) {
            stack_bottom[ei] = stack.size();
            int w = dst[ei];
            if (parent_edge[w] == ei) {
                if (!dfs2(w)) return false;
            } else {
                lowpt_edge[ei] = ei;
                stack.push_back(CPair{{}, {ei, ei}});
            }
            if (lowpt[ei] < height[v]) {
                if (first && e >= 0) {
                    lowpt_edge[e] = lowpt_edge[ei];
                } else if (!first) {
                    if (!add_constraints(ei, e)) return false;
                }
            }
            first = false;
        }
        if (e >= 0) {
            int u = src[e];
            trim_back_edges(u);
            if (lowpt[e] < height[u] && !stack.empty()) {
                int hl = stack.back().l.high, hr = stack.back().r.high;
                if (hl >= 0 && (hr < 0 || lowpt[hl] > lowpt[hr]))
                    ref_[e] = hl;
                else
                    ref_[e] = hr;
            }
        }
        return true;
    }

    std::vector<std::vector<int>> ordered_out;

    bool run() {
        for (int v = 0; v < n; ++v)
            if (height[v] < 0) {
                height[v] = 0;
                dfs1(v);
            }
        ordered_out.assign(n, {});
        std::vector<int> order(m);
        for (int e = 0; e < m; ++e) order[e] = e;
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return nesting[a] < nesting[b]; });
        for (int e : order) ordered_out[src[e]].push_back(e);
        for (int v = 0; v < n; ++v)
            if (parent_edge[v] < 0 && height[v] == 0) {
                stack.clear();
                if (!dfs2(v)) return false;
            }
        return true;
    }
};

} // namespace

bool is_planar(const SimpleGraph& g) {
    if (g.n() >= 3 && g.m() > 3 * g.n() - 6) return false;
    if (g.m() <= 2) return true;
    LrTest test(g);
    return test.run();
}

// ---- Biconnected blocks ----

namespace {

struct BlockFinder {
    const SimpleGraph& g;
    std::vector<int> num, low;
    int counter = 0;
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<std::vector<std::pair<int, int>>> blocks; // edge lists

    explicit BlockFinder(const SimpleGraph& graph) : g(graph), num(graph.n(), -1), low(graph.n()) {}

    void dfs(int v, int parent) {
        num[v] = low[v] = counter++;
        for (int w : g.neighbors(v)) {
            if (num[w] < 0) {
                edge_stack.emplace_back(v, w);
                dfs(w, v);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= num[v]) {
                    blocks.emplace_back();
                    for (;;) {
                        auto e = edge_stack.back();
                        edge_stack.pop_back();
                        blocks.back().push_back(e);
                        if (e == std::make_pair(v, w)) break;
                    }
                }
            } else if (num[w] < num[v] && w != parent) {
                edge_stack.emplace_back(v, w);
                low[v] = std::min(low[v], num[w]);
            }
        }
    }

    std::vector<std::vector<std::pair<int, int>>> run() {
        for (int v = 0; v < g.n(); ++v)
            if (num[v] < 0) dfs(v, -1);
        return blocks;
    }
};

// ---- Demoucron-style embedder for one 2-connected block ----

// Faces are simple vertex cycles. Returns false if some fragment has no
// admissible face (the block is nonplanar).
bool embed_block(const std::vector<std::pair<int, int>>& block_edges, BlockEmbedding* out) {
    std::set<int> vset;
    for (auto [u, v] : block_edges) {
        vset.insert(u);
        vset.insert(v);
    }
    std::vector<int> verts(vset.begin(), vset.end());
    out->vertices = verts;
    out->edge_count = static_cast<int>(block_edges.size());

    if (block_edges.size() == 1) { // bridge block
        out->faces = {{block_edges[0].first, block_edges[0].second}};
        return true;
    }

    std::map<int, std::vector<int>> adj;
    for (auto [u, v] : block_edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }

    // initial cycle by walking back a DFS tree from a back edge
    std::map<int, int> parent;
    std::vector<int> cyc;
    {
        std::vector<int> stack_{verts[0]};
        parent[verts[0]] = -1;
        std::map<int, char> seen{{verts[0], 1}};
        int back_u = -1, back_v = -1;
        std::function<bool(int)> dfs = [&](int v) {
            for (int w : adj[v]) {
                if (!seen.count(w)) {
                    seen[w] = 1;
                    parent[w] = v;
                    if (dfs(w)) return true;
                } else if (w != parent[v]) {
                    back_u = v;
                    back_v = w;
                    return true;
                }
            }
            return false;
        };
        dfs(verts[0]);
        if (back_u < 0) return false; // no cycle in a 2-connected block: impossible
        for (int v = back_u; v != back_v; v = parent[v]) cyc.push_back(v);
        cyc.push_back(back_v);
    }

    std::set<std::pair<int, int>> in_h; // embedded edges, ordered pairs (min,max)
    std::set<int> h_verts;
    auto add_h_edge = [&](int u, int v) { in_h.emplace(std::min(u, v), std::max(u, v)); };
    for (size_t i = 0; i < cyc.size(); ++i) {
        add_h_edge(cyc[i], cyc[(i + 1) % cyc.size()]);
        h_verts.insert(cyc[i]);
    }
    std::vector<std::vector<int>> faces = {cyc, {cyc.rbegin(), cyc.rend()}};

    auto has_edge = [&](int u, int v) {
        return in_h.count({std::min(u, v), std::max(u, v)}) != 0;
    };

    while (in_h.size() < block_edges.size()) {
        // fragments: single unembedded edges between h-vertices, and
        // components of G - V(H) with their attachment edges
        struct Fragment {
            std::set<int> attachments;
            std::vector<int> inner; // component vertices (empty for chords)
            std::pair<int, int> chord{-1, -1};
        };
        std::vector<Fragment> fragments;
        for (auto [u, v] : block_edges)
            if (!has_edge(u, v) && h_verts.count(u) && h_verts.count(v)) {
                Fragment f;
                f.attachments = {u, v};
                f.chord = {u, v};
                fragments.push_back(std::move(f));
            }
        std::set<int> unseen;
        for (int v : verts)
            if (!h_verts.count(v)) unseen.insert(v);
        while (!unseen.empty()) {
            int start = *unseen.begin();
            Fragment f;
            std::queue<int> q;
            q.push(start);
            unseen.erase(start);
            while (!q.empty()) {
                int v = q.front();
                q.pop();
                f.inner.push_back(v);
                for (int w : adj[v]) {
                    if (h_verts.count(w))
                        f.attachments.insert(w);
                    else if (unseen.count(w)) {
                        unseen.erase(w);
                        q.push(w);
                    }
                }
            }
            fragments.push_back(std::move(f));
        }
        if (fragments.empty()) break;

        // admissible faces per fragment
        auto admissible = [&](const Fragment& f) {
            std::vector<int> result;
            for (size_t fi = 0; fi < faces.size(); ++fi) {
                std::set<int> fv(faces[fi].begin(), faces[fi].end());
                bool all = true;
                for (int a : f.attachments)
                    if (!fv.count(a)) {
                        all = false;
                        break;
                    }
                if (all) result.push_back(static_cast<int>(fi));
            }
            return result;
        };

        int pick = -1, pick_face = -1;
        for (size_t i = 0; i < fragments.size(); ++i) {
            std::vector<int> adm = admissible(fragments[i]);
            if (adm.empty()) return false; // nonplanar
            if (adm.size() == 1 && pick < 0) {
                pick = static_cast<int>(i);
                pick_face = adm[0];
            }
        }
        if (pick < 0) {
            pick = 0;
            pick_face = admissible(fragments[0])[0];
        }

        // a path through the fragment between two attachments
        const Fragment& f = fragments[pick];
        std::vector<int> path;
        if (f.inner.empty()) {
            path = {f.chord.first, f.chord.second};
        } else {
            int a = *f.attachments.begin();
            std::set<int> inner(f.inner.begin(), f.inner.end());
            std::map<int, int> prev;
            std::queue<int> q;
            // start BFS from a through inner vertices to another attachment
            prev[a] = -1;
            for (int w : adj[a])
                if (inner.count(w) && !prev.count(w)) {
                    prev[w] = a;
                    q.push(w);
                }
            int end = -1;
            while (!q.empty() && end < 0) {
                int v = q.front();
                q.pop();
                for (int w : adj[v]) {
                    if (prev.count(w)) continue;
                    if (h_verts.count(w)) {
                        if (f.attachments.count(w) && w != a) {
                            prev[w] = v;
                            end = w;
                            break;
                        }
                        continue;
                    }
                    if (inner.count(w)) {
                        prev[w] = v;
                        q.push(w);
                    }
                }
            }
            if (end < 0) return false; // should not happen in a 2-connected block
            for (int v = end; v >= 0; v = prev[v]) path.push_back(v);
            std::reverse(path.begin(), path.end());
        }

        // split the face by the path
        std::vector<int> face = faces[pick_face];
        int a = path.front(), b = path.back();
        int ia = -1, ib = -1;
        for (size_t i = 0; i < face.size(); ++i) {
            if (face[i] == a) ia = static_cast<int>(i);
            if (face[i] == b) ib = static_cast<int>(i);
        }
        std::vector<int> f1, f2;
        // walk a -> b along the face, then path back b -> a (exclusive ends)
        for (int i = ia; i != ib; i = (i + 1) % static_cast<int>(face.size())) f1.push_back(face[i]);
        f1.push_back(b);
        for (size_t k = path.size() - 1; k + 1 >= 2; --k) f1.push_back(path[k - 1]);
        f1.pop_back(); // removed duplicated a at the end
        // walk b -> a along the face, then path a -> b
        for (int i = ib; i != ia; i = (i + 1) % static_cast<int>(face.size())) f2.push_back(face[i]);
        f2.push_back(a);
        for (size_t k = 1; k + 1 < path.size(); ++k) f2.push_back(path[k]);
        faces[pick_face] = f1;
        faces.push_back(f2);

        for (size_t k = 0; k + 1 < path.size(); ++k) add_h_edge(path[k], path[k + 1]);
        for (int v : path) h_verts.insert(v);
    }
    out->faces = std::move(faces);
    return true;
}

} // namespace

std::optional<std::vector<BlockEmbedding>> planar_embedding(const SimpleGraph& g) {
    std::vector<BlockEmbedding> result;
    BlockFinder finder(g);
    for (const auto& block : finder.run()) {
        BlockEmbedding emb;
        if (!embed_block(block, &emb)) return std::nullopt;
        result.push_back(std::move(emb));
    }
    return result;
}

bool embedding_satisfies_euler(const SimpleGraph& g, const std::vector<BlockEmbedding>& emb) {
    long long total_edges = 0;
    for (const BlockEmbedding& b : emb) {
        total_edges += b.edge_count;
        if (b.edge_count == 1) continue; // bridge: single face walk, trivially planar
        long long n = static_cast<long long>(b.vertices.size());
        long long m = b.edge_count;
        if (static_cast<long long>(b.faces.size()) != m - n + 2) return false;
        // every edge must border exactly two faces
        std::map<std::pair<int, int>, int> sides;
        for (const auto& face : b.faces)
            for (size_t i = 0; i < face.size(); ++i) {
                int u = face[i], v = face[(i + 1) % face.size()];
                ++sides[{std::min(u, v), std::max(u, v)}];
            }
        if (static_cast<long long>(sides.size()) != m) return false;
        for (const auto& [e, c] : sides)
            if (c != 2) return false;
    }
    return total_edges == g.m();
}

std::optional<KuratowskiWitness> kuratowski_witness(const SimpleGraph& g) {
    if (is_planar(g)) return std::nullopt;
    std::vector<std::pair<int, int>> edges = g.edges();
    // deletion-minimal nonplanar subgraph
    bool removed = true;
    while (removed) {
        removed = false;
        for (size_t i = 0; i < edges.size(); ++i) {
            std::vector<std::pair<int, int>> rest;
            rest.reserve(edges.size() - 1);
            for (size_t j = 0; j < edges.size(); ++j)
                if (j != i) rest.push_back(edges[j]);
            if (!is_planar(SimpleGraph::from_edges(g.n(), rest))) {
                edges = std::move(rest);
                removed = true;
                break;
            }
        }
    }
    // classify by contracting degree-2 paths
    std::vector<std::vector<int>> adj(g.n());
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<int> branch;
    for (int v = 0; v < g.n(); ++v)
        if (adj[v].size() >= 3) branch.push_back(v);
    KuratowskiWitness w;
    w.edges = edges;
    if (branch.size() == 5)
        w.kind = KuratowskiWitness::Kind::k5;
    else if (branch.size() == 6)
        w.kind = KuratowskiWitness::Kind::k33;
    else
        throw error("kuratowski_witness: minimal graph has unexpected branch count " +
                    std::to_string(branch.size()));
    return w;
}

namespace {

// unit-capacity vertex-split max flow from s to t (vertex-disjoint paths)
int vertex_flow(const SimpleGraph& g, int s, int t) {
    const int n = g.n();
    const int big = n + 1;
    // node 2v = v_in, 2v+1 = v_out
    std::map<std::pair<int, int>, int> cap;
    std::vector<std::vector<int>> out(2 * n);
    auto add_arc = [&](int a, int b, int c) {
        if (!cap.count({a, b})) {
            out[a].push_back(b);
            out[b].push_back(a);
            cap[{a, b}] = 0;
            cap[{b, a}] = 0;
        }
        cap[{a, b}] += c;
    };
    for (int v = 0; v < n; ++v) add_arc(2 * v, 2 * v + 1, 1);
    for (auto [u, v] : g.edges()) {
        add_arc(2 * u + 1, 2 * v, big);
        add_arc(2 * v + 1, 2 * u, big);
    }
    int source = 2 * s + 1, sink = 2 * t;
    int flow = 0;
    for (;;) {
        std::vector<int> prev(2 * n, -1);
        std::queue<int> q;
        q.push(source);
        prev[source] = source;
        while (!q.empty() && prev[sink] < 0) {
            int v = q.front();
            q.pop();
            for (int w : out[v])
                if (prev[w] < 0 && cap[{v, w}] > 0) {
                    prev[w] = v;
                    q.push(w);
                }
        }
        if (prev[sink] < 0) break;
        for (int v = sink; v != source; v = prev[v]) {
            cap[{prev[v], v}] -= 1;
            cap[{v, prev[v]}] += 1;
        }
        ++flow;
    }
    return flow;
}

} // namespace

int vertex_connectivity(const SimpleGraph& g) {
    const int n = g.n();
    if (n < 2) throw validation_error("vertex_connectivity: need n >= 2");
    bool complete = true;
    for (int v = 0; v < n && complete; ++v)
        if (g.degree(v) != n - 1) complete = false;
    if (complete) return n - 1;

    int best = n - 1;
    for (int v = 0; v < n; ++v) best = std::min(best, g.degree(v));
    // a minimum cut of size k misses one of the first k+1 vertices
    for (int i = 0; i <= best && i < n; ++i) {
        for (int u = 0; u < n; ++u) {
            if (u == i || g.adjacent(i, u)) continue;
            best = std::min(best, vertex_flow(g, i, u));
        }
    }
    return best;
}

bool is_polyhedral(const SimpleGraph& g) {
    if (g.n() < 4) return false;
    return is_planar(g) && vertex_connectivity(g) >= 3;
}

} // namespace cc
