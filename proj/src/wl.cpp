#include "cc/wl.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <unordered_map>

namespace cc {

namespace {

uint64_t mix(uint64_t h, uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 33;
    return h;
}

} // namespace

std::vector<int> wl_preprocess(int n, const std::vector<int>& init) {
    // recolor by (diagonal flag, c(a,b), c(b,a)); canonical by sorted order
    std::map<std::tuple<int, int, int>, int> ids;
    std::vector<std::tuple<int, int, int>> keys(init.size());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            size_t i = static_cast<size_t>(a) * n + b;
            keys[i] = {a == b ? 0 : 1, init[i], init[static_cast<size_t>(b) * n + a]};
            ids.emplace(keys[i], 0);
        }
    int next = 0;
    for (auto& [key, id] : ids) id = next++;
    std::vector<int> out(init.size());
    for (size_t i = 0; i < init.size(); ++i) out[i] = ids.at(keys[i]);
    return out;
}

WlResult wl_stabilize(int n, std::vector<int> init) {
    WlResult result;
    result.matrix = std::move(init);
    const size_t nn = static_cast<size_t>(n) * n;

    // normalize ids to 0..rank-1 preserving order of values (keeps
    // relabeling-invariance of the input labels)
    {
        std::map<int, int> remap;
        for (int c : result.matrix) remap.emplace(c, 0);
        int next = 0;
        for (auto& [v, id] : remap) id = next++;
        for (int& c : result.matrix) c = remap.at(c);
        result.rank = next;
    }

    std::vector<int> sig(n);
    auto signature_of = [&](int a, int b, const std::vector<int>& m, int rank) {
        for (int g = 0; g < n; ++g)
            sig[g] = m[static_cast<size_t>(a) * n + g] * rank + m[static_cast<size_t>(g) * n + b];
        std::sort(sig.begin(), sig.end());
        return &sig;
    };

    for (;;) {
        ++result.rounds;
        const int rank = result.rank;
        const std::vector<int>& m = result.matrix;

        std::vector<uint64_t> hash(nn);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                size_t i = static_cast<size_t>(a) * n + b;
                const std::vector<int>& s = *signature_of(a, b, m, rank);
                uint64_t h = mix(0x6a09e667f3bcc909ULL, static_cast<uint64_t>(m[i]));
                for (int v : s) h = mix(h, static_cast<uint64_t>(v));
                hash[i] = h;
            }

        // group pairs by hash, split buckets by the full signature
        struct Group {
            int old_color;
            std::vector<int> rep_sig;
            std::vector<size_t> members;
        };
        std::unordered_map<uint64_t, std::vector<int>> bucket_groups;
        std::vector<Group> groups;
        bucket_groups.reserve(nn * 2);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                size_t i = static_cast<size_t>(a) * n + b;
                const std::vector<int>& s = *signature_of(a, b, m, rank);
                std::vector<int>& cands = bucket_groups[hash[i]];
                int found = -1;
                for (int gi : cands)
                    if (groups[gi].old_color == m[i] && groups[gi].rep_sig == s) {
                        found = gi;
                        break;
                    }
                if (found < 0) {
                    found = static_cast<int>(groups.size());
                    groups.push_back({m[i], s, {}});
                    cands.push_back(found);
                }
                groups[found].members.push_back(i);
            }

        if (static_cast<int>(groups.size()) == rank) break; // stable

        // canonical ids in sorted-signature order
        std::vector<int> order(groups.size());
        for (size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (groups[a].old_color != groups[b].old_color)
                return groups[a].old_color < groups[b].old_color;
            return groups[a].rep_sig < groups[b].rep_sig;
        });
        std::vector<int> next(nn);
        for (size_t k = 0; k < order.size(); ++k)
            for (size_t i : groups[order[k]].members) next[i] = static_cast<int>(k);
        result.matrix = std::move(next);
        result.rank = static_cast<int>(groups.size());
    }
    return result;
}

ColorGraph wl_close(int n, const std::vector<int>& init) {
    if (n < 1) throw validation_error("wl_close: need n >= 1");
    if (init.size() != static_cast<size_t>(n) * n)
        throw validation_error("wl_close: matrix size does not match n");
    WlResult r = wl_stabilize(n, wl_preprocess(n, init));
    return ColorGraph::from_matrix(n, r.matrix);
}

ColorGraph wl_close_graph(const SimpleGraph& g) {
    const int n = g.n();
    std::vector<int> init(static_cast<size_t>(n) * n, 2);
    for (int a = 0; a < n; ++a) init[static_cast<size_t>(a) * n + a] = 0;
    for (auto [u, v] : g.edges()) {
        init[static_cast<size_t>(u) * n + v] = 1;
        init[static_cast<size_t>(v) * n + u] = 1;
    }
    return wl_close(n, init);
}

ColorGraph wl_close_rainbow(const ColorGraph& rainbow) {
    if (!rainbow.rainbow_ok())
        throw validation_error("wl_close_rainbow: input violates the rainbow axioms (C1)/(C2)");
    WlResult r = wl_stabilize(rainbow.n(), rainbow.matrix());
    return ColorGraph::from_matrix(rainbow.n(), r.matrix);
}

} // namespace cc
