#include "cc/candidates.hpp"

#include <algorithm>
#include <map>

#include "cc/planar.hpp"
#include "cc/wl.hpp"

namespace cc {

namespace {

long long planar_edge_bound(long long k) {
    if (k <= 1) return 0;
    if (k == 2) return 1;
    return 3 * k - 6;
}

} // namespace

CandidateSet enumerate_candidates(const ColorGraph& base, const EnumOptions& opt) {
    if (!base.rainbow_ok()) throw validation_error("enumerate: base violates (C1)/(C2)");
    CandidateSet cs;
    cs.base = base;

    for (ColorId s = 0; s < base.rank(); ++s) {
        if (base.is_reflexive(s)) continue;
        ColorId c = base.converse(s);
        if (c < s) continue; // the unit was created at the converse
        SymmetricUnit u;
        u.colors = c == s ? std::vector<ColorId>{s} : std::vector<ColorId>{s, c};
        auto [fa, fb] = base.color_fibers(s);
        u.fiber_a = std::min(fa, fb);
        u.fiber_b = std::max(fa, fb);
        long long pairs = base.color_size(s) + (c == s ? 0 : base.color_size(c));
        // within a fiber the symmetric relation double-counts undirected edges;
        // across fibers each edge appears once in delta x gamma and once in
        // gamma x delta
        u.edge_count = pairs / 2;
        cs.units.push_back(std::move(u));
    }
    std::sort(cs.units.begin(), cs.units.end(), [](const SymmetricUnit& a, const SymmetricUnit& b) {
        if (a.fiber_a != b.fiber_a) return a.fiber_a < b.fiber_a;
        if (a.fiber_b != b.fiber_b) return a.fiber_b < b.fiber_b;
        return a.colors < b.colors;
    });
    if (cs.units.size() > 63) throw bound_error("enumerate: more than 63 symmetric units");

    const int nu = static_cast<int>(cs.units.size());
    cs.counts.raw = (1LL << nu) - (opt.include_empty ? 0 : 1);

    std::map<std::pair<int, int>, long long> pair_bound;
    for (const SymmetricUnit& u : cs.units) {
        auto key = std::make_pair(u.fiber_a, u.fiber_b);
        if (pair_bound.count(key)) continue;
        long long a = static_cast<long long>(base.fibers()[u.fiber_a].size());
        long long b = static_cast<long long>(base.fibers()[u.fiber_b].size());
        long long limit = 1LL << 60;
        if (opt.strict_per_fiber)
            limit = planar_edge_bound(std::min(a, b));
        else if (u.fiber_a == u.fiber_b && a >= opt.within_fiber_min)
            limit = planar_edge_bound(a);
        pair_bound[key] = limit;
    }
    const long long global_bound = planar_edge_bound(base.n());

    // depth-first over units with running totals
    std::vector<std::pair<int, int>> pair_keys;
    std::map<std::pair<int, int>, int> pair_index;
    for (const auto& [key, bound] : pair_bound) {
        pair_index[key] = static_cast<int>(pair_keys.size());
        pair_keys.push_back(key);
    }
    std::vector<long long> pair_total(pair_keys.size(), 0);
    long long total = 0;
    uint64_t mask = 0;
    long long nodes = 0;

    std::vector<int> unit_pair(nu);
    for (int i = 0; i < nu; ++i)
        unit_pair[i] = pair_index.at({cs.units[i].fiber_a, cs.units[i].fiber_b});

    auto rec = [&](auto&& self, int i) -> void {
        if (++nodes > limits::max_search_nodes())
            throw bound_error("enumerate: search exceeded the node bound; decompose per fiber");
        if (i == nu) {
            if (mask != 0 || opt.include_empty) cs.candidates.push_back(mask);
            return;
        }
        self(self, i + 1); // unit excluded
        long long e = cs.units[i].edge_count;
        int pk = unit_pair[i];
        if (total + e <= global_bound && pair_total[pk] + e <= pair_bound.at(pair_keys[pk])) {
            total += e;
            pair_total[pk] += e;
            mask |= 1ULL << i;
            self(self, i + 1);
            mask &= ~(1ULL << i);
            total -= e;
            pair_total[pk] -= e;
        }
    };
    rec(rec, 0);
    std::sort(cs.candidates.begin(), cs.candidates.end());
    cs.counts.edge_bounded = static_cast<long long>(cs.candidates.size());
    return cs;
}

void phi_reduce(CandidateSet& cs, const std::vector<std::vector<int>>& phi_elements) {
    const int nu = static_cast<int>(cs.units.size());
    // unit image under a color permutation
    std::map<std::vector<ColorId>, int> unit_of_colors;
    for (int i = 0; i < nu; ++i) unit_of_colors[cs.units[i].colors] = i;
    auto unit_image = [&](const std::vector<int>& sigma, int i) {
        std::vector<ColorId> img;
        for (ColorId s : cs.units[i].colors) img.push_back(sigma[s]);
        std::sort(img.begin(), img.end());
        auto it = unit_of_colors.find(img);
        if (it == unit_of_colors.end())
            throw validation_error("phi_reduce: color map does not permute the symmetric units");
        return it->second;
    };

    std::vector<std::vector<int>> unit_maps;
    for (const auto& sigma : phi_elements) {
        std::vector<int> um(nu);
        for (int i = 0; i < nu; ++i) um[i] = unit_image(sigma, i);
        unit_maps.push_back(std::move(um));
    }

    std::vector<uint64_t> kept;
    for (uint64_t mask : cs.candidates) {
        uint64_t least = mask;
        for (const auto& um : unit_maps) {
            uint64_t img = 0;
            for (int i = 0; i < nu; ++i)
                if (mask >> i & 1) img |= 1ULL << um[i];
            least = std::min(least, img);
        }
        if (least == mask) kept.push_back(mask);
    }
    cs.candidates = std::move(kept);
    cs.counts.phi_reduced = static_cast<long long>(cs.candidates.size());
}

SimpleGraph candidate_graph(const CandidateSet& cs, uint64_t mask) {
    const ColorGraph& base = cs.base;
    std::vector<char> in_e(base.rank(), 0);
    for (int i = 0; i < static_cast<int>(cs.units.size()); ++i)
        if (mask >> i & 1)
            for (ColorId s : cs.units[i].colors) in_e[s] = 1;
    SimpleGraph g(base.n());
    for (int a = 0; a < base.n(); ++a)
        for (int b = a + 1; b < base.n(); ++b)
            if (in_e[base.color(a, b)]) g.add_edge(a, b);
    return g;
}

void wl_filter(CandidateSet& cs) {
    std::vector<uint64_t> kept;
    for (uint64_t mask : cs.candidates) {
        ColorGraph closed = wl_close_graph(candidate_graph(cs, mask));
        if (same_partition(closed, cs.base)) kept.push_back(mask);
    }
    cs.candidates = std::move(kept);
    cs.counts.wl_exact = static_cast<long long>(cs.candidates.size());
}

std::vector<PolyhedralWitness> polyhedral_screen(const CandidateSet& cs) {
    std::vector<PolyhedralWitness> out;
    for (uint64_t mask : cs.candidates) {
        SimpleGraph g = candidate_graph(cs, mask);
        if (is_polyhedral(g)) out.push_back({mask, std::move(g)});
    }
    return out;
}

} // namespace cc
