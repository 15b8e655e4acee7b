#include "cc/color_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace cc {

namespace {

// Canonical renumbering: first appearance in a row-major scan.
std::vector<int> renumber(const std::vector<int>& colors, int* out_rank) {
    std::map<int, int> remap;
    std::vector<int> result(colors.size());
    for (size_t i = 0; i < colors.size(); ++i) {
        auto [it, inserted] = remap.emplace(colors[i], static_cast<int>(remap.size()));
        result[i] = it->second;
    }
    *out_rank = static_cast<int>(remap.size());
    return result;
}

} // namespace

ColorGraph ColorGraph::from_matrix(int n, const std::vector<int>& colors) {
    if (n < 0 || colors.size() != static_cast<size_t>(n) * n)
        throw validation_error("color matrix size does not match n");
    ColorGraph x;
    x.n_ = n;
    x.color_ = renumber(colors, &x.rank_);

    const int r = x.rank_;
    x.converse_.assign(r, -1);
    x.reflexive_.assign(r, 0);
    x.color_size_.assign(r, 0);
    x.valency_.assign(r, 0);
    x.rep_.assign(r, {-1, -1});
    x.fiber_of_point_.assign(n, -1);
    x.color_fiber_.assign(r, {-1, -1});

    std::vector<char> off_diag(r, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            ColorId s = x.color(a, b);
            ++x.color_size_[s];
            if (x.rep_[s].first < 0) x.rep_[s] = {a, b};
            if (a == b)
                x.reflexive_[s] = 1;
            else
                off_diag[s] = 1;
        }

    // (C1): no color on both the diagonal and off it.
    bool c1 = true;
    for (ColorId s = 0; s < r; ++s)
        if (x.reflexive_[s] && off_diag[s]) c1 = false;

    // (C2): color(b,a) must be a function of color(a,b).
    bool c2 = true;
    for (int a = 0; a < n && c2; ++a)
        for (int b = 0; b < n; ++b) {
            ColorId s = x.color(a, b), t = x.color(b, a);
            if (x.converse_[s] < 0)
                x.converse_[s] = t;
            else if (x.converse_[s] != t) {
                c2 = false;
                break;
            }
        }
    if (c2) {
        for (ColorId s = 0; s < r; ++s)
            if (x.converse_[x.converse_[s]] != s) c2 = false;
    }

    x.rainbow_ok_ = c1 && c2;
    if (!x.rainbow_ok_) return x;

    // fibers from reflexive colors
    std::map<ColorId, int> fiber_index;
    for (int a = 0; a < n; ++a) {
        ColorId s = x.color(a, a);
        auto [it, inserted] = fiber_index.emplace(s, static_cast<int>(fiber_index.size()));
        if (inserted) x.fibers_.emplace_back();
        x.fiber_of_point_[a] = it->second;
        x.fibers_[it->second].push_back(a);
    }
    for (ColorId s = 0; s < r; ++s) {
        auto [a, b] = x.rep_[s];
        x.color_fiber_[s] = {x.fiber_of_point_[a], x.fiber_of_point_[b]};
    }
    // out-degree at the first source point (constant over the fiber iff (C3))
    for (ColorId s = 0; s < r; ++s) {
        int a = x.rep_[s].first;
        long long deg = 0;
        for (int b = 0; b < n; ++b)
            if (x.color(a, b) == s) ++deg;
        x.valency_[s] = deg;
    }
    return x;
}

ValidationReport validate(const ColorGraph& x) {
    ValidationReport rep;
    const int n = x.n();

    // recompute (C1)/(C2) with witnesses
    std::vector<char> on_diag(x.rank(), 0), off_diag(x.rank(), 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            (a == b ? on_diag : off_diag)[x.color(a, b)] = 1;
    rep.c1 = true;
    for (ColorId s = 0; s < x.rank(); ++s)
        if (on_diag[s] && off_diag[s]) {
            rep.c1 = false;
            rep.detail = "(C1) violated: color " + std::to_string(s) +
                         " meets both the diagonal and its complement";
            return rep;
        }

    rep.c2 = true;
    std::vector<int> conv(x.rank(), -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            ColorId s = x.color(a, b), t = x.color(b, a);
            if (conv[s] < 0)
                conv[s] = t;
            else if (conv[s] != t) {
                rep.c2 = false;
                rep.detail = "(C2) violated: color " + std::to_string(s) + " has converse colors " +
                             std::to_string(conv[s]) + " and " + std::to_string(t) + " at pair (" +
                             std::to_string(a) + "," + std::to_string(b) + ")";
                return rep;
            }
        }

    // (C3): the multiset {(color(a,g), color(g,b)) : g} must agree for every
    // pair of a color with its representative pair.
    rep.c3 = true;
    std::vector<std::vector<int>> ref_sig(x.rank());
    auto signature = [&](int a, int b) {
        std::vector<int> sig(n);
        for (int g = 0; g < n; ++g) sig[g] = x.color(a, g) * x.rank() + x.color(g, b);
        std::sort(sig.begin(), sig.end());
        return sig;
    };
    for (ColorId s = 0; s < x.rank(); ++s) {
        auto [a, b] = x.representative(s);
        ref_sig[s] = signature(a, b);
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            ColorId t = x.color(a, b);
            std::vector<int> sig = signature(a, b);
            if (sig != ref_sig[t]) {
                // name one differing (r,s) for the report
                for (size_t k = 0; k < sig.size(); ++k)
                    if (sig[k] != ref_sig[t][k]) {
                        int code = sig[k];
                        rep.c3 = false;
                        rep.detail = "(C3) violated for t=" + std::to_string(t) + ": c_{" +
                                     std::to_string(code / x.rank()) + "," +
                                     std::to_string(code % x.rank()) + "}^t differs between (" +
                                     std::to_string(x.representative(t).first) + "," +
                                     std::to_string(x.representative(t).second) + ") and (" +
                                     std::to_string(a) + "," + std::to_string(b) + ")";
                        return rep;
                    }
            }
        }
    return rep;
}

int IntersectionTensor::c(ColorId r, ColorId s, ColorId t) const {
    const auto& row = by_result[t];
    auto key = std::make_pair(r, s);
    auto it = std::lower_bound(row.begin(), row.end(), key,
                               [](const auto& e, const auto& k) { return e.first < k; });
    if (it != row.end() && it->first == key) return it->second;
    return 0;
}

IntersectionTensor tensor(const ColorGraph& x, bool verify_all_pairs) {
    if (!x.rainbow_ok()) throw validation_error("tensor: input violates (C1)/(C2)");
    const int n = x.n();
    IntersectionTensor T;
    T.rank = x.rank();
    T.by_result.resize(x.rank());
    T.valency.assign(x.rank(), 0);

    auto counts_at = [&](int a, int b) {
        std::map<std::pair<ColorId, ColorId>, int> counts;
        for (int g = 0; g < n; ++g) ++counts[{x.color(a, g), x.color(g, b)}];
        return counts;
    };

    for (ColorId t = 0; t < x.rank(); ++t) {
        auto [a, b] = x.representative(t);
        auto counts = counts_at(a, b);
        T.by_result[t].assign(counts.begin(), counts.end());
    }
    for (ColorId s = 0; s < x.rank(); ++s) T.valency[s] = x.valency(s);

    if (verify_all_pairs) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                ColorId t = x.color(a, b);
                auto counts = counts_at(a, b);
                std::vector<std::pair<std::pair<ColorId, ColorId>, int>> row(counts.begin(),
                                                                             counts.end());
                if (row != T.by_result[t]) {
                    std::string msg = "(C3) violated at color t=" + std::to_string(t);
                    for (const auto& [key, c] : row)
                        if (T.c(key.first, key.second, t) != c) {
                            msg += ": c_{" + std::to_string(key.first) + "," +
                                   std::to_string(key.second) + "}^" + std::to_string(t) + " = " +
                                   std::to_string(T.c(key.first, key.second, t)) + " vs " +
                                   std::to_string(c);
                            break;
                        }
                    throw validation_error(msg);
                }
            }
    }
    return T;
}

bool same_partition(const ColorGraph& x, const ColorGraph& y) {
    if (x.n() != y.n() || x.rank() != y.rank()) return false;
    std::vector<int> xy(x.rank(), -1), yx(y.rank(), -1);
    for (size_t i = 0; i < x.matrix().size(); ++i) {
        int a = x.matrix()[i], b = y.matrix()[i];
        if (xy[a] < 0) xy[a] = b;
        if (yx[b] < 0) yx[b] = a;
        if (xy[a] != b || yx[b] != a) return false;
    }
    return true;
}

bool is_thin_color(const ColorGraph& x, ColorId s) {
    return x.valency(s) == 1 && x.valency(x.converse(s)) == 1;
}

bool is_semiregular(const ColorGraph& x) {
    for (ColorId s = 0; s < x.rank(); ++s)
        if (!is_thin_color(x, s)) return false;
    return true;
}

bool is_quasi_thin(const ColorGraph& x) {
    for (ColorId s = 0; s < x.rank(); ++s)
        if (x.valency(s) > 2) return false;
    return true;
}

} // namespace cc
