#include "cc/perm.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

namespace cc {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
        if (v < 0 || v >= degree() || seen[v])
            throw validation_error("permutation image array is not a bijection");
        seen[v] = 1;
    }
}

Perm Perm::identity(int degree) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    return Perm(std::move(img));
}

Perm Perm::operator*(const Perm& rhs) const {
    std::vector<int> img(img_.size());
    for (int a = 0; a < degree(); ++a) img[a] = rhs.img_[img_[a]];
    return Perm(std::move(img));
}

Perm Perm::inverse() const {
    std::vector<int> img(img_.size());
    for (int a = 0; a < degree(); ++a) img[img_[a]] = a;
    return Perm(std::move(img));
}

bool Perm::is_identity() const {
    for (int a = 0; a < degree(); ++a)
        if (img_[a] != a) return false;
    return true;
}

Perm evaluate_word(const PermGroup& g, const Word& w) {
    Perm result = Perm::identity(g.degree);
    for (int token : w) {
        int idx = token >= 0 ? token : -token - 1;
        if (idx >= static_cast<int>(g.generators.size()))
            throw validation_error("word references generator " + std::to_string(idx) +
                                   " of a group with " + std::to_string(g.generators.size()) +
                                   " generators");
        result = token >= 0 ? result * g.generators[idx] : result * g.generators[idx].inverse();
    }
    return result;
}

OrbitDecomposition orbits(const PermGroup& g) {
    OrbitDecomposition d;
    d.orbit_id.assign(g.degree, -1);
    for (int a = 0; a < g.degree; ++a) {
        if (d.orbit_id[a] >= 0) continue;
        int id = static_cast<int>(d.orbits.size());
        std::vector<int> orbit;
        std::queue<int> q;
        q.push(a);
        d.orbit_id[a] = id;
        while (!q.empty()) {
            int b = q.front();
            q.pop();
            orbit.push_back(b);
            for (const Perm& p : g.generators) {
                int c = p[b];
                if (d.orbit_id[c] < 0) {
                    d.orbit_id[c] = id;
                    q.push(c);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        d.orbits.push_back(std::move(orbit));
    }
    return d;
}

ColorGraph inv(const PermGroup& g) {
    if (g.degree < 1) throw validation_error("inv: degree must be >= 1");
    const int n = g.degree;
    std::vector<int> color(static_cast<size_t>(n) * n, -1);
    int next = 0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            size_t start = static_cast<size_t>(a) * n + b;
            if (color[start] >= 0) continue;
            int id = next++;
            std::queue<size_t> q;
            q.push(start);
            color[start] = id;
            while (!q.empty()) {
                size_t cur = q.front();
                q.pop();
                int u = static_cast<int>(cur) / n, v = static_cast<int>(cur) % n;
                for (const Perm& p : g.generators) {
                    size_t nxt = static_cast<size_t>(p[u]) * n + p[v];
                    if (color[nxt] < 0) {
                        color[nxt] = id;
                        q.push(nxt);
                    }
                }
            }
        }
    return ColorGraph::from_matrix(n, color);
}

std::vector<Perm> elements(const PermGroup& g) {
    const long long bound = limits::max_group_order();
    std::map<Perm, int> seen;
    std::vector<Perm> elems{Perm::identity(g.degree)};
    seen.emplace(elems[0], 0);
    for (size_t head = 0; head < elems.size(); ++head) {
        Perm cur = elems[head];
        for (const Perm& p : g.generators) {
            Perm next = cur * p;
            if (seen.emplace(next, 0).second) {
                elems.push_back(std::move(next));
                if (static_cast<long long>(elems.size()) > bound)
                    throw bound_error("group order exceeds configured bound");
            }
        }
    }
    std::sort(elems.begin(), elems.end());
    return elems;
}

long long group_order(const PermGroup& g) { return static_cast<long long>(elements(g).size()); }

namespace {

// Right cosets Hx of the subgroup with the given element set, each coset
// keyed by its lexicographically least member. The identity coset's key is
// the identity itself (the global lexicographic minimum), so sorting puts
// the base coset at index 0.
std::vector<Perm> coset_keys(const std::vector<Perm>& group_elems,
                             const std::vector<Perm>& sub_elems) {
    std::vector<Perm> keys;
    std::map<Perm, char> assigned;
    for (const Perm& x : group_elems) {
        if (assigned.count(x)) continue;
        Perm least = x;
        std::vector<Perm> coset;
        for (const Perm& h : sub_elems) {
            Perm hx = h * x;
            coset.push_back(hx);
            if (hx < least) least = hx;
        }
        for (Perm& e : coset) assigned.emplace(std::move(e), 1);
        keys.push_back(least);
    }
    std::sort(keys.begin(), keys.end());
    return keys;
}

} // namespace

PermGroup coset_action(const PermGroup& g, const std::vector<Word>& subgroup_words) {
    PermGroup sub;
    sub.degree = g.degree;
    for (const Word& w : subgroup_words) sub.generators.push_back(evaluate_word(g, w));

    std::vector<Perm> ge = elements(g);
    std::vector<Perm> he = elements(sub);
    std::vector<Perm> keys = coset_keys(ge, he);

    // membership test: coset of x has key = min over h of h*x
    auto key_of = [&](const Perm& x) {
        Perm least = x;
        for (const Perm& h : he) {
            Perm hx = h * x;
            if (hx < least) least = hx;
        }
        return least;
    };
    std::map<Perm, int> index;
    for (int i = 0; i < static_cast<int>(keys.size()); ++i) index.emplace(keys[i], i);

    PermGroup result;
    result.degree = static_cast<int>(keys.size());
    result.name = g.name.empty() ? "" : g.name + "/H";
    for (const Perm& gen : g.generators) {
        std::vector<int> img(keys.size());
        for (int i = 0; i < static_cast<int>(keys.size()); ++i) {
            img[i] = index.at(key_of(keys[i] * gen));
        }
        result.generators.emplace_back(std::move(img));
    }
    return result;
}

PermGroup orbit_sum_action(const PermGroup& g, const std::vector<std::vector<Word>>& subgroups) {
    std::vector<PermGroup> parts;
    parts.reserve(subgroups.size());
    int total = 0;
    for (const auto& words : subgroups) {
        parts.push_back(coset_action(g, words));
        total += parts.back().degree;
    }
    PermGroup result;
    result.degree = total;
    result.name = g.name;
    for (size_t k = 0; k < g.generators.size(); ++k) {
        std::vector<int> img(total);
        int off = 0;
        for (const PermGroup& part : parts) {
            for (int a = 0; a < part.degree; ++a) img[off + a] = off + part.generators[k][a];
            off += part.degree;
        }
        result.generators.emplace_back(std::move(img));
    }
    return result;
}

PermGroup regular_representation(const PermGroup& g) {
    std::vector<Perm> ge = elements(g);
    std::map<Perm, int> index;
    for (int i = 0; i < static_cast<int>(ge.size()); ++i) index.emplace(ge[i], i);
    PermGroup result;
    result.degree = static_cast<int>(ge.size());
    result.name = g.name.empty() ? "" : g.name + "/regular";
    for (const Perm& gen : g.generators) {
        std::vector<int> img(ge.size());
        for (int i = 0; i < static_cast<int>(ge.size()); ++i) img[i] = index.at(ge[i] * gen);
        result.generators.emplace_back(std::move(img));
    }
    return result;
}

namespace {

void require_orbit(const PermGroup& g, const std::vector<int>& pts, const char* role) {
    OrbitDecomposition d = orbits(g);
    if (pts.empty()) throw validation_error(std::string(role) + " is empty");
    std::vector<int> sorted = pts;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != d.orbits[d.orbit_id[pts[0]]])
        throw validation_error(std::string(role) + " is not an orbit of the group");
}

} // namespace

bool dominates(const PermGroup& g, const std::vector<int>& gamma, const std::vector<int>& delta) {
    require_orbit(g, gamma, "gamma");
    require_orbit(g, delta, "delta");
    // orbits of g on gamma x delta by BFS; check for a functional one
    std::vector<int> pos_in_gamma(g.degree, -1), pos_in_delta(g.degree, -1);
    for (int i = 0; i < static_cast<int>(gamma.size()); ++i) pos_in_gamma[gamma[i]] = i;
    for (int i = 0; i < static_cast<int>(delta.size()); ++i) pos_in_delta[delta[i]] = i;
    const int nd = static_cast<int>(delta.size());
    std::vector<int> orbit_of(gamma.size() * delta.size(), -1);
    int next_id = 0;
    for (size_t start = 0; start < orbit_of.size(); ++start) {
        if (orbit_of[start] >= 0) continue;
        int id = next_id++;
        std::vector<size_t> members;
        std::queue<size_t> q;
        q.push(start);
        orbit_of[start] = id;
        while (!q.empty()) {
            size_t cur = q.front();
            q.pop();
            members.push_back(cur);
            int a = gamma[cur / nd], b = delta[cur % nd];
            for (const Perm& p : g.generators) {
                size_t nxt = static_cast<size_t>(pos_in_gamma[p[a]]) * nd + pos_in_delta[p[b]];
                if (orbit_of[nxt] < 0) {
                    orbit_of[nxt] = id;
                    q.push(nxt);
                }
            }
        }
        // functional from gamma: every point of gamma appears exactly once
        if (members.size() == gamma.size()) {
            std::vector<char> hit(gamma.size(), 0);
            bool functional = true;
            for (size_t m : members) {
                if (hit[m / nd]) {
                    functional = false;
                    break;
                }
                hit[m / nd] = 1;
            }
            if (functional) return true;
        }
    }
    return false;
}

bool mutually_dominating(const PermGroup& g, const std::vector<int>& delta,
                         const std::vector<int>& gamma) {
    return dominates(g, delta, gamma) && dominates(g, gamma, delta);
}

bool is_domination_free(const PermGroup& g) {
    OrbitDecomposition d = orbits(g);
    for (size_t i = 0; i < d.orbits.size(); ++i)
        for (size_t j = 0; j < d.orbits.size(); ++j)
            if (i != j && dominates(g, d.orbits[i], d.orbits[j])) return false;
    return true;
}

} // namespace cc
