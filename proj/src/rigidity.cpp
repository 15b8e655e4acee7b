#include "cc/rigidity.hpp"

#include <algorithm>

namespace cc {

RigidityContext::RigidityContext(const ColorGraph& x, const IntersectionTensor& t,
                                 const SphericalRep& rep)
    : x_(&x), rep_(&rep) {
    const int rank = x.rank();
    nw_ = static_cast<int>(rep.W.size());
    words_ = (rank + 63) / 64;

    antipodal_color_.assign(rank, 0);
    for (ColorId s : rep.antipodal.colors) antipodal_color_[s] = 1;

    // union-extended tensor over Gram classes: c_{s(u),s(v)}^t
    cw_.assign(static_cast<size_t>(nw_) * nw_ * rank, 0);
    for (ColorId u = 0; u < rank; ++u)
        for (const auto& [key, c] : t.by_result[u]) {
            int wu = rep.w_of_color[key.first], wv = rep.w_of_color[key.second];
            cw_[(static_cast<size_t>(wu) * nw_ + wv) * rank + u] += c;
        }

    // c_{s(u),s(v)}^t <= 2 must hold for non-antipodal t before any closure runs
    for (int u = 0; u < nw_; ++u)
        for (int v = 0; v < nw_; ++v)
            for (ColorId s = 0; s < rank; ++s)
                if (!antipodal_color_[s] && cw_[(static_cast<size_t>(u) * nw_ + v) * rank + s] > 2)
                    throw validation_error(
                        "rigidity: c_{s(u),s(v)}^t > 2 for a non-antipodal color; "
                        "the representation is inconsistent");

    geq1_.assign(static_cast<size_t>(nw_) * nw_ * words_, 0);
    eq2_.assign(static_cast<size_t>(nw_) * nw_ * words_, 0);
    for (int u = 0; u < nw_; ++u)
        for (int v = 0; v < nw_; ++v) {
            size_t base = (static_cast<size_t>(u) * nw_ + v) * words_;
            for (ColorId s = 0; s < rank; ++s) {
                long long c = cw_[(static_cast<size_t>(u) * nw_ + v) * rank + s];
                if (c >= 1) geq1_[base + s / 64] |= 1ULL << (s % 64);
                if (c == 2) eq2_[base + s / 64] |= 1ULL << (s % 64);
            }
        }
}

long long RigidityContext::c_w(int u, int v, ColorId t) const {
    return cw_[(static_cast<size_t>(u) * nw_ + v) * x_->rank() + t];
}

namespace {

// bitset of S(Delta;alpha,beta) for the current member set. Candidates are
// the colors indistinguishable from r(alpha,beta) through Delta and the
// rainbow, so they share its Gram class; in particular they are
// non-antipodal whenever the pair is.
std::vector<uint64_t> s_delta_bits(const RigidityContext& ctx, const std::vector<char>& in_delta,
                                   int alpha, int beta) {
    const ColorGraph& x = ctx.x();
    const int words = ctx.words();
    std::vector<uint64_t> bits(words, 0);
    int rank = x.rank();
    int w_ab = ctx.rep().w_of_pair(alpha, beta, x);
    for (ColorId s = 0; s < rank; ++s)
        if (ctx.rep().w_of_color[s] == w_ab) bits[s / 64] |= 1ULL << (s % 64);
    bool two_element = true;
    for (int d = 0; d < x.n(); ++d) {
        if (!in_delta[d] || d == alpha || d == beta) continue;
        two_element = false;
        int u = ctx.rep().w_of_pair(alpha, d, x);
        int v = ctx.rep().w_of_pair(d, beta, x);
        const uint64_t* g = ctx.geq1(u, v);
        for (int w = 0; w < words; ++w) bits[w] &= g[w];
    }
    if (two_element) {
        std::fill(bits.begin(), bits.end(), 0);
        ColorId s = x.color(alpha, beta);
        bits[s / 64] |= 1ULL << (s % 64);
    }
    return bits;
}

} // namespace

std::vector<ColorId> s_delta(const RigidityContext& ctx, const std::vector<int>& delta,
                             int alpha, int beta) {
    if (alpha == beta) throw validation_error("s_delta: alpha and beta must differ");
    std::vector<char> in_delta(ctx.x().n(), 0);
    bool has_a = false, has_b = false;
    for (int d : delta) {
        in_delta[d] = 1;
        has_a |= d == alpha;
        has_b |= d == beta;
    }
    if (!has_a || !has_b) throw validation_error("s_delta: alpha, beta must lie in delta");
    std::vector<uint64_t> bits = s_delta_bits(ctx, in_delta, alpha, beta);
    std::vector<ColorId> out;
    for (ColorId s = 0; s < ctx.x().rank(); ++s)
        if (bits[s / 64] >> (s % 64) & 1) out.push_back(s);
    return out;
}

namespace {

struct ClosureState {
    const RigidityContext& ctx;
    std::vector<char> in_delta;
    std::vector<int> members;                  // ascending insertion not required; scan order uses ids
    // per ordered non-antipodal pair (alpha,beta): S(Delta;alpha,beta) bits
    // pairs keyed alpha*n+beta
    std::vector<std::vector<uint64_t>> pair_bits;
    std::vector<std::pair<int, int>> pairs;

    explicit ClosureState(const RigidityContext& c, const std::vector<int>& seed)
        : ctx(c), in_delta(c.x().n(), 0) {
        for (int v : seed)
            if (!in_delta[v]) {
                in_delta[v] = 1;
                members.push_back(v);
            }
        std::sort(members.begin(), members.end());
        for (int a : members)
            for (int b : members)
                if (a != b && !ctx.antipodal_pair(a, b)) add_pair(a, b);
    }

    void add_pair(int a, int b) {
        pairs.emplace_back(a, b);
        pair_bits.push_back(s_delta_bits(ctx, in_delta, a, b));
    }

    // does some pair certify gamma?  (every t in S(Delta;a,b) has c = 2)
    std::optional<ClosureStep> addable(int gamma) const {
        const ColorGraph& x = ctx.x();
        const int words = ctx.words();
        for (size_t k = 0; k < pairs.size(); ++k) {
            auto [a, b] = pairs[k];
            int u = ctx.rep().w_of_pair(a, gamma, x);
            int v = ctx.rep().w_of_pair(b, gamma, x);
            const uint64_t* e2 = ctx.eq2(u, v);
            bool ok = true;
            for (int w = 0; w < words && ok; ++w)
                if (pair_bits[k][w] & ~e2[w]) ok = false;
            if (ok) return ClosureStep{gamma, a, b, u, v};
        }
        return std::nullopt;
    }

    void add_point(int gamma) {
        const ColorGraph& x = ctx.x();
        const int words = ctx.words();
        // existing pairs: intersect with the new member's composition sets
        for (size_t k = 0; k < pairs.size(); ++k) {
            auto [a, b] = pairs[k];
            if (gamma == a || gamma == b) continue;
            int u = ctx.rep().w_of_pair(a, gamma, x);
            int v = ctx.rep().w_of_pair(gamma, b, x);
            const uint64_t* g = ctx.geq1(u, v);
            // a two-element pair set was the singleton {r(a,b)}; growing the
            // set switches to the composition-intersection definition
            if (members.size() == 2) pair_bits[k] = s_delta_bits_with(gamma, a, b);
            else
                for (int w = 0; w < words; ++w) pair_bits[k][w] &= g[w];
        }
        in_delta[gamma] = 1;
        std::vector<int> olds = members;
        members.push_back(gamma);
        std::sort(members.begin(), members.end());
        for (int a : olds) {
            if (!ctx.antipodal_pair(a, gamma)) {
                add_pair(a, gamma);
                add_pair(gamma, a);
            }
        }
    }

    std::vector<uint64_t> s_delta_bits_with(int gamma, int a, int b) const {
        std::vector<char> tmp = in_delta;
        tmp[gamma] = 1;
        return s_delta_bits(ctx, tmp, a, b);
    }
};

} // namespace

RigidityCertificate rho_closure(const RigidityContext& ctx, const std::vector<int>& seed) {
    if (seed.size() < 2) throw validation_error("rho_closure: need |seed| >= 2");
    const int n = ctx.x().n();
    ClosureState state(ctx, seed);

    RigidityCertificate cert;
    cert.seed = {seed[0], seed[1]};
    cert.seed_color = ctx.x().color(seed[0], seed[1]);

    bool grew = true;
    while (grew && static_cast<int>(state.members.size()) < n) {
        grew = false;
        for (int gamma = 0; gamma < n; ++gamma) {
            if (state.in_delta[gamma]) continue;
            if (auto step = state.addable(gamma)) {
                state.add_point(gamma);
                cert.trace.push_back(*step);
                grew = true;
                break; // smallest gamma first, then rescan
            }
        }
    }
    cert.final_size = static_cast<int>(state.members.size());
    cert.rigid = cert.final_size == n;
    return cert;
}

RigidityScan find_rigid_color(const RigidityContext& ctx) {
    RigidityScan scan;
    const ColorGraph& x = ctx.x();
    for (ColorId s = 0; s < x.rank(); ++s) {
        if (x.is_reflexive(s)) continue;
        if (std::find(ctx.rep().antipodal.colors.begin(), ctx.rep().antipodal.colors.end(), s) !=
            ctx.rep().antipodal.colors.end())
            continue;
        auto [a, b] = x.representative(s);
        RigidityCertificate cert = rho_closure(ctx, {a, b});
        scan.attempts.emplace_back(s, cert);
        if (cert.rigid) {
            scan.color = s;
            scan.certificate = cert;
            break;
        }
    }
    return scan;
}

bool replay(const RigidityContext& ctx, const RigidityCertificate& cert) {
    RigidityCertificate rerun = rho_closure(ctx, {cert.seed[0], cert.seed[1]});
    if (rerun.rigid != cert.rigid || rerun.final_size != cert.final_size) return false;
    if (rerun.trace.size() != cert.trace.size()) return false;
    for (size_t i = 0; i < cert.trace.size(); ++i) {
        const ClosureStep& a = rerun.trace[i];
        const ClosureStep& b = cert.trace[i];
        if (a.gamma != b.gamma || a.alpha != b.alpha || a.beta != b.beta || a.u != b.u ||
            a.v != b.v)
            return false;
    }
    return true;
}

} // namespace cc
