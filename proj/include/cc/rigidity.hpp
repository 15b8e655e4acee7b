#pragma once

#include <array>
#include <optional>
#include <vector>

#include "cc/color_graph.hpp"
#include "cc/spectral.hpp"

namespace cc {

// One point addition of the closure: gamma joined because the non-antipodal
// pair (alpha,beta) satisfied the growth rule with Gram classes (u,v).
struct ClosureStep {
    int gamma = -1;
    int alpha = -1, beta = -1;
    int u = -1, v = -1;
};

struct RigidityCertificate {
    std::array<int, 2> seed{-1, -1};
    ColorId seed_color = -1;
    std::vector<ClosureStep> trace;
    bool rigid = false;
    int final_size = 0;
};

// Precomputed data for closure runs: the tensor summed over Gram classes,
// as bitsets over result colors. Construction asserts the c <= 2 bound for
// non-antipodal result colors.
class RigidityContext {
  public:
    RigidityContext(const ColorGraph& x, const IntersectionTensor& t, const SphericalRep& rep);

    const ColorGraph& x() const { return *x_; }
    const SphericalRep& rep() const { return *rep_; }
    int num_w() const { return nw_; }
    int words() const { return words_; }
    bool antipodal_pair(int a, int b) const { return antipodal_color_[x_->color(a, b)] != 0; }
    bool antipodal_color(ColorId s) const { return antipodal_color_[s] != 0; }
    long long c_w(int u, int v, ColorId t) const; // union-extended intersection number

    const uint64_t* geq1(int u, int v) const { return &geq1_[(static_cast<size_t>(u) * nw_ + v) * words_]; }
    const uint64_t* eq2(int u, int v) const { return &eq2_[(static_cast<size_t>(u) * nw_ + v) * words_]; }

  private:
    const ColorGraph* x_;
    const SphericalRep* rep_;
    int nw_ = 0, words_ = 0;
    std::vector<char> antipodal_color_;
    std::vector<long long> cw_;     // nw * nw * rank
    std::vector<uint64_t> geq1_, eq2_;
};

// S(Delta; alpha, beta): for |Delta| = 2 the singleton {r(alpha,beta)};
// otherwise the colors t in the Gram class of r(alpha,beta) contained in
// every composition r_rho(alpha,d) . r_rho(d,beta) over d in
// Delta \ {alpha,beta}, decided by c_{s(u),s(v)}^t >= 1 on the
// union-extended tensor.
std::vector<ColorId> s_delta(const RigidityContext& ctx, const std::vector<int>& delta,
                             int alpha, int beta);

// Smallest rho-closed superset of the seed, with a replayable trace.
// Growth rule: add gamma when some non-antipodal pair (alpha,beta) in
// Delta^2 has c_{s(u),s(v)}^t = 2 for every t in S(Delta;alpha,beta), where
// u = w(r(alpha,gamma)) and v = w(r(beta,gamma)). Smallest gamma first.
RigidityCertificate rho_closure(const RigidityContext& ctx, const std::vector<int>& seed);

struct RigidityScan {
    std::optional<ColorId> color;
    RigidityCertificate certificate;                            // of the found color
    std::vector<std::pair<ColorId, RigidityCertificate>> attempts; // every scanned color
};

// Scans non-reflexive, non-antipodal colors in id order; one representative
// pair each; returns the first whose pair closes to Omega.
RigidityScan find_rigid_color(const RigidityContext& ctx);

// Re-runs the closure from the certificate's seed and compares trace,
// result and final size step by step.
bool replay(const RigidityContext& ctx, const RigidityCertificate& cert);

} // namespace cc
