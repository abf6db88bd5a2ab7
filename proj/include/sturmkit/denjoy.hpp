#pragma once

#include <vector>

#include "sturmkit/decision.hpp"
#include "sturmkit/modules.hpp"
#include "sturmkit/real.hpp"

namespace sturmkit {

// Denjoy-system parameters: rotation number rho in [0,1) irrational, plus one
// canonical representative per R_rho-orbit of the cut set, with the origin's
// orbit first (represented by 0).
struct DenjoyParams {
    RealValue rho;
    std::vector<RealValue> reps;

    size_t orbit_count() const { return reps.size(); }
};

struct NormalizeResult {
    DenjoyParams params;
    bool origin_added = false;
};

// Reduce rho mod 1, reduce the reps modulo Z + Z*rho to canonical orbit
// representatives in [0,1), deduplicate, and ensure the origin's orbit is
// present (added and flagged when missing).
NormalizeResult normalize(const RealValue& rho, const std::vector<RealValue>& raw_reps);

// Canonical representative of q modulo Z + Z*rho, reduced into [0,1).
RealValue orbit_canonical(const RealValue& rho, const RealValue& q);

// q and q' in the same R_rho-orbit, i.e. q - q' in Z + Z*rho?
bool same_orbit(const RealValue& rho, const RealValue& a, const RealValue& b);

struct DenjoyStateImage {
    ZModule module;        // Z-module generated by 1, rho, and the reps
    int coinvariant_rank;  // N + 1
    int infinitesimal_rank;
};

DenjoyStateImage denjoy_state_image(const DenjoyParams& p);

// Parameters of the m-th power system: rotation m*rho mod 1; each original
// orbit splits into |m| orbits with representatives r + k*rho, 0 <= k < |m|.
DenjoyParams power_params(const DenjoyParams& p, long m);

// Q-span of {1, rho} and the reps (the rational state image in the torus).
QSpan rational_cut_span(const DenjoyParams& p);

// Is the 2-A factor from big onto small infinitesimal? True iff the Q-spans
// agree. Throws NotAFactor when small's orbits are not contained in big's.
bool two_ai_infinitesimal(const DenjoyParams& big, const DenjoyParams& small);

// YES(sign) iff rho1 = +-rho2 mod Z and the rational cut spans coincide.
// Never UNKNOWN.
Decision two_ai_equivalent(const DenjoyParams& p1, const DenjoyParams& p2);

// Does M certify isogeny: apply(M, rho0) = rho1 mod Z and
// Q-span(Q1) = c * Q-span(Q0) for c = 1/(m21*rho0 + m22)?
bool verify_isogeny_certificate(const DenjoyParams& p0, const DenjoyParams& p1, const Mat2& m);

// Re-checks a flow-equivalence witness exactly: M integral with det +-1,
// M*rho0 = rho1, and the scaled cut systems matching up to rotation.
bool verify_flow_certificate(const DenjoyParams& p0, const DenjoyParams& p1, const Mat2& m);

// Flow equivalence of Denjoy systems: search for M in GL_2(Z) with
// M*rho0 = rho1 and cut sets matching up to rotation after scaling by
// 1/(m21 rho0 + m22). Bounded double-coset search around a tail witness.
Decision denjoy_flow_equivalent(const DenjoyParams& p0, const DenjoyParams& p1, long k_bound);

}  // namespace sturmkit
