#pragma once

#include <optional>
#include <set>
#include <vector>

#include "sturmkit/decision.hpp"
#include "sturmkit/modules.hpp"
#include "sturmkit/sturmian.hpp"

namespace sturmkit {

// Interval exchange transformation on (0,1] with right-closed intervals
// (alpha_{k-1}, alpha_k]. Lengths are stored normalized to total 1; the
// original total survives in `scale` so induced maps keep their true size
// (the SAF invariant is not stable under irrational rescaling).
struct IetSpec {
    int d = 1;
    std::vector<int> perm;           // 1-based: perm[k-1] = sigma(k)
    std::vector<RealValue> lengths;  // normalized, sum 1
    RealValue scale;                 // actual total length
    bool irreducible = true;

    const BasisPtr& basis() const { return lengths.front().basis(); }
    int sigma(int k) const { return perm[static_cast<size_t>(k - 1)]; }
    int sigma_inv(int j) const;

    bool same_projective_state(const IetSpec& o) const {
        return d == o.d && perm == o.perm && lengths == o.lengths;
    }
};

IetSpec new_iet(const std::vector<int>& perm, const std::vector<RealValue>& lengths);

// Discontinuities alpha_1 < ... < alpha_d = 1 of the normalized map.
std::vector<RealValue> discontinuities(const IetSpec& t);
// Translation applied on each interval: T(x) = x + w_k for x in I_k.
std::vector<RealValue> translations(const IetSpec& t);

RealValue evaluate(const IetSpec& t, const RealValue& x);
IetSpec inverse(const IetSpec& t);
// Alphabet order reversal k -> d+1-k on both rows.
IetSpec reflect(const IetSpec& t);

// Interval labels (0-based) of x, T(x), ..., T^{n-1}(x).
Word orbit_word(const IetSpec& t, const RealValue& x, size_t n);

// YES via the sufficient condition (irreducible + only the trivial rational
// relation among the lengths); NO on a discontinuity-orbit collision within
// search_depth or a reducible permutation; UNKNOWN otherwise.
Decision keane_check(const IetSpec& t, long search_depth);

// Sorted exact discontinuity set of T^m (at most (d-1)|m|+1 points).
std::vector<RealValue> power_discontinuities(const IetSpec& t, long m);

enum class RauzyType { TOP, BOTTOM };

struct RauzyStep {
    RauzyType type;
    IetSpec next;
};

// One step of Rauzy-Veech induction: first return on (0, 1 - min(lambda_d,
// lambda_{sigma^-1(d)})], renormalized. TOP when lambda_d wins; a tie is a
// KeaneViolation.
RauzyStep rauzy_step(const IetSpec& t);

struct RauzyPath {
    std::vector<RauzyType> types;
    std::vector<IetSpec> states;  // states[0] = start; states[i+1] after step i
    std::optional<std::pair<size_t, size_t>> period;  // (preperiod, period length)
    bool keane_violation = false;

    // type at any index, unrolling the detected period
    RauzyType type_at(size_t i) const;
    std::string type_string() const;  // over {T, B}
};

RauzyPath rauzy_path(const IetSpec& t, size_t depth);

// Cylinder of the word w as a subinterval (lo, hi] of the normalized domain;
// nullopt when empty.
struct IntervalPiece {
    RealValue lo, hi;
};
std::optional<IntervalPiece> cylinder_interval(const IetSpec& t, const Word& w);

// Exact first-return map on (lo, hi], as an IET scaled by the parent.
IetSpec induced_on_interval(const IetSpec& t, const RealValue& lo, const RealValue& hi,
                            long iter_cap);

IetSpec induced_on_cylinder(const IetSpec& t, const Word& w, long iter_cap);

// Merge letters at removable discontinuities (adjacent image slots) until
// none remain; cyclic-order-preserving permutations collapse to the 2-letter
// rotation presentation. Idempotent.
IetSpec minimal_model(const IetSpec& t);

// Sum over intervals of length ^ translation, taken at true (scale) size.
WedgeValue saf(const IetSpec& t);

struct RationalInvariants {
    QSpan span;       // Q-span of the lengths, projectively canonicalized
    WedgeValue saf;   // content- and sign-normalized SAF class
    bool operator==(const RationalInvariants& o) const {
        return span == o.span && saf == o.saf;
    }
};

RationalInvariants rational_invariants(const IetSpec& t);

// Number of distinct length-n factors of the coding, via the exact
// discontinuity partition of T^{-n}.
size_t factor_count(const IetSpec& t, size_t n);
// All length-n factors (n >= 1), one per cylinder cell.
std::set<Word> iet_factors(const IetSpec& t, size_t n);

// Topological conjugacy of the codings: same Rauzy path (up to the order
// reversing relabeling). YES needs periodicity certificates on both sides.
Decision ies_conjugate(const IetSpec& t1, const IetSpec& t2, size_t depth);

// Flow equivalence: search for topologically conjugate cylinder-induced
// systems, cylinders ordered by word length then lexicographic order.
Decision ies_flow_equivalent(const IetSpec& t1, const IetSpec& t2, size_t depth);

}  // namespace sturmkit
