#include "sturmkit/iet.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace sturmkit {

namespace {

bool is_bijection(const std::vector<int>& perm) {
    const int d = static_cast<int>(perm.size());
    std::vector<bool> seen(static_cast<size_t>(d), false);
    for (int v : perm) {
        if (v < 1 || v > d || seen[static_cast<size_t>(v - 1)]) return false;
        seen[static_cast<size_t>(v - 1)] = true;
    }
    return true;
}

bool is_irreducible(const std::vector<int>& perm) {
    const int d = static_cast<int>(perm.size());
    // sigma({1..k}) = {1..k} for some k < d means the map splits
    int max_image = 0;
    for (int k = 1; k < d; ++k) {
        max_image = std::max(max_image, perm[static_cast<size_t>(k - 1)]);
        if (max_image == k) return false;
    }
    return true;
}

RealValue sum(const std::vector<RealValue>& vs) {
    RealValue acc = RealValue::zero(vs.front().basis());
    for (const RealValue& v : vs) acc = acc + v;
    return acc;
}

}  // namespace

int IetSpec::sigma_inv(int j) const {
    for (int k = 1; k <= d; ++k)
        if (sigma(k) == j) return k;
    throw Error("sigma_inv: not a permutation");
}

IetSpec new_iet(const std::vector<int>& perm, const std::vector<RealValue>& lengths) {
    if (perm.empty() || perm.size() != lengths.size()) throw NotBijection("perm/length size mismatch");
    if (!is_bijection(perm)) throw NotBijection();
    const BasisPtr& basis = lengths.front().basis();
    for (const RealValue& l : lengths) {
        if (!same_basis(l.basis(), basis)) throw BasisMismatch();
        if (sign(l) <= 0) throw NonPositiveLength();
    }
    IetSpec t;
    t.d = static_cast<int>(perm.size());
    t.perm = perm;
    t.scale = sum(lengths);
    if (t.scale == RealValue::one(basis)) {
        t.lengths = lengths;
    } else {
        t.lengths.reserve(lengths.size());
        for (const RealValue& l : lengths) t.lengths.push_back(l / t.scale);
    }
    t.irreducible = is_irreducible(perm);
    return t;
}

std::vector<RealValue> discontinuities(const IetSpec& t) {
    std::vector<RealValue> alphas;
    alphas.reserve(static_cast<size_t>(t.d));
    RealValue acc = RealValue::zero(t.basis());
    for (const RealValue& l : t.lengths) {
        acc = acc + l;
        alphas.push_back(acc);
    }
    return alphas;
}

std::vector<RealValue> translations(const IetSpec& t) {
    // w_k = beta_{sigma(k)-1} - alpha_{k-1}
    const BasisPtr& basis = t.basis();
    std::vector<RealValue> by_slot(static_cast<size_t>(t.d), RealValue::zero(basis));
    for (int k = 1; k <= t.d; ++k)
        by_slot[static_cast<size_t>(t.sigma(k) - 1)] = t.lengths[static_cast<size_t>(k - 1)];
    std::vector<RealValue> beta_before(static_cast<size_t>(t.d), RealValue::zero(basis));
    RealValue acc = RealValue::zero(basis);
    for (int j = 1; j <= t.d; ++j) {
        beta_before[static_cast<size_t>(j - 1)] = acc;
        acc = acc + by_slot[static_cast<size_t>(j - 1)];
    }
    std::vector<RealValue> w;
    w.reserve(static_cast<size_t>(t.d));
    RealValue alpha_prev = RealValue::zero(basis);
    for (int k = 1; k <= t.d; ++k) {
        w.push_back(beta_before[static_cast<size_t>(t.sigma(k) - 1)] - alpha_prev);
        alpha_prev = alpha_prev + t.lengths[static_cast<size_t>(k - 1)];
    }
    return w;
}

namespace {

// index (1-based) of the interval (alpha_{k-1}, alpha_k] containing x
int interval_of(const IetSpec& t, const std::vector<RealValue>& alphas, const RealValue& x) {
    if (sign(x) <= 0 || gt(x, alphas.back())) throw OutOfDomain("x outside (0, 1]");
    for (int k = 1; k <= t.d; ++k)
        if (le(x, alphas[static_cast<size_t>(k - 1)])) return k;
    throw OutOfDomain("x outside (0, 1]");
}

}  // namespace

RealValue evaluate(const IetSpec& t, const RealValue& x) {
    auto alphas = discontinuities(t);
    int k = interval_of(t, alphas, x);
    return x + translations(t)[static_cast<size_t>(k - 1)];
}

IetSpec inverse(const IetSpec& t) {
    std::vector<int> perm(static_cast<size_t>(t.d));
    std::vector<RealValue> lengths;
    lengths.reserve(static_cast<size_t>(t.d));
    for (int j = 1; j <= t.d; ++j) {
        int k = t.sigma_inv(j);
        perm[static_cast<size_t>(j - 1)] = k;
        lengths.push_back(t.lengths[static_cast<size_t>(k - 1)] * t.scale);
    }
    return new_iet(perm, lengths);
}

IetSpec reflect(const IetSpec& t) {
    std::vector<int> perm(static_cast<size_t>(t.d));
    std::vector<RealValue> lengths;
    lengths.reserve(static_cast<size_t>(t.d));
    for (int k = 1; k <= t.d; ++k) {
        perm[static_cast<size_t>(k - 1)] = t.d + 1 - t.sigma(t.d + 1 - k);
        lengths.push_back(t.lengths[static_cast<size_t>(t.d - k)] * t.scale);
    }
    return new_iet(perm, lengths);
}

Word orbit_word(const IetSpec& t, const RealValue& x, size_t n) {
    auto alphas = discontinuities(t);
    auto trans = translations(t);
    Word w;
    w.alphabet = t.d;
    RealValue cur = x;
    for (size_t i = 0; i < n; ++i) {
        int k = interval_of(t, alphas, cur);
        w.symbols.push_back(k - 1);
        cur = cur + trans[static_cast<size_t>(k - 1)];
    }
    return w;
}

Decision keane_check(const IetSpec& t, long search_depth) {
    if (!t.irreducible) return Decision::no("reducible permutation");
    // sufficient condition: the only rational relation among {1, lambda_k}
    // is the normalization itself
    std::vector<RealValue> gens{RealValue::one(t.basis())};
    gens.insert(gens.end(), t.lengths.begin(), t.lengths.end());
    if (qspan_of(t.basis(), gens).dim() == t.d) return Decision::yes();

    // hunt for a collision T^-n(alpha_k) = alpha_j among interior points
    IetSpec inv = inverse(t);
    auto alphas = discontinuities(t);
    std::vector<RealValue> orbit(alphas.begin(), alphas.end() - 1);
    for (long n = 1; n <= search_depth; ++n) {
        for (size_t k = 0; k < orbit.size(); ++k) {
            orbit[k] = evaluate(inv, orbit[k]);
            for (size_t j = 0; j + 1 < alphas.size(); ++j) {
                if (orbit[k] == alphas[j]) {
                    Decision d = Decision::no("discontinuity orbit collision");
                    d.failing_n = Int(n);
                    d.certificate_text = "T^-" + std::to_string(n) + "(alpha_" +
                                         std::to_string(k + 1) + ") = alpha_" + std::to_string(j + 1);
                    return d;
                }
            }
        }
    }
    return Decision::unknown(search_depth, "no collision found; rational relations present");
}

std::vector<RealValue> power_discontinuities(const IetSpec& t, long m) {
    if (m == 0) throw Error("power_discontinuities: m != 0 required");
    if (m < 0) return power_discontinuities(inverse(t), -m);
    auto alphas = discontinuities(t);
    IetSpec inv = inverse(t);
    std::vector<RealValue> points{alphas.back()};  // the right endpoint 1
    std::vector<RealValue> interior(alphas.begin(), alphas.end() - 1);
    for (long n = 0; n < m; ++n) {
        points.insert(points.end(), interior.begin(), interior.end());
        for (RealValue& p : interior) p = evaluate(inv, p);
    }
    std::sort(points.begin(), points.end(),
              [](const RealValue& a, const RealValue& b) { return lt(a, b); });
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return points;
}

namespace {

struct RawStep {
    RauzyType type;
    std::vector<int> perm;
    std::vector<RealValue> lengths;  // unnormalized; built by subtraction only
};

// One induction step on raw data. Needs comparisons and subtraction only, so
// it also runs on formal bases where renormalization is unavailable.
RawStep rauzy_step_raw(const std::vector<int>& sigma, const std::vector<RealValue>& lam) {
    const int d = static_cast<int>(sigma.size());
    if (d < 2) throw KeaneViolation("rauzy_step: needs at least two intervals");
    int kstar = 0;
    for (int k = 1; k <= d; ++k)
        if (sigma[static_cast<size_t>(k - 1)] == d) kstar = k;
    if (kstar == d) throw KeaneViolation("rauzy_step: sigma fixes d");
    const RealValue& lam_d = lam[static_cast<size_t>(d - 1)];
    const RealValue& lam_k = lam[static_cast<size_t>(kstar - 1)];
    Ordering cmp_dk = compare(lam_d, lam_k);
    if (cmp_dk == Ordering::EQ) throw KeaneViolation("rauzy_step: tied rightmost lengths");

    RawStep out;
    out.type = cmp_dk == Ordering::GT ? RauzyType::TOP : RauzyType::BOTTOM;
    out.perm.resize(static_cast<size_t>(d));
    out.lengths.reserve(static_cast<size_t>(d));
    const int sd = sigma[static_cast<size_t>(d - 1)];

    if (out.type == RauzyType::TOP) {
        // domain interval d shrinks by lam_k; image slot sigma(d) splits
        for (int i = 1; i <= d; ++i) {
            int s = sigma[static_cast<size_t>(i - 1)];
            int ns;
            if (i == kstar)
                ns = sd + 1;
            else if (s <= sd)
                ns = s;
            else
                ns = s + 1;
            out.perm[static_cast<size_t>(i - 1)] = ns;
        }
        for (int i = 1; i < d; ++i) out.lengths.push_back(lam[static_cast<size_t>(i - 1)]);
        out.lengths.push_back(lam_d - lam_k);
    } else {
        // domain interval kstar splits; image slot d truncates
        for (int j = 1; j <= d; ++j) {
            int ns;
            if (j < kstar)
                ns = sigma[static_cast<size_t>(j - 1)];
            else if (j == kstar)
                ns = d;
            else if (j == kstar + 1)
                ns = sd;
            else
                ns = sigma[static_cast<size_t>(j - 2)];
            out.perm[static_cast<size_t>(j - 1)] = ns;
        }
        for (int j = 1; j <= d; ++j) {
            if (j < kstar)
                out.lengths.push_back(lam[static_cast<size_t>(j - 1)]);
            else if (j == kstar)
                out.lengths.push_back(lam_k - lam_d);
            else if (j == kstar + 1)
                out.lengths.push_back(lam_d);
            else
                out.lengths.push_back(lam[static_cast<size_t>(j - 2)]);
        }
    }
    return out;
}

}  // namespace

RauzyStep rauzy_step(const IetSpec& t) {
    RawStep raw = rauzy_step_raw(t.perm, t.lengths);
    int kstar = t.sigma_inv(t.d);
    const RealValue& removed =
        raw.type == RauzyType::TOP ? t.lengths[static_cast<size_t>(kstar - 1)]
                                   : t.lengths[static_cast<size_t>(t.d - 1)];
    IetSpec next = new_iet(raw.perm, raw.lengths);
    next.scale = t.scale * (RealValue::one(t.basis()) - removed);
    return RauzyStep{raw.type, next};
}

RauzyType RauzyPath::type_at(size_t i) const {
    if (i < types.size()) return types[i];
    if (!period) throw Error("RauzyPath::type_at: index beyond computed path");
    auto [pre, per] = *period;
    if (per == 0) throw Error("RauzyPath::type_at: empty period");
    size_t j = pre + (i - pre) % per;
    return types[j];
}

std::string RauzyPath::type_string() const {
    std::string s;
    for (RauzyType ty : types) s += ty == RauzyType::TOP ? 'T' : 'B';
    return s;
}

RauzyPath rauzy_path(const IetSpec& t, size_t depth) {
    RauzyPath path;
    path.states.push_back(t);
    if (t.basis()->kind() == BasisKind::formal) {
        // no exact renormalization on formal bases: iterate raw data, record
        // types, and never claim a periodicity certificate
        std::vector<int> perm = t.perm;
        std::vector<RealValue> lam = t.lengths;
        for (size_t i = 0; i < depth; ++i) {
            try {
                RawStep raw = rauzy_step_raw(perm, lam);
                path.types.push_back(raw.type);
                perm = std::move(raw.perm);
                lam = std::move(raw.lengths);
            } catch (const KeaneViolation&) {
                path.keane_violation = true;
                return path;
            }
        }
        return path;
    }
    for (size_t i = 0; i < depth; ++i) {
        RauzyStep step;
        try {
            step = rauzy_step(path.states.back());
        } catch (const KeaneViolation&) {
            path.keane_violation = true;
            return path;
        }
        path.types.push_back(step.type);
        path.states.push_back(step.next);
        // exact projective recurrence = self-induced tail
        for (size_t j = 0; j + 1 < path.states.size(); ++j) {
            if (path.states[j].same_projective_state(path.states.back())) {
                path.period = std::make_pair(j, path.states.size() - 1 - j);
                return path;
            }
        }
    }
    return path;
}

std::optional<IntervalPiece> cylinder_interval(const IetSpec& t, const Word& w) {
    if (w.symbols.empty())
        return IntervalPiece{RealValue::zero(t.basis()), RealValue::one(t.basis())};
    auto alphas = discontinuities(t);
    auto trans = translations(t);
    auto left = [&](int k) {
        return k == 1 ? RealValue::zero(t.basis()) : alphas[static_cast<size_t>(k - 2)];
    };
    for (int s : w.symbols)
        if (s < 0 || s >= t.d) throw OutOfDomain("cylinder_interval: letter out of range");

    int k0 = w.symbols[0] + 1;
    RealValue lo = left(k0), hi = alphas[static_cast<size_t>(k0 - 1)];
    RealValue shift = RealValue::zero(t.basis());
    for (size_t j = 1; j < w.symbols.size(); ++j) {
        int prev = w.symbols[j - 1] + 1;
        shift = shift + trans[static_cast<size_t>(prev - 1)];
        int k = w.symbols[j] + 1;
        // constrain (lo,hi] + shift to (left(k), alpha_k]
        RealValue clo = left(k) - shift, chi = alphas[static_cast<size_t>(k - 1)] - shift;
        if (gt(clo, lo)) lo = clo;
        if (lt(chi, hi)) hi = chi;
        if (ge(lo, hi)) return std::nullopt;
    }
    return IntervalPiece{lo, hi};
}

IetSpec induced_on_interval(const IetSpec& t, const RealValue& lo, const RealValue& hi,
                            long iter_cap) {
    if (ge(lo, hi)) throw EmptyCylinder();
    auto alphas = discontinuities(t);
    auto trans = translations(t);

    struct Piece {
        RealValue dom_lo, dom_hi;  // subinterval of (lo, hi]
        RealValue shift;           // current position = dom + shift
    };
    std::deque<Piece> queue;
    std::vector<Piece> done;
    queue.push_back({lo, hi, RealValue::zero(t.basis())});
    bool first = true;
    long steps = 0;
    while (!queue.empty()) {
        if (++steps > iter_cap) throw IterationCapExceeded();
        Piece p = queue.front();
        queue.pop_front();
        RealValue plo = p.dom_lo + p.shift, phi = p.dom_hi + p.shift;
        if (!first) {
            if (le(hi, plo) || le(phi, lo)) {
                // entirely outside (lo, hi]: keep iterating
            } else if (ge(plo, lo) && le(phi, hi)) {
                done.push_back(p);
                continue;
            } else if (lt(plo, lo) && gt(phi, lo)) {
                RealValue cut = lo - p.shift;
                queue.push_back({p.dom_lo, cut, p.shift});
                queue.push_back({cut, p.dom_hi, p.shift});
                continue;
            } else {
                RealValue cut = hi - p.shift;
                queue.push_back({p.dom_lo, cut, p.shift});
                queue.push_back({cut, p.dom_hi, p.shift});
                continue;
            }
        }
        first = false;
        // apply T: split the position interval at the domain discontinuities
        RealValue seg_lo = plo;
        for (int k = 1; k <= t.d && lt(seg_lo, phi); ++k) {
            const RealValue& ak = alphas[static_cast<size_t>(k - 1)];
            if (le(ak, seg_lo)) continue;
            RealValue seg_hi = lt(ak, phi) ? ak : phi;
            queue.push_back({seg_lo - p.shift, seg_hi - p.shift,
                             p.shift + trans[static_cast<size_t>(k - 1)]});
            seg_lo = seg_hi;
        }
    }
    std::sort(done.begin(), done.end(),
              [](const Piece& a, const Piece& b) { return lt(a.dom_lo, b.dom_lo); });
    // the returned pieces must tile (lo, hi]
    if (done.empty() || done.front().dom_lo != lo || done.back().dom_hi != hi)
        throw Error("induced_on_interval: return pieces do not tile the base");
    for (size_t i = 0; i + 1 < done.size(); ++i)
        if (done[i].dom_hi != done[i + 1].dom_lo)
            throw Error("induced_on_interval: return pieces do not tile the base");

    // permutation = rank order of the images
    const size_t n = done.size();
    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return lt(done[a].dom_lo + done[a].shift, done[b].dom_lo + done[b].shift);
    });
    std::vector<int> perm(n);
    for (size_t rank = 0; rank < n; ++rank) perm[order[rank]] = static_cast<int>(rank) + 1;
    std::vector<RealValue> lengths;
    lengths.reserve(n);
    for (const Piece& r : done) lengths.push_back(r.dom_hi - r.dom_lo);
    IetSpec ind = new_iet(perm, lengths);
    ind.scale = t.scale * (hi - lo);
    return ind;
}

IetSpec induced_on_cylinder(const IetSpec& t, const Word& w, long iter_cap) {
    auto c = cylinder_interval(t, w);
    if (!c) throw EmptyCylinder();
    if (c->lo.is_zero() && c->hi == RealValue::one(t.basis())) return t;
    return induced_on_interval(t, c->lo, c->hi, iter_cap);
}

IetSpec minimal_model(const IetSpec& t) {
    IetSpec cur = t;
    for (;;) {
        if (cur.d == 1) return cur;
        int merge_at = 0;
        for (int k = 1; k < cur.d; ++k) {
            if (cur.sigma(k + 1) == cur.sigma(k) + 1) {
                merge_at = k;
                break;
            }
        }
        if (merge_at == 0) return cur;
        int sk = cur.sigma(merge_at);
        std::vector<int> perm;
        std::vector<RealValue> lengths;
        perm.reserve(static_cast<size_t>(cur.d - 1));
        lengths.reserve(static_cast<size_t>(cur.d - 1));
        auto collapse = [&](int s) { return s <= sk ? s : s - 1; };
        for (int j = 1; j <= cur.d; ++j) {
            if (j == merge_at + 1) continue;
            perm.push_back(collapse(cur.sigma(j)));
            RealValue len = cur.lengths[static_cast<size_t>(j - 1)];
            if (j == merge_at) len = len + cur.lengths[static_cast<size_t>(j)];
            lengths.push_back(len * cur.scale);
        }
        RealValue scale = cur.scale;
        cur = new_iet(perm, lengths);
        cur.scale = scale;
    }
}

WedgeValue saf(const IetSpec& t) {
    auto trans = translations(t);
    WedgeValue acc = WedgeValue::zero(t.basis());
    for (int k = 1; k <= t.d; ++k) {
        RealValue len = t.lengths[static_cast<size_t>(k - 1)] * t.scale;
        RealValue tr = trans[static_cast<size_t>(k - 1)] * t.scale;
        acc = acc + wedge(len, tr);
    }
    return acc;
}

RationalInvariants rational_invariants(const IetSpec& t) {
    Decision k = keane_check(t, 30);
    if (k.is_no()) throw KeaneViolation("rational_invariants: Keane condition fails");
    // projectivize the length span: scale so the first length becomes 1
    std::vector<RealValue> scaled;
    scaled.reserve(t.lengths.size());
    if (t.basis()->kind() == BasisKind::formal) {
        scaled = t.lengths;  // no exact division available; stored unscaled
    } else {
        for (const RealValue& l : t.lengths) scaled.push_back(l / t.lengths.front());
    }
    return RationalInvariants{qspan_of(t.basis(), scaled), saf(t).projective_canonical()};
}

size_t factor_count(const IetSpec& t, size_t n) {
    if (n == 0) return 1;
    return power_discontinuities(t, static_cast<long>(n)).size();
}

std::set<Word> iet_factors(const IetSpec& t, size_t n) {
    if (n < 1) throw Error("iet_factors: n >= 1 required");
    auto points = power_discontinuities(t, static_cast<long>(n));
    std::set<Word> out;
    RealValue lo = RealValue::zero(t.basis());
    for (const RealValue& hi : points) {
        RealValue mid = (lo + hi) * make_rat(1, 2);
        out.insert(orbit_word(t, mid, n));
        lo = hi;
    }
    return out;
}

namespace {

enum class PathCompare { EQUAL, DIFFER, INCONCLUSIVE };

// eventually periodic type sequences equal as infinite words?
PathCompare compare_paths(const RauzyPath& a, const RauzyPath& b) {
    size_t common = std::min(a.types.size(), b.types.size());
    for (size_t i = 0; i < common; ++i)
        if (a.types[i] != b.types[i]) return PathCompare::DIFFER;
    if (!a.period || !b.period) return PathCompare::INCONCLUSIVE;
    auto [pa, qa] = *a.period;
    auto [pb, qb] = *b.period;
    size_t horizon = std::max(pa, pb) + std::lcm(qa, qb);
    for (size_t i = 0; i < horizon; ++i)
        if (a.type_at(i) != b.type_at(i)) return PathCompare::DIFFER;
    return PathCompare::EQUAL;
}

}  // namespace

Decision ies_conjugate(const IetSpec& t1, const IetSpec& t2, size_t depth) {
    if (t1.d != t2.d) return Decision::no("alphabet sizes differ");
    if (t1.d == 1) return Decision::yes();  // both trivial one-letter systems

    RauzyPath path1 = rauzy_path(t1, depth);
    bool any_inconclusive = false;
    int label = 0;
    for (const IetSpec& cand : {t2, reflect(t2)}) {
        ++label;
        if (label == 2 && cand.same_projective_state(t2)) break;  // reflection-symmetric
        if (cand.perm != t1.perm) continue;  // different starting Rauzy vertex
        RauzyPath path2 = rauzy_path(cand, depth);
        switch (compare_paths(path1, path2)) {
            case PathCompare::EQUAL: {
                Decision d = Decision::yes();
                d.certificate_text = label == 1 ? "same path" : "same path after order reversal";
                return d;
            }
            case PathCompare::DIFFER:
                break;
            case PathCompare::INCONCLUSIVE:
                any_inconclusive = true;
                break;
        }
    }
    if (any_inconclusive)
        return Decision::unknown(static_cast<long>(depth),
                                 "paths agree to depth without periodicity certificates");
    return Decision::no("Rauzy paths differ");
}

Decision ies_flow_equivalent(const IetSpec& t1, const IetSpec& t2, size_t depth) {
    if (keane_check(t1, 20).is_no() || keane_check(t2, 20).is_no())
        throw KeaneViolation("ies_flow_equivalent: inputs must satisfy the Keane precondition");
    if (t1.d != t2.d) return Decision::no("alphabet sizes differ (complexity slopes)");

    // projectivized Q-span obstruction: flow equivalence maps the cones of
    // invariant measures to each other rationally
    int dim1 = qspan_of(t1.basis(), t1.lengths).dim();
    int dim2 = qspan_of(t2.basis(), t2.lengths).dim();
    if (dim1 != dim2) return Decision::no("length-span dimensions differ");
    if (dim1 >= 2 && t1.basis()->kind() == BasisKind::quadratic &&
        t2.basis()->kind() == BasisKind::quadratic && !same_basis(t1.basis(), t2.basis()))
        return Decision::no("length spans lie in non-proportional quadratic fields");

    // cylinder-induced systems by word length, then lexicographic order
    auto induced_pool = [&](const IetSpec& t) {
        std::vector<std::pair<Word, IetSpec>> pool;
        Word empty;
        empty.alphabet = t.d;
        pool.emplace_back(empty, t);
        for (size_t n = 1; n <= depth; ++n) {
            for (const Word& w : iet_factors(t, n)) {
                IetSpec ind = induced_on_cylinder(t, w, 100000);
                bool dup = false;
                for (const auto& entry : pool)
                    if (entry.second.same_projective_state(ind)) {
                        dup = true;
                        break;
                    }
                if (!dup) pool.emplace_back(w, ind);
            }
        }
        return pool;
    };
    auto pool1 = induced_pool(t1);
    auto pool2 = induced_pool(t2);
    for (const auto& [w1, i1] : pool1) {
        for (const auto& [w2, i2] : pool2) {
            Decision c = ies_conjugate(i1, i2, depth + 20);
            if (c.is_yes()) {
                Decision d = Decision::yes();
                d.certificate_text = "cylinders \"" + w1.str() + "\" and \"" + w2.str() + "\"; " +
                                     c.certificate_text;
                return d;
            }
        }
    }
    return Decision::unknown(static_cast<long>(depth), "cylinder search exhausted");
}

}  // namespace sturmkit
