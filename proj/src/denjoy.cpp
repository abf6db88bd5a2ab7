#include "sturmkit/denjoy.hpp"

#include <algorithm>

#include "sturmkit/cfrac.hpp"
#include "sturmkit/pell.hpp"

namespace sturmkit {

namespace {

size_t pivot_index(const RealValue& rho) {
    for (size_t i = 1; i < rho.coords().size(); ++i)
        if (rho.coord(i) != 0) return i;
    throw Error("denjoy: rho must be irrational");
}

bool is_integer(const RealValue& v) {
    return v.is_rational() && v.coord(0).get_den() == 1;
}

void sort_values(std::vector<RealValue>& vs) {
    std::sort(vs.begin(), vs.end(),
              [](const RealValue& a, const RealValue& b) { return lt(a, b); });
}

}  // namespace

RealValue orbit_canonical(const RealValue& rho, const RealValue& q) {
    require_same_basis(rho, q);
    size_t piv = pivot_index(rho);
    const Rat& rp = rho.coord(piv);
    const Rat& qp = q.coord(piv);
    // choose integer k with (q - k*rho) having pivot coordinate in [0, |rp|)
    Rat arp = rp > 0 ? rp : Rat(-rp);
    Rat rem = qp - Rat(rat_floor(qp / arp)) * arp;
    Rat k = (qp - rem) / rp;
    if (k.get_den() != 1) throw Error("orbit_canonical: internal reduction failure");
    return frac(q - rho * k);
}

bool same_orbit(const RealValue& rho, const RealValue& a, const RealValue& b) {
    RealValue d = a - b;
    size_t piv = pivot_index(rho);
    Rat k = d.coord(piv) / rho.coord(piv);
    if (k.get_den() != 1) return false;
    return is_integer(d - rho * k);
}

NormalizeResult normalize(const RealValue& rho, const std::vector<RealValue>& raw_reps) {
    if (rho.is_rational()) throw Error("normalize: rho must be irrational");
    RealValue r = frac(rho);
    std::vector<RealValue> reps;
    bool saw_origin = false;
    RealValue zero = RealValue::zero(r.basis());
    for (const RealValue& raw : raw_reps) {
        RealValue c = orbit_canonical(r, raw);
        if (c == zero) {
            saw_origin = true;
            continue;
        }
        if (std::find(reps.begin(), reps.end(), c) == reps.end()) reps.push_back(c);
    }
    sort_values(reps);
    reps.insert(reps.begin(), zero);
    return NormalizeResult{DenjoyParams{r, std::move(reps)}, !saw_origin};
}

DenjoyStateImage denjoy_state_image(const DenjoyParams& p) {
    std::vector<RealValue> gens{RealValue::one(p.rho.basis()), p.rho};
    gens.insert(gens.end(), p.reps.begin(), p.reps.end());
    ZModule m = zmodule_of(p.rho.basis(), gens);
    int coinv = static_cast<int>(p.reps.size()) + 1;
    return DenjoyStateImage{m, coinv, coinv - m.rank()};
}

DenjoyParams power_params(const DenjoyParams& p, long m) {
    if (m == 0) throw Error("power_params: m != 0 required");
    RealValue rho2 = frac(p.rho * Rat(m));
    if (rho2.is_rational()) throw Error("power_params: power rotation became rational");
    long am = m < 0 ? -m : m;
    std::vector<RealValue> reps;
    RealValue zero = RealValue::zero(p.rho.basis());
    for (const RealValue& r : p.reps) {
        for (long k = 0; k < am; ++k) {
            RealValue c = orbit_canonical(rho2, r + p.rho * Rat(k));
            if (c == zero) continue;
            if (std::find(reps.begin(), reps.end(), c) == reps.end()) reps.push_back(c);
        }
    }
    sort_values(reps);
    reps.insert(reps.begin(), zero);
    return DenjoyParams{rho2, std::move(reps)};
}

QSpan rational_cut_span(const DenjoyParams& p) {
    std::vector<RealValue> gens{RealValue::one(p.rho.basis()), p.rho};
    gens.insert(gens.end(), p.reps.begin(), p.reps.end());
    return qspan_of(p.rho.basis(), gens);
}

bool two_ai_infinitesimal(const DenjoyParams& big, const DenjoyParams& small) {
    if (big.rho != small.rho) throw Error("two_ai_infinitesimal: same rotation number required");
    for (const RealValue& r : small.reps) {
        if (std::find(big.reps.begin(), big.reps.end(), r) == big.reps.end())
            throw NotAFactor("two_ai_infinitesimal: small orbit set not contained in big");
    }
    return rational_cut_span(big) == rational_cut_span(small);
}

Decision two_ai_equivalent(const DenjoyParams& p1, const DenjoyParams& p2) {
    require_same_basis(p1.rho, p2.rho);
    int s;
    if (is_integer(p1.rho - p2.rho))
        s = 1;
    else if (is_integer(p1.rho + p2.rho))
        s = -1;
    else
        return Decision::no("rotation numbers differ mod Z up to sign");
    // negation leaves Q-spans unchanged, so the span test is sign-independent
    if (rational_cut_span(p1) != rational_cut_span(p2))
        return Decision::no("rational cut spans differ");
    Decision d = Decision::yes();
    d.sign = s;
    return d;
}

bool verify_isogeny_certificate(const DenjoyParams& p0, const DenjoyParams& p1, const Mat2& m) {
    if (!same_basis(p0.rho.basis(), p1.rho.basis())) return false;  // different fields
    RealValue den = p0.rho * m.m21 + m.m22;
    if (den.is_zero()) throw PoleHit();
    RealValue image = apply(m, p0.rho);
    if (!is_integer(image - p1.rho)) return false;
    RealValue c = den.inverse();
    std::vector<RealValue> scaled;
    scaled.push_back(c);
    scaled.push_back(c * p0.rho);
    for (const RealValue& r : p0.reps) scaled.push_back(c * r);
    return qspan_of(p0.rho.basis(), scaled) == rational_cut_span(p1);
}

namespace {

// does the scaled rep system match p1's orbit set up to some rotation?
bool reps_match_up_to_rotation(const DenjoyParams& p1, const std::vector<RealValue>& scaled,
                               RealValue* rotation_out) {
    std::vector<RealValue> b;
    b.reserve(scaled.size());
    for (const RealValue& v : scaled) b.push_back(orbit_canonical(p1.rho, v));
    auto canon_set = [](std::vector<RealValue> vs) {
        sort_values(vs);
        return vs;
    };
    std::vector<RealValue> target = canon_set(p1.reps);
    // any bijection pairs some b-element with some target rep, so the finitely
    // many differences are the only rotation candidates
    for (const RealValue& a : target) {
        for (const RealValue& bb : b) {
            RealValue t = a - bb;
            std::vector<RealValue> shifted;
            shifted.reserve(b.size());
            for (const RealValue& v : b) shifted.push_back(orbit_canonical(p1.rho, v + t));
            if (canon_set(shifted) == target) {
                if (rotation_out) *rotation_out = frac(t);
                return true;
            }
        }
    }
    return false;
}

}  // namespace

bool verify_flow_certificate(const DenjoyParams& p0, const DenjoyParams& p1, const Mat2& m) {
    if (!same_basis(p0.rho.basis(), p1.rho.basis())) return false;
    if (!m.is_integral()) return false;
    Rat det = m.det();
    if (det != 1 && det != -1) return false;
    RealValue den = p0.rho * m.m21 + m.m22;
    if (den.is_zero()) return false;
    if (apply(m, p0.rho) != p1.rho) return false;
    RealValue c = den.inverse();
    std::vector<RealValue> scaled;
    scaled.reserve(p0.reps.size());
    for (const RealValue& r : p0.reps) scaled.push_back(c * r);
    return reps_match_up_to_rotation(p1, scaled, nullptr);
}

Decision denjoy_flow_equivalent(const DenjoyParams& p0, const DenjoyParams& p1, long k_bound) {
    if (p0.rho.basis()->kind() != BasisKind::quadratic ||
        p1.rho.basis()->kind() != BasisKind::quadratic)
        throw FormalBasisUnsupported("denjoy_flow_equivalent: quadratic rotation numbers required");
    if (!same_basis(p0.rho.basis(), p1.rho.basis()))
        return Decision::no("rotation numbers lie in different quadratic fields");
    if (p0.reps.size() != p1.reps.size()) return Decision::no("orbit counts differ");

    ContinuedFraction cf0 = expand_periodic(p0.rho);
    ContinuedFraction cf1 = expand_periodic(p1.rho);
    if (!same_period_cycle(cf0, cf1))
        return Decision::no("rotation numbers are not PGL2(Z)-equivalent (tails differ)");

    // tail witness: align exact complete quotients
    size_t n0 = cf0.preperiod.size() + 2 * cf0.period.size();
    size_t n1 = cf1.preperiod.size() + 2 * cf1.period.size();
    auto q0 = complete_quotients(p0.rho, n0 + 1);
    auto q1 = complete_quotients(p1.rho, n1 + 1);
    Mat2 m0;
    bool found = false;
    for (size_t i = 0; i < q0.size() && !found; ++i) {
        for (size_t j = 0; j < q1.size() && !found; ++j) {
            if (q0[i] == q1[j]) {
                Mat2 ca = convergent_matrix(cf0.digits(i));
                Mat2 cb = convergent_matrix(cf1.digits(j));
                m0 = cb * ca.inverse();
                found = true;
            }
        }
    }
    if (!found) throw Error("denjoy_flow_equivalent: tail witness not found despite equal cycles");

    Mat2 f0 = primitive_stabilizer(p0.rho);
    Mat2 f1 = primitive_stabilizer(p1.rho);

    // enumerate candidates in order (|k|+|j|, k, j), sign + before -
    std::vector<std::pair<long, long>> offsets;
    for (long k = -k_bound; k <= k_bound; ++k)
        for (long j = -k_bound; j <= k_bound; ++j) offsets.emplace_back(k, j);
    std::sort(offsets.begin(), offsets.end(), [](const auto& a, const auto& b) {
        long sa = std::abs(a.first) + std::abs(a.second);
        long sb = std::abs(b.first) + std::abs(b.second);
        if (sa != sb) return sa < sb;
        return a < b;
    });

    for (const auto& [k, j] : offsets) {
        Mat2 base = f1.pow(k) * m0 * f0.pow(j);
        for (int s : {1, -1}) {
            Mat2 cand = s == 1 ? base : -base;
            RealValue den = p0.rho * cand.m21 + cand.m22;
            if (den.is_zero()) continue;
            RealValue c = den.inverse();
            std::vector<RealValue> scaled;
            scaled.reserve(p0.reps.size());
            for (const RealValue& r : p0.reps) scaled.push_back(c * r);
            RealValue rotation = RealValue::zero(p0.rho.basis());
            if (reps_match_up_to_rotation(p1, scaled, &rotation)) {
                Decision d = Decision::yes_matrix(cand);
                d.sign = s;
                d.certificate_text = "rotation=" + rotation.str() + " k=" + std::to_string(k) +
                                     " j=" + std::to_string(j);
                return d;
            }
        }
    }
    return Decision::unknown(k_bound, "double-coset search exhausted");
}

}  // namespace sturmkit
