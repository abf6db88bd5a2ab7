#include "sturmkit/cfrac.hpp"

#include <map>
#include <sstream>

namespace sturmkit {

std::vector<Int> ContinuedFraction::digits(size_t n) const {
    std::vector<Int> out;
    out.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        if (i < preperiod.size())
            out.push_back(preperiod[i]);
        else if (!period.empty())
            out.push_back(period[(i - preperiod.size()) % period.size()]);
        else
            break;
    }
    return out;
}

std::string ContinuedFraction::str() const {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < preperiod.size(); ++i) {
        if (i == 1)
            out << "; ";
        else if (i > 1)
            out << ", ";
        out << preperiod[i].get_str();
    }
    if (!period.empty()) {
        out << (preperiod.empty() ? "" : (preperiod.size() == 1 ? "; " : ", "));
        out << "(";
        for (size_t i = 0; i < period.size(); ++i) {
            if (i) out << ", ";
            out << period[i].get_str();
        }
        out << ")";
    }
    out << "]";
    return out.str();
}

std::vector<Int> expand_prefix(const RealValue& x, size_t n) {
    if (n < 1) throw Error("expand_prefix: n >= 1 required");
    std::vector<Int> digits;
    RealValue cur = x;
    for (size_t i = 0; i < n; ++i) {
        Int d = floor(cur);
        digits.push_back(d);
        RealValue rem = cur - Rat(d);
        if (rem.is_zero()) break;
        cur = rem.inverse();
    }
    return digits;
}

namespace {

// complete quotient state (P + sqrt(delta)) / Q for cycle detection
struct SurdState {
    Int p, q;
    bool operator<(const SurdState& o) const {
        int c = cmp(p, o.p);
        if (c != 0) return c < 0;
        return cmp(q, o.q) < 0;
    }
};

Int surd_floor(const Int& p, const Int& q, const Int& delta) {
    // floor((p + sqrt(delta)) / q), sqrt(delta) irrational
    Int f = isqrt(delta);
    Int n = p + f;  // floor(p + sqrt(delta))
    if (q > 0) return floor_div(n, q);
    // q < 0: the fractional part theta = sqrt(delta) - f lies in (0,1), so
    // (n + theta)/q sits strictly between (n+1)/q and n/q
    Int fd = floor_div(n, q);
    if (n % q == 0) fd -= 1;
    return fd;
}

ContinuedFraction canonical_finite(std::vector<Int> digits) {
    // forbid trailing 1: [..., a, 1] -> [..., a+1], except [1] itself
    if (digits.size() >= 2 && digits.back() == 1) {
        digits.pop_back();
        digits.back() += 1;
    }
    return ContinuedFraction{std::move(digits), {}};
}

std::vector<Int> rational_digits(Rat v) {
    std::vector<Int> digits;
    for (;;) {
        Int d = rat_floor(v);
        digits.push_back(d);
        Rat rem = v - Rat(d);
        if (rem == 0) break;
        v = Rat(1) / rem;
    }
    return digits;
}

}  // namespace

ContinuedFraction expand_periodic(const RealValue& x) {
    switch (x.basis()->kind()) {
        case BasisKind::rational:
            return canonical_finite(rational_digits(x.coord(0)));
        case BasisKind::formal:
            if (x.is_rational()) return canonical_finite(rational_digits(x.coord(0)));
            throw FormalBasisUnsupported("expand_periodic: periodicity needs an algebraic input");
        case BasisKind::quadratic:
            break;
    }
    if (x.is_rational()) return canonical_finite(rational_digits(x.coord(0)));

    // x = (P0 + sqrt(delta)) / Q0 with Q0 | delta - P0^2
    MinimalQuadratic mq = minimal_quadratic(x);
    Int delta = mq.delta;
    Int p, q;
    if (sgn(x.coord(1)) > 0) {
        p = -mq.b;
        q = 2 * mq.a;
    } else {
        // x is the conjugate root (-b - sqrt(delta)) / 2a = (b + sqrt(delta)) / -2a... rewritten:
        p = mq.b;
        q = -2 * mq.a;
    }
    // invariant check: q | delta - p^2 holds since delta - b^2 = -4ac

    std::vector<Int> digits;
    std::map<SurdState, size_t> seen;
    for (;;) {
        SurdState state{p, q};
        auto [it, fresh] = seen.emplace(state, digits.size());
        if (!fresh) {
            size_t start = it->second;
            std::vector<Int> pre(digits.begin(), digits.begin() + start);
            std::vector<Int> per(digits.begin() + start, digits.end());
            return ContinuedFraction{std::move(pre), std::move(per)};
        }
        Int a = surd_floor(p, q, delta);
        digits.push_back(a);
        Int p_next = a * q - p;
        Int q_next = (delta - p_next * p_next) / q;
        p = p_next;
        q = q_next;
    }
}

RealValue from_cf(const ContinuedFraction& cf) {
    if (cf.is_finite()) {
        if (cf.preperiod.empty()) throw Error("from_cf: empty expansion");
        Rat v(cf.preperiod.back());
        for (size_t i = cf.preperiod.size() - 1; i-- > 0;) v = Rat(cf.preperiod[i]) + Rat(1) / v;
        return RealValue::make(Basis::rational(), {v});
    }
    // tail y fixed by the period matrix: y = (a y + b) / (c y + d)
    Mat2 pm = convergent_matrix(cf.period);
    // c y^2 + (d - a) y - b = 0
    Rat A = pm.m21, B = pm.m22 - pm.m11, C = -pm.m12;
    if (A == 0) throw Error("from_cf: degenerate period");
    Rat disc = B * B - 4 * A * C;
    // y = (-B + sqrt(disc)) / (2A), positive branch since digits >= 1 force y > 1
    Int num = disc.get_num() * disc.get_den();  // disc = num/den -> sqrt scaled by den
    auto [core, square] = squarefree_decompose(num);
    auto basis = Basis::quadratic(core);
    // sqrt(disc) = square / den * sqrt(core)
    Rat sqrt_coeff = make_rat(square, disc.get_den());
    RealValue y = RealValue::make(
        basis, {-B / (2 * A), sqrt_coeff / (2 * A)});
    if (le(y, RealValue::one(basis))) {
        // wrong branch; take the conjugate root
        y = conjugate(y);
    }
    Mat2 pre = convergent_matrix(cf.preperiod);
    return apply(pre, y);
}

Mat2 convergent_matrix(const std::vector<Int>& digits) {
    Mat2 m;
    for (const Int& a : digits) m = m * Mat2(Rat(a), Rat(1), Rat(1), Rat(0));
    return m;
}

std::vector<RealValue> complete_quotients(const RealValue& x, size_t count) {
    std::vector<RealValue> out;
    RealValue cur = x;
    for (size_t i = 0; i < count; ++i) {
        out.push_back(cur);
        RealValue rem = frac(cur);
        if (rem.is_zero()) break;
        cur = rem.inverse();
    }
    return out;
}

bool same_period_cycle(const ContinuedFraction& a, const ContinuedFraction& b) {
    if (a.is_finite() || b.is_finite()) throw Error("same_period_cycle: periodic inputs required");
    if (a.period.size() != b.period.size()) return false;
    const size_t n = a.period.size();
    for (size_t shift = 0; shift < n; ++shift) {
        bool match = true;
        for (size_t i = 0; i < n && match; ++i) match = a.period[i] == b.period[(i + shift) % n];
        if (match) return true;
    }
    return false;
}

}  // namespace sturmkit
