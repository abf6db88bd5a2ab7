#include "sturmkit/pell.hpp"

#include <algorithm>

#include "sturmkit/cfrac.hpp"

namespace sturmkit {

namespace {

void check_discriminant(const Int& delta) {
    if (delta <= 0 || is_perfect_square(delta)) throw Error("pell: delta must be a positive non-square");
    Int r = delta % 4;
    if (r != 0 && r != 1) throw Error("pell: delta must be 0 or 1 mod 4");
}

// Quadratic-order element (x + s*sqrt(delta)) / 2 with exact arithmetic.
struct OrderElem {
    Int x, s;

    // norm 4*N((x + s sqrt d)/2) = x^2 - s^2 d, kept implicit
    OrderElem mul(const OrderElem& o, const Int& delta) const {
        // ((x1 + s1 r)(x2 + s2 r)) / 4 = ((x1 x2 + s1 s2 d) + (x1 s2 + x2 s1) r) / 4
        return {(x * o.x + s * o.s * delta) / 2, (x * o.s + o.x * s) / 2};
    }
    bool positive(const Int& delta) const {
        // sign of x + s*sqrt(delta)
        if (x >= 0 && s >= 0) return !(x == 0 && s == 0);
        if (x <= 0 && s <= 0) return false;
        Int lhs = x * x, rhs = s * s * delta;
        return x > 0 ? lhs > rhs : lhs < rhs;
    }
    // compare (x + s sqrt)/2 against (ox + os sqrt)/2
    bool less(const OrderElem& o, const Int& delta) const {
        OrderElem diff{o.x - x, o.s - s};
        return diff.positive(delta);
    }
};

// x^2 = s^2 delta + 4 sign m solvable in x >= 0?
bool solve_x(const Int& s, const Int& delta, const Int& four_sign_m, Int& x_out) {
    Int rhs = s * s * delta + four_sign_m;
    if (rhs < 0) return false;
    if (!is_perfect_square(rhs)) return false;
    x_out = isqrt(rhs);
    return true;
}

}  // namespace

PellSolution pell_unit(const Int& delta) {
    check_discriminant(delta);
    // expand the principal root of discriminant delta: (d mod 2 + sqrt(delta)) / 2
    Int b0 = delta % 2;
    // root of x^2 - b0 x + (b0^2 - delta)/4
    auto [core, square] = squarefree_decompose(delta);
    auto basis = Basis::quadratic(core);
    RealValue root = RealValue::make(
        basis, {make_rat(b0, 2), make_rat(square, 2)});  // sqrt(delta) = square * sqrt(core)
    Mat2 f = primitive_stabilizer(root);
    // f = t I + s K for K = (-b/2 -c / a b/2) with (a,b,c) = (1, -b0, (b0^2-delta)/4)
    Rat t2 = f.trace();               // 2t
    Rat s = f.m21;                    // s * a, a = 1
    Int x = t2.get_num();
    Int sv = s.get_num();
    if (t2.get_den() != 1 || s.get_den() != 1) throw Error("pell_unit: non-integral stabilizer");
    if (x < 0) {
        x = -x;
        sv = -sv;
    }
    if (sv < 0) sv = -sv;  // both (x, s) and (x, -s) generate; pick s > 0
    PellSolution sol{x, sv, 0};
    Int norm4 = x * x - sv * sv * delta;
    if (norm4 == 4)
        sol.sign = 1;
    else if (norm4 == -4)
        sol.sign = -1;
    else
        throw Error("pell_unit: stabilizer does not solve the +-4 equation");
    return sol;
}

PellSolution pell_plus4_unit(const Int& delta) {
    PellSolution u = pell_unit(delta);
    if (u.sign == 1) return u;
    // square the unit: ((x + s r)/2)^2
    OrderElem sq = OrderElem{u.x, u.s}.mul({u.x, u.s}, delta);
    return {sq.x, sq.s, 1};
}

std::vector<PellSolution> pell_fundamental(const Int& delta, const Int& m) {
    check_discriminant(delta);
    if (m <= 0) throw Error("pell_fundamental: m must be positive");
    PellSolution unit = pell_plus4_unit(delta);
    OrderElem eps{unit.x, unit.s};

    // every class has a representative below the unit box:
    // s <= ceil(sqrt(4m (u+1) / delta)) with u the unit's x-component
    Int bound_num = 4 * m * (unit.x + 1);
    Int s_max = isqrt(bound_num / delta) + 1;

    auto canonicalize = [&](OrderElem e) -> OrderElem {
        // wlog positive
        if (!e.positive(delta)) e = {-e.x, -e.s};
        // scale by eps^+-1 until 1 <= e < eps  (exact comparisons)
        OrderElem one{2, 0};
        OrderElem inv = [&] {
            // eps^-1 = (x - s r)/2 for norm +4 (conjugate / norm)
            return OrderElem{eps.x, -eps.s};
        }();
        int guard = 0;
        while (e.less(one, delta)) {
            e = e.mul(eps, delta);
            if (++guard > 100000) throw Error("pell canonicalize diverged");
        }
        while (!e.less(eps, delta)) {
            e = e.mul(inv, delta);
            if (++guard > 100000) throw Error("pell canonicalize diverged");
        }
        return e;
    };

    std::vector<PellSolution> reps;
    auto push_unique = [&](const OrderElem& e, int sign) {
        PellSolution sol{e.x, e.s, sign};
        if (std::find(reps.begin(), reps.end(), sol) == reps.end()) reps.push_back(sol);
    };

    for (int sign : {1, -1}) {
        Int four_sign_m = 4 * sign * m;
        for (Int s = -s_max; s <= s_max; ++s) {
            Int x;
            if (!solve_x(s, delta, four_sign_m, x)) continue;
            push_unique(canonicalize({x, s}), sign);
            if (x != 0) push_unique(canonicalize({-x, s}), sign);
        }
    }
    std::sort(reps.begin(), reps.end(), [](const PellSolution& a, const PellSolution& b) {
        if (a.sign != b.sign) return a.sign > b.sign;
        if (a.s != b.s) return a.s < b.s;
        return a.x < b.x;
    });
    return reps;
}

Mat2 rational_stabilizer_element(const RealValue& x, const Rat& t, const Rat& s) {
    if (t == 0 && s == 0) throw Error("rational_stabilizer_element: (t,s) != (0,0) required");
    MinimalQuadratic mq = minimal_quadratic(x);
    Rat hb = make_rat(mq.b, 2);
    Mat2 m(t - s * hb, -s * Rat(mq.c), s * Rat(mq.a), t + s * hb);
    // det = t^2 - s^2 delta/4 cannot vanish for rational t,s since delta is
    // not a square; the constructor guards anyway
    if (m.det() == 0) throw SingularResult();
    return m;
}

Mat2 primitive_stabilizer(const RealValue& x) {
    ContinuedFraction cf = expand_periodic(x);
    if (cf.is_finite()) throw RationalInput("primitive_stabilizer: quadratic irrational required");
    Mat2 pre = convergent_matrix(cf.preperiod);
    Mat2 per = convergent_matrix(cf.period);
    Mat2 f = pre * per * pre.inverse();
    if (!f.is_integral()) throw Error("primitive_stabilizer: conjugation left the integers");
    if (f.trace() < 0) f = -f;
    return f;
}

Mat2 stabilizer_matrix(const RealValue& x) {
    MinimalQuadratic mq = minimal_quadratic(x);
    PellSolution u = pell_plus4_unit(mq.delta);
    // F = ((x0 - s0 b)/2, -s0 c ; s0 a, (x0 + s0 b)/2)
    Rat x0(u.x), s0(u.s);
    Mat2 f((x0 - s0 * Rat(mq.b)) / 2, -s0 * Rat(mq.c), s0 * Rat(mq.a), (x0 + s0 * Rat(mq.b)) / 2);
    if (!f.is_integral()) throw Error("stabilizer_matrix: half-integer combination failed");
    return f;
}

}  // namespace sturmkit
