#include "sturmkit/decide.hpp"

#include "sturmkit/cfrac.hpp"
#include "sturmkit/pell.hpp"

namespace sturmkit {

namespace {

bool is_integer(const RealValue& v) {
    return v.is_rational() && v.coord(0).get_den() == 1;
}

void require_irrational(const RealValue& v, const char* who) {
    if (v.is_rational()) throw RationalInput(std::string(who) + ": irrational input required");
}

bool quadratic_kind(const RealValue& v) {
    return v.basis()->kind() == BasisKind::quadratic;
}

// translation/sign witness for alpha = +-beta mod Z, mapping alpha to beta
Decision conjugacy_decision(const RealValue& alpha, const RealValue& beta) {
    if (!same_basis(alpha.basis(), beta.basis())) return Decision::no("values lie in different fields");
    RealValue diff = beta - alpha;
    if (is_integer(diff)) {
        Decision d = Decision::yes_matrix(Mat2(Rat(1), diff.coord(0), Rat(0), Rat(1)));
        d.sign = 1;
        d.shift = diff.coord(0).get_num();
        return d;
    }
    RealValue s = beta + alpha;
    if (is_integer(s)) {
        Decision d = Decision::yes_matrix(Mat2(Rat(-1), s.coord(0), Rat(0), Rat(1)));
        d.sign = -1;
        d.shift = s.coord(0).get_num();
        return d;
    }
    return Decision::no("alpha != +-beta mod Z");
}

// GL_2(Z) witness mapping alpha to beta via a shared exact complete quotient
Mat2 tail_witness(const RealValue& alpha, const RealValue& beta, const ContinuedFraction& cfa,
                  const ContinuedFraction& cfb) {
    size_t na = cfa.preperiod.size() + 2 * cfa.period.size();
    size_t nb = cfb.preperiod.size() + 2 * cfb.period.size();
    auto qa = complete_quotients(alpha, na + 1);
    auto qb = complete_quotients(beta, nb + 1);
    for (size_t i = 0; i < qa.size(); ++i)
        for (size_t j = 0; j < qb.size(); ++j)
            if (qa[i] == qb[j])
                return convergent_matrix(cfb.digits(j)) * convergent_matrix(cfa.digits(i)).inverse();
    throw Error("tail_witness: no shared complete quotient despite equal cycles");
}

}  // namespace

Decision sturmian_conjugate(const RealValue& alpha, const RealValue& beta) {
    require_irrational(alpha, "sturmian_conjugate");
    require_irrational(beta, "sturmian_conjugate");
    return conjugacy_decision(alpha, beta);
}

Decision sturmian_flow_equivalent(const RealValue& alpha, const RealValue& beta) {
    require_irrational(alpha, "sturmian_flow_equivalent");
    require_irrational(beta, "sturmian_flow_equivalent");
    if (!quadratic_kind(alpha) || !quadratic_kind(beta)) {
        // only the conjugacy fast path decides non-algebraic inputs
        if (same_basis(alpha.basis(), beta.basis())) {
            Decision c = conjugacy_decision(alpha, beta);
            if (c.is_yes()) return c;
        }
        return Decision::unknown(0, "PGL2(Z)-equivalence undecidable for non-algebraic inputs");
    }
    if (!same_basis(alpha.basis(), beta.basis()))
        return Decision::no("values lie in different quadratic fields");
    ContinuedFraction cfa = expand_periodic(alpha);
    ContinuedFraction cfb = expand_periodic(beta);
    if (!same_period_cycle(cfa, cfb)) return Decision::no("CF period cycles differ");
    Mat2 w = tail_witness(alpha, beta, cfa, cfb);
    Decision d = Decision::yes_matrix(w.projective_normal());
    if (apply(w, alpha) != beta) throw Error("sturmian_flow_equivalent: witness failed re-verification");
    return d;
}

Decision sturmian_isogenous(const RealValue& alpha, const RealValue& beta) {
    require_irrational(alpha, "sturmian_isogenous");
    require_irrational(beta, "sturmian_isogenous");
    if (quadratic_kind(alpha) && quadratic_kind(beta)) {
        if (alpha.basis()->d() != beta.basis()->d())
            return Decision::no("different squarefree cores");
        // same field: an affine rational map sends alpha to beta
        const Rat& u = alpha.coord(0);
        const Rat& v = alpha.coord(1);
        const Rat& x = beta.coord(0);
        const Rat& y = beta.coord(1);
        Rat c = y / v;
        Rat e = x - u * c;
        Mat2 w(c, e, Rat(0), Rat(1));
        if (apply(w, alpha) != beta) throw Error("sturmian_isogenous: witness failed re-verification");
        return Decision::yes_matrix(w);
    }
    // formal fast paths: conjugacy and rational affine images
    if (same_basis(alpha.basis(), beta.basis())) {
        Decision c = conjugacy_decision(alpha, beta);
        if (c.is_yes()) return c;
        // beta = c*alpha + e with rational c != 0, e?
        Rat ratio(0);
        bool consistent = true;
        for (size_t i = 1; i < alpha.coords().size(); ++i) {
            const Rat& a = alpha.coord(i);
            const Rat& b = beta.coord(i);
            if (a == 0 && b == 0) continue;
            if (a == 0 || b == 0) {
                consistent = false;
                break;
            }
            Rat r = b / a;
            if (ratio == 0)
                ratio = r;
            else if (ratio != r) {
                consistent = false;
                break;
            }
        }
        if (consistent && ratio != 0) {
            Rat e = beta.coord(0) - alpha.coord(0) * ratio;
            Mat2 w(ratio, e, Rat(0), Rat(1));
            return Decision::yes_matrix(w);
        }
    }
    return Decision::unknown(0, "PGL2(Q)-equivalence undecidable for non-algebraic inputs");
}

Decision sturmian_eventually_flow_equivalent(const RealValue& alpha, const RealValue& beta,
                                             long n_max) {
    require_irrational(alpha, "sturmian_eventually_flow_equivalent");
    require_irrational(beta, "sturmian_eventually_flow_equivalent");
    if (!quadratic_kind(alpha) || !quadratic_kind(beta))
        throw FormalBasisUnsupported("sturmian_eventually_flow_equivalent: quadratic inputs required");
    if (same_basis(alpha.basis(), beta.basis())) {
        Decision c = conjugacy_decision(alpha, beta);
        if (c.is_yes()) return c;
        // necessary condition: alpha = +-beta mod Q
        if (!(beta - alpha).is_rational() && !(beta + alpha).is_rational())
            return Decision::no("alpha != +-beta mod Q");
    } else {
        return Decision::no("alpha != +-beta mod Q (different fields)");
    }
    // quadratic inputs: eventual equivalence forces equivalence at every n,
    // so a single failing multiplier refutes it
    for (long n = 1; n <= n_max; ++n) {
        Decision dn = sturmian_flow_equivalent(alpha * Rat(n), beta * Rat(n));
        if (dn.is_no()) {
            Decision d = Decision::no("n*alpha and n*beta are not PGL2(Z)-equivalent");
            d.failing_n = Int(n);
            return d;
        }
    }
    return Decision::unknown(n_max, "all multipliers equivalent up to the bound; conjecturally NO");
}

Decision self_mult_equivalent(const RealValue& alpha, long m) {
    require_irrational(alpha, "self_mult_equivalent");
    if (m == 1) return Decision::yes_matrix(Mat2::identity());
    if (m < 1) throw Error("self_mult_equivalent: m >= 1 required");
    MinimalQuadratic mq = minimal_quadratic(alpha);
    if (mq.a % m != 0) return Decision::no("m does not divide the leading coefficient");

    Mat2 g = stabilizer_matrix(alpha);
    // order of g modulo 2*m*a: bounds the residue period of the unit sweep
    const Int L = 2 * m * mq.a;
    auto mod_mat = [&](const Mat2& mt) {
        auto red = [&](const Rat& q) {
            if (q.get_den() != 1) throw Error("self_mult_equivalent: non-integral sweep matrix");
            Int r = q.get_num() % L;
            if (r < 0) r += L;
            return r;
        };
        return std::array<Int, 4>{red(mt.m11), red(mt.m12), red(mt.m21), red(mt.m22)};
    };
    long order = 1;
    {
        Mat2 p = g;
        auto id = mod_mat(Mat2::identity());
        while (mod_mat(p) != id) {
            p = p * g;
            ++order;
            if (order > 2000000) throw Error("self_mult_equivalent: unit order runaway");
        }
    }

    for (const PellSolution& cls : pell_fundamental(mq.delta, m)) {
        // sweep the class through one full residue period of the unit action
        Rat t0 = make_rat(cls.x, 2);
        Rat s0(cls.s);
        Mat2 mk = rational_stabilizer_element(alpha, t0, s0);
        for (long k = 0; k < order; ++k) {
            Rat xk = mk.trace();              // 2t
            Rat sk = mk.m21 / Rat(mq.a);
            if (xk.get_den() != 1 || sk.get_den() != 1)
                throw Error("self_mult_equivalent: sweep left the solution lattice");
            {
                Int num = xk.get_num() + sk.get_num() * mq.b;
                if (num % (2 * m) == 0) {
                    const Int& x = xk.get_num();
                    const Int& s = sk.get_num();
                    Mat2 w(make_rat(x - s * mq.b, 2), Rat(-s * mq.c), make_rat(s * mq.a, m),
                           make_rat(x + s * mq.b, 2 * m));
                    if (!w.is_integral()) throw Error("self_mult_equivalent: witness not integral");
                    if (apply(w, alpha) != alpha * Rat(m))
                        throw Error("self_mult_equivalent: witness failed re-verification");
                    Decision d = Decision::yes_matrix(w);
                    d.certificate_text = "pell class x=" + cls.x.get_str() + " s=" + cls.s.get_str() +
                                         " sign=" + std::to_string(cls.sign) + " power=" + std::to_string(k);
                    return d;
                }
            }
            mk = mk * g;
        }
    }
    return Decision::no("no Pell solution class meets the divisibility condition");
}

}  // namespace sturmkit
