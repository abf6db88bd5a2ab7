#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>

#include "sturmkit/iet.hpp"
#include "sturmkit/sturmian.hpp"
#include "testutil.hpp"

using namespace sturmkit;
using namespace sturmkit::testutil;

namespace {

RealValue rv(const BasisPtr& b, long n, long d = 1) { return RealValue::from_rat(b, make_rat(n, d)); }

// rotation-by-alpha presentation: swap with lengths (1-alpha, alpha)
IetSpec rotation_iet(const RealValue& alpha) {
    return new_iet({2, 1}, {RealValue::one(alpha.basis()) - alpha, alpha});
}

IetSpec golden_iet() {
    // lengths (2-phi, phi-1)
    return new_iet({2, 1}, {surd(q5(), 3, 2, -1, 2), surd(q5(), -1, 2, 1, 2)});
}

// random d-IET with quadratic lengths
IetSpec random_quadratic_iet(std::mt19937_64& rng, const BasisPtr& b, int d) {
    for (;;) {
        std::vector<int> perm(static_cast<size_t>(d));
        std::iota(perm.begin(), perm.end(), 1);
        std::shuffle(perm.begin(), perm.end(), rng);
        // sigma(d) = d ties immediately; move d elsewhere
        if (perm.back() == d) std::swap(perm.back(), perm.front());
        bool ok = true;
        std::vector<RealValue> lengths;
        for (int i = 0; i < d; ++i) {
            auto len = frac(random_surd(rng, b));
            if (len.is_zero() || len.is_rational()) {
                ok = false;
                break;
            }
            lengths.push_back(len);
        }
        if (!ok) continue;
        auto t = new_iet(perm, lengths);
        if (!t.irreducible) continue;
        return t;
    }
}

}  // namespace

TEST_CASE("new_iet validation and normalization") {
    auto b = Basis::rational();
    auto t = new_iet({2, 1}, {rv(b, 3, 10), rv(b, 7, 10)});
    CHECK(t.irreducible);
    CHECK(t.scale == RealValue::one(b));

    auto scaled = new_iet({2, 1}, {rv(b, 3), rv(b, 7)});
    CHECK(scaled.lengths == t.lengths);
    CHECK(scaled.scale == rv(b, 10));

    auto idperm = new_iet({1, 2, 3}, {rv(b, 1, 3), rv(b, 1, 3), rv(b, 1, 3)});
    CHECK(!idperm.irreducible);

    auto d4 = new_iet({4, 3, 2, 1}, {rv(b, 1, 4), rv(b, 1, 4), rv(b, 1, 4), rv(b, 1, 4)});
    CHECK(d4.irreducible);

    CHECK_THROWS_AS(new_iet({1, 1}, {rv(b, 1, 2), rv(b, 1, 2)}), NotBijection);
    CHECK_THROWS_AS(new_iet({2, 1}, {rv(b, 0), rv(b, 1)}), NonPositiveLength);
}

TEST_CASE("evaluate") {
    auto b = Basis::rational();
    auto t = new_iet({2, 1}, {rv(b, 3, 10), rv(b, 7, 10)});
    CHECK(evaluate(t, rv(b, 1, 10)) == rv(b, 8, 10));
    // right endpoint of the last interval
    CHECK(evaluate(t, rv(b, 1)) == rv(b, 7, 10));
    CHECK_THROWS_AS(evaluate(t, rv(b, 0)), OutOfDomain);
    CHECK_THROWS_AS(evaluate(t, rv(b, 2)), OutOfDomain);

    auto id3 = new_iet({1, 2, 3}, {rv(b, 1, 3), rv(b, 1, 3), rv(b, 1, 3)});
    CHECK(evaluate(id3, rv(b, 5, 7)) == rv(b, 5, 7));

    // inverse undoes evaluate
    auto inv = inverse(t);
    CHECK(evaluate(inv, evaluate(t, rv(b, 9, 20))) == rv(b, 9, 20));
}

TEST_CASE("orbit_word") {
    auto b = Basis::rational();
    auto id3 = new_iet({1, 2, 3}, {rv(b, 1, 3), rv(b, 1, 3), rv(b, 1, 3)});
    CHECK(orbit_word(id3, rv(b, 1, 2), 4).symbols == std::vector<int>{1, 1, 1, 1});

    // rotation coding cross-oracle: letter 0 iff the point lies in (0, 1-alpha]
    auto alpha = surd(q5(), -1, 2, 1, 2);  // phi - 1
    auto t = rotation_iet(alpha);
    auto x = RealValue::from_rat(q5(), make_rat(1, 97));
    auto w = orbit_word(t, x, 24);
    RealValue cur = x;
    RealValue split = RealValue::one(q5()) - alpha;
    for (size_t i = 0; i < w.size(); ++i) {
        CHECK(w.symbols[i] == (le(cur, split) ? 0 : 1));
        cur = evaluate(t, cur);
    }
    CHECK(orbit_word(t, x, 1).size() == 1);
}

TEST_CASE("rotation coding equals the Sturmian window near the origin") {
    auto alpha = surd(q5(), -1, 2, 1, 2);  // phi - 1
    auto t = rotation_iet(alpha);
    SturmianParams p(alpha);
    auto x = RealValue::from_rat(q5(), make_rat(1, 1000000));
    CHECK(orbit_word(t, x, 5).symbols == sturmian_window(p, 0, 5).symbols);
}

TEST_CASE("keane_check") {
    auto silver = new_iet({2, 1}, {surd(q2(), -1, 1, 1, 1), surd(q2(), 2, 1, -1, 1)});
    CHECK(keane_check(silver, 10).is_yes());

    auto b = Basis::rational();
    auto rational_rot = new_iet({2, 1}, {rv(b, 1, 3), rv(b, 2, 3)});
    auto d = keane_check(rational_rot, 10);
    CHECK(d.is_no());
    CHECK(*d.failing_n <= 3);

    auto reducible = new_iet({1, 2, 3}, {rv(b, 1, 3), rv(b, 1, 3), rv(b, 1, 3)});
    CHECK(keane_check(reducible, 10).is_no());

    // quadratic d=3: rational relations persist, no collision: honest UNKNOWN
    auto t3 = new_iet({3, 1, 2}, {surd(q2(), -1, 1, 1, 1), surd(q2(), 1, 1, -1, 2),
                                  surd(q2(), 1, 1, -1, 2)});
    CHECK(keane_check(t3, 12).is_unknown());

    // rank-4 formal basis: independent lengths give YES for d=4
    auto fb = Basis::formal({FormalElement::one(), FormalElement::surd(Rat(0), Rat(1), 2),
                             FormalElement::surd(Rat(0), Rat(1), 3),
                             FormalElement::surd(Rat(0), Rat(1), 5)});
    auto l1 = RealValue::make(fb, {make_rat(-13, 10), Rat(1), Rat(0), Rat(0)});  // sqrt2-1.3
    auto l2 = RealValue::make(fb, {make_rat(-16, 10), Rat(0), Rat(1), Rat(0)});  // sqrt3-1.6
    auto l3 = RealValue::make(fb, {make_rat(-21, 10), Rat(0), Rat(0), Rat(1)});  // sqrt5-2.1
    auto rest = RealValue::one(fb) - l1 - l2 - l3;
    auto t4 = new_iet({4, 3, 2, 1}, {l1, l2, l3, rest});
    CHECK(keane_check(t4, 10).is_yes());
}

TEST_CASE("power_discontinuities") {
    auto silver = new_iet({2, 1}, {surd(q2(), -1, 1, 1, 1), surd(q2(), 2, 1, -1, 1)});
    auto p1 = power_discontinuities(silver, 1);
    CHECK(p1.size() == 2);
    CHECK(p1.back() == RealValue::one(q2()));

    CHECK(power_discontinuities(silver, 2).size() == 3);
    CHECK(power_discontinuities(silver, 5).size() == 6);
    CHECK(power_discontinuities(silver, -1).size() == 2);

    // counts match the cylinder count of length-|m| words
    for (long m = 1; m <= 6; ++m)
        CHECK(power_discontinuities(silver, m).size() ==
              iet_factors(silver, static_cast<size_t>(m)).size());
}

TEST_CASE("rauzy_step on the golden 2-IET") {
    auto t = golden_iet();  // lengths (2-phi, phi-1)
    auto s1 = rauzy_step(t);
    // lambda_2 = phi-1 > 2-phi = lambda_1: the d-side wins
    CHECK(s1.type == RauzyType::TOP);
    // projective lengths swap: (phi-1, 2-phi)
    CHECK(s1.next.lengths[0] == surd(q5(), -1, 2, 1, 2));
    CHECK(s1.next.lengths[1] == surd(q5(), 3, 2, -1, 2));
    CHECK(s1.next.perm == std::vector<int>{2, 1});
    // total length before renormalization: 1 - min
    CHECK(s1.next.scale == RealValue::one(q5()) - surd(q5(), 3, 2, -1, 2));

    auto s2 = rauzy_step(s1.next);
    CHECK(s2.type == RauzyType::BOTTOM);
    CHECK(s2.next.lengths == t.lengths);

    auto b = Basis::rational();
    auto tie = new_iet({2, 1}, {rv(b, 1, 2), rv(b, 1, 2)});
    CHECK_THROWS_AS(rauzy_step(tie), KeaneViolation);
}

TEST_CASE("rauzy_path") {
    auto path = rauzy_path(golden_iet(), 10);
    REQUIRE(path.period.has_value());
    CHECK(path.period->first == 0);
    CHECK(path.period->second == 2);

    auto b = Basis::rational();
    auto rational_rot = new_iet({2, 1}, {rv(b, 1, 3), rv(b, 2, 3)});
    auto p2 = rauzy_path(rational_rot, 10);
    CHECK(p2.keane_violation);
    CHECK(p2.types.size() <= 3);

    // quadratic parameters have eventually periodic paths
    auto silver = new_iet({2, 1}, {surd(q2(), -1, 1, 1, 1), surd(q2(), 2, 1, -1, 1)});
    auto p3 = rauzy_path(silver, 30);
    CHECK(p3.period.has_value());
}

TEST_CASE("first-return oracle for rauzy_step") {
    std::mt19937_64 rng(2025);
    std::vector<BasisPtr> bases{q2(), q3(), q5()};
    int done = 0;
    while (done < 12) {
        int d = 2 + done % 3;
        auto t = random_quadratic_iet(rng, bases[static_cast<size_t>(done % 3)], d);
        RauzyStep step;
        try {
            step = rauzy_step(t);
        } catch (const KeaneViolation&) {
            continue;
        }
        // induced interval (0, L] in normalized coordinates, L = 1 - min(...)
        RealValue len = step.next.scale / t.scale;
        for (int i = 1; i <= 25; ++i) {
            RealValue x = len * make_rat(i, 25);
            RealValue y = evaluate(t, x);
            int guard = 0;
            while (gt(y, len)) {
                y = evaluate(t, y);
                REQUIRE(++guard < 1000);
            }
            RealValue via_step = evaluate(step.next, x / len) * len;
            CHECK(y == via_step);
        }
        ++done;
    }
}

TEST_CASE("cylinder intervals and induced maps") {
    auto t = golden_iet();
    // single letters cover the base intervals
    auto c0 = cylinder_interval(t, word_from_string("0"));
    REQUIRE(c0.has_value());
    CHECK(c0->lo == RealValue::zero(q5()));
    CHECK(c0->hi == t.lengths[0]);

    // "00" is not a factor of the golden rotation coding
    CHECK(!cylinder_interval(t, word_from_string("00")).has_value());
    CHECK_THROWS_AS(induced_on_cylinder(t, word_from_string("00"), 1000), EmptyCylinder);

    // induced on cylinder "1" is again a 2-IET with the same SAF invariant
    auto ind = induced_on_cylinder(t, word_from_string("1"), 10000);
    CHECK(ind.d == 2);
    CHECK(saf(ind) == saf(t));

    // the empty word induces T itself
    Word empty;
    CHECK(induced_on_cylinder(t, empty, 10).same_projective_state(t));

    // induced map is the genuine first-return map (point oracle)
    auto c1 = cylinder_interval(t, word_from_string("1"));
    REQUIRE(c1.has_value());
    RealValue width = c1->hi - c1->lo;
    for (int i = 1; i <= 20; ++i) {
        RealValue x = c1->lo + width * make_rat(i, 20);
        RealValue y = evaluate(t, x);
        int guard = 0;
        while (le(y, c1->lo) || gt(y, c1->hi)) {
            y = evaluate(t, y);
            REQUIRE(++guard < 1000);
        }
        RealValue via_ind = evaluate(ind, (x - c1->lo) / width) * width + c1->lo;
        CHECK(y == via_ind);
    }
}

TEST_CASE("minimal_model") {
    auto b = Basis::rational();
    // merge {1,2} because sigma(2) = sigma(1) + 1
    auto t4 = new_iet({3, 4, 2, 1}, {rv(b, 1, 4), rv(b, 1, 8), rv(b, 1, 8), rv(b, 1, 2)});
    auto m = minimal_model(t4);
    CHECK(m.d == 3);
    CHECK(m.perm == std::vector<int>{3, 2, 1});
    CHECK(m.lengths[0] == rv(b, 3, 8));

    // irreducible 2-IET swap is already minimal
    auto g = golden_iet();
    CHECK(minimal_model(g).same_projective_state(g));

    // cyclic shift collapses to the 2-letter rotation presentation
    auto cyc = new_iet({2, 3, 1}, {rv(b, 1, 5), rv(b, 3, 10), rv(b, 1, 2)});
    auto mc = minimal_model(cyc);
    CHECK(mc.d == 2);
    CHECK(mc.perm == std::vector<int>{2, 1});
    CHECK(mc.lengths[1] == rv(b, 1, 2));  // rotation amount = T(1)

    // idempotent
    CHECK(minimal_model(mc).same_projective_state(mc));
    CHECK(minimal_model(m).same_projective_state(m));
}

TEST_CASE("saf") {
    auto b = Basis::rational();
    auto rational_t = new_iet({2, 1}, {rv(b, 1, 3), rv(b, 2, 3)});
    CHECK(saf(rational_t).is_zero());

    auto silver = new_iet({2, 1}, {surd(q2(), -1, 1, 1, 1), surd(q2(), 2, 1, -1, 1)});
    CHECK(saf(silver).quadratic_coeff() == -2);

    // invariance under induction and merging, exactly
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        auto t = random_quadratic_iet(rng, q3(), 4);
        CHECK(saf(minimal_model(t)) == saf(t));
        try {
            auto s = rauzy_step(t);
            CHECK(saf(s.next) == saf(t));
        } catch (const KeaneViolation&) {
        }
    }
}

TEST_CASE("rational_invariants") {
    auto g = golden_iet();
    auto inv1 = rational_invariants(g);
    auto inv2 = rational_invariants(rauzy_step(g).next);
    CHECK(inv1 == inv2);

    // 3x rescaling changes nothing
    auto g3 = new_iet(g.perm, {g.lengths[0] * Rat(3), g.lengths[1] * Rat(3)});
    CHECK(rational_invariants(g3) == inv1);

    auto b = Basis::rational();
    auto rational_rot = new_iet({2, 1}, {rv(b, 1, 3), rv(b, 2, 3)});
    CHECK_THROWS_AS(rational_invariants(rational_rot), KeaneViolation);
}

TEST_CASE("complexity of codings") {
    auto silver = new_iet({2, 1}, {surd(q2(), -1, 1, 1, 1), surd(q2(), 2, 1, -1, 1)});
    for (size_t n = 1; n <= 15; ++n) {
        CHECK(factor_count(silver, n) == n + 1);
        CHECK(iet_factors(silver, n).size() == n + 1);
    }
}

TEST_CASE("ies_conjugate") {
    auto g = golden_iet();
    CHECK(ies_conjugate(g, g, 10).is_yes());

    auto silver = new_iet({2, 1}, {surd(q2(), -1, 1, 1, 1), surd(q2(), 2, 1, -1, 1)});
    CHECK(ies_conjugate(g, silver, 10).is_no());

    // conjugacy after order reversal: reflected system
    auto refl = reflect(silver);
    CHECK(ies_conjugate(silver, refl, 20).is_yes());

    auto b = Basis::rational();
    auto one_letter = new_iet({1}, {rv(b, 1)});
    CHECK(ies_conjugate(one_letter, one_letter, 5).is_yes());

    // formal inputs: no periodicity certificates, so honest UNKNOWN
    auto fb = Basis::formal({FormalElement::one(), FormalElement::surd(Rat(0), Rat(1), 2)});
    auto fa = RealValue::make(fb, {Rat(-1), Rat(1)});
    auto f1 = new_iet({2, 1}, {RealValue::one(fb) - fa, fa});
    CHECK(ies_conjugate(f1, f1, 8).is_unknown());
}

TEST_CASE("ies_flow_equivalent") {
    // Sturmian 2-IETs for sqrt2 and 3-sqrt2 (parameters reduced mod 1)
    auto t1 = rotation_iet(surd(q2(), -1, 1, 1, 1));  // sqrt2 - 1
    auto t2 = rotation_iet(surd(q2(), 2, 1, -1, 1));  // 2 - sqrt2
    auto d = ies_flow_equivalent(t1, t2, 5);
    CHECK(d.is_yes());

    // T vs T via trivial cylinders
    CHECK(ies_flow_equivalent(t1, t1, 2).is_yes());

    // different quadratic fields: span obstruction
    auto t3 = rotation_iet(surd(q3(), -1, 1, 1, 1));  // sqrt3 - 1
    auto d2 = ies_flow_equivalent(t1, t3, 3);
    CHECK(d2.is_no());

    auto b = Basis::rational();
    auto rational_rot = new_iet({2, 1}, {rv(b, 1, 3), rv(b, 2, 3)});
    CHECK_THROWS_AS(ies_flow_equivalent(t1, rational_rot, 3), KeaneViolation);
}
