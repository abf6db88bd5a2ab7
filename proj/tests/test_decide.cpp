#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "sturmkit/decide.hpp"
#include "sturmkit/pell.hpp"
#include "testutil.hpp"

using namespace sturmkit;
using namespace sturmkit::testutil;

namespace {

RealValue sqrt2() { return surd(q2(), 0, 1, 1, 1); }
RealValue half_phi() { return surd(q5(), 1, 4, 1, 4); }        // phi/2
RealValue half_phim1() { return surd(q5(), -1, 4, 1, 4); }     // (phi-1)/2

}  // namespace

TEST_CASE("sturmian_conjugate") {
    auto a = frac(sqrt2());
    auto d = sturmian_conjugate(a, a);
    CHECK(d.is_yes());
    CHECK(*d.sign == 1);
    CHECK(*d.shift == 0);

    // sqrt2-1 and 2-sqrt2 are complements: sign -, shift 1
    auto d2 = sturmian_conjugate(frac(sqrt2()), RealValue::one(q2()) - frac(sqrt2()));
    CHECK(d2.is_yes());
    CHECK(*d2.sign == -1);
    CHECK(*d2.shift == 1);
    CHECK(apply(*d2.witness, frac(sqrt2())) == RealValue::one(q2()) - frac(sqrt2()));

    CHECK(sturmian_conjugate(half_phi(), half_phim1()).is_no());
}

TEST_CASE("sturmian_flow_equivalent: pinned examples") {
    auto beta = surd(q2(), 3, 1, -1, 1);  // 3 - sqrt2
    auto d = sturmian_flow_equivalent(sqrt2(), beta);
    REQUIRE(d.is_yes());
    CHECK(d.witness->projectively_equal(Mat2::from_ints(2, 1, 1, 1)));
    CHECK(apply(*d.witness, sqrt2()) == beta);

    // halved parameters are no longer equivalent
    auto d2 = sturmian_flow_equivalent(sqrt2() * make_rat(1, 2), beta * make_rat(1, 2));
    CHECK(d2.is_no());

    // phi/2 and (phi-1)/2 share the period cycle (4)
    CHECK(sturmian_flow_equivalent(half_phi(), half_phim1()).is_yes());

    // phi = (1), sqrt2 = (2): different cycles
    auto phi = surd(q5(), 1, 2, 1, 2);
    CHECK(sturmian_flow_equivalent(sqrt2(), surd(q2(), 1, 2, 1, 2)).is_no());
    CHECK(sturmian_flow_equivalent(phi, surd(q5(), 0, 1, 1, 1)).is_no());

    // different fields
    CHECK(sturmian_flow_equivalent(sqrt2(), surd(q3(), 0, 1, 1, 1)).is_no());

    // formal inputs: only the conjugacy fast path decides
    auto fb = Basis::formal({FormalElement::one(), FormalElement::surd(Rat(0), Rat(1), 2)});
    auto fa = RealValue::make(fb, {Rat(0), Rat(1)});
    CHECK(sturmian_flow_equivalent(fa, fa + Rat(2)).is_yes());
    CHECK(sturmian_flow_equivalent(fa, fa * make_rat(1, 2)).is_unknown());
}

TEST_CASE("sturmian_flow_equivalent witnesses re-verify on random pairs") {
    std::mt19937_64 rng(81);
    std::uniform_int_distribution<long> e(-4, 4);
    for (int trial = 0; trial < 40; ++trial) {
        auto a = random_surd(rng, q3(), 6);
        // b = M a for a random unimodular M: must be flow equivalent
        Mat2 m = Mat2::from_ints(1, e(rng), 0, 1) * Mat2::from_ints(1, 0, e(rng), 1) *
                 Mat2::from_ints(1, e(rng), 0, 1);
        RealValue b = apply(m, a);
        auto d = sturmian_flow_equivalent(a, b);
        REQUIRE(d.is_yes());
        CHECK(apply(*d.witness, a) == b);
    }
}

TEST_CASE("sturmian_isogenous") {
    auto beta = (surd(q2(), 3, 1, -1, 1)) * make_rat(1, 7);  // (3-sqrt2)/7
    auto d = sturmian_isogenous(sqrt2(), beta);
    REQUIRE(d.is_yes());
    CHECK(apply(*d.witness, sqrt2()) == beta);

    CHECK(sturmian_isogenous(sqrt2(), surd(q3(), 0, 1, 1, 1)).is_no());

    // rational multiples, any m
    for (long m : {2L, 3L, 5L}) {
        auto dm = sturmian_isogenous(frac(sqrt2()), frac(sqrt2()) * Rat(m));
        REQUIRE(dm.is_yes());
        CHECK(apply(*dm.witness, frac(sqrt2())) == frac(sqrt2()) * Rat(m));
    }

    // formal: rational-affine fast path gives YES, generic pairs stay UNKNOWN
    auto fb = Basis::formal({FormalElement::one(), FormalElement::surd(Rat(0), Rat(1), 2),
                             FormalElement::surd(Rat(0), Rat(1), 3)});
    auto fa = RealValue::make(fb, {Rat(1), Rat(2), Rat(0)});
    CHECK(sturmian_isogenous(fa, fa * make_rat(3, 4) + Rat(5)).is_yes());
    auto fother = RealValue::make(fb, {Rat(0), Rat(0), Rat(1)});
    CHECK(sturmian_isogenous(fa, fother).is_unknown());
}

TEST_CASE("sturmian_eventually_flow_equivalent") {
    // conjugate pair: YES
    auto a = frac(sqrt2());
    CHECK(sturmian_eventually_flow_equivalent(a, a + Rat(1), 5).is_yes());

    // the half-phi pair fails first at n = 9
    auto d = sturmian_eventually_flow_equivalent(half_phi(), half_phim1(), 12);
    REQUIRE(d.is_no());
    CHECK(*d.failing_n == 9);

    // alpha != +-beta mod Q
    CHECK(sturmian_eventually_flow_equivalent(a, frac(a * make_rat(1, 3) + a * a), 4)
              .verdict != Verdict::YES);
    auto unrelated = surd(q2(), 1, 3, 2, 5);
    auto dq = sturmian_eventually_flow_equivalent(sqrt2(), sqrt2() * make_rat(2, 3) + Rat(1), 4);
    CHECK(dq.verdict != Verdict::YES);

    // sqrt2/5 vs (sqrt2+2)/5: eventually refuted at some small n
    auto a5 = sqrt2() * make_rat(1, 5);
    auto b5 = (sqrt2() + Rat(2)) * make_rat(1, 5);
    auto d5 = sturmian_eventually_flow_equivalent(a5, b5, 25);
    REQUIRE(d5.is_no());
    CHECK(*d5.failing_n <= 25);
    // pin the observed first failure as a regression value
    CHECK(*d5.failing_n == 7);
}

TEST_CASE("self_mult_equivalent") {
    CHECK(self_mult_equivalent(sqrt2(), 1).is_yes());

    // 2 does not divide a = 1 for sqrt2
    auto d = self_mult_equivalent(sqrt2(), 2);
    CHECK(d.is_no());

    // phi/2 has (a,b,c) = (4,-2,-1); m = 2 divides a
    auto d2 = self_mult_equivalent(half_phi(), 2);
    if (d2.is_yes()) CHECK(apply(*d2.witness, half_phi()) == half_phi() * Rat(2));
    // either way it must agree with the CF-tail decision
    CHECK(d2.verdict == sturmian_flow_equivalent(half_phi(), half_phi() * Rat(2)).verdict);
}

TEST_CASE("self_mult_equivalent agrees with the CF-tail decision") {
    std::mt19937_64 rng(99);
    std::vector<BasisPtr> bases{q2(), q3(), q5()};
    int done = 0;
    while (done < 30) {
        auto a = random_surd(rng, bases[static_cast<size_t>(done % 3)], 5);
        auto mq = minimal_quadratic(a);
        if (mq.delta > 3000) continue;  // keep Pell sweeps small
        for (long m : {2L, 3L, 5L}) {
            auto lemma_route = self_mult_equivalent(a, m);
            auto cf_route = sturmian_flow_equivalent(a, a * Rat(m));
            CHECK(lemma_route.verdict == cf_route.verdict);
            if (lemma_route.is_yes()) CHECK(apply(*lemma_route.witness, a) == a * Rat(m));
        }
        ++done;
    }
}

TEST_CASE("implication chain: conjugate => flow => isogenous") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        auto a = random_surd(rng, q5(), 5);
        auto b = random_surd(rng, q5(), 5);
        auto conj = sturmian_conjugate(a, b);
        auto flow = sturmian_flow_equivalent(a, b);
        auto iso = sturmian_isogenous(a, b);
        if (conj.is_yes()) CHECK(flow.is_yes());
        if (flow.is_yes()) CHECK(iso.is_yes());
    }
}

TEST_CASE("flow and isogeny are equivalence relations on a pool of surds") {
    std::mt19937_64 rng(55);
    std::vector<RealValue> pool;
    for (int i = 0; i < 10; ++i) pool.push_back(random_surd(rng, q2(), 4));
    for (int i = 0; i < 10; ++i) pool.push_back(random_surd(rng, q3(), 4));
    const size_t n = pool.size();
    std::vector<std::vector<bool>> flow(n, std::vector<bool>(n));
    std::vector<std::vector<bool>> iso(n, std::vector<bool>(n));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            flow[i][j] = sturmian_flow_equivalent(pool[i], pool[j]).is_yes();
            iso[i][j] = sturmian_isogenous(pool[i], pool[j]).is_yes();
        }
        CHECK(flow[i][i]);
        CHECK(iso[i][i]);
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            CHECK(flow[i][j] == flow[j][i]);
            CHECK(iso[i][j] == iso[j][i]);
            for (size_t k = 0; k < n; ++k) {
                if (flow[i][j] && flow[j][k]) CHECK(flow[i][k]);
                if (iso[i][j] && iso[j][k]) CHECK(iso[i][k]);
            }
        }
}
