#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "sturmkit/denjoy.hpp"
#include "testutil.hpp"

using namespace sturmkit;
using namespace sturmkit::testutil;

namespace {

RealValue sqrt2m1() { return surd(q2(), -1, 1, 1, 1); }  // sqrt2 - 1

DenjoyParams sturmian_params(const RealValue& rho) {
    return normalize(rho, {RealValue::zero(rho.basis())}).params;
}

DenjoyParams random_params(std::mt19937_64& rng, const BasisPtr& b, int extra_reps) {
    auto rho = random_surd_01(rng, b);
    std::vector<RealValue> raw{RealValue::zero(b)};
    std::uniform_int_distribution<long> num(-7, 7);
    std::uniform_int_distribution<long> den(1, 7);
    for (int i = 0; i < extra_reps; ++i)
        raw.push_back(RealValue::from_rat(b, make_rat(num(rng), den(rng))));
    return normalize(rho, raw).params;
}

}  // namespace

TEST_CASE("normalize") {
    auto rho = sqrt2m1();
    auto n1 = normalize(rho, {RealValue::zero(q2()), rho});
    CHECK(n1.params.reps.size() == 1);  // sqrt2-1 lies in the orbit of 0
    CHECK(n1.params.reps[0] == RealValue::zero(q2()));
    CHECK(!n1.origin_added);

    auto half = RealValue::from_rat(q2(), make_rat(1, 2));
    auto n2 = normalize(rho, {RealValue::zero(q2()), half});
    CHECK(n2.params.reps.size() == 2);
    CHECK(n2.params.reps[1] == half);

    auto n3 = normalize(rho, {});
    CHECK(n3.params.reps.size() == 1);
    CHECK(n3.origin_added);

    // rho is reduced mod 1
    auto n4 = normalize(surd(q2(), 0, 1, 1, 1), {});  // sqrt2 -> sqrt2 - 1
    CHECK(n4.params.rho == rho);
}

TEST_CASE("orbit arithmetic") {
    auto rho = sqrt2m1();
    auto one = RealValue::one(q2());
    CHECK(same_orbit(rho, RealValue::zero(q2()), rho));
    CHECK(same_orbit(rho, one, rho * Rat(3) + Rat(5)));
    CHECK(!same_orbit(rho, RealValue::zero(q2()), RealValue::from_rat(q2(), make_rat(1, 2))));
    CHECK(orbit_canonical(rho, rho * Rat(7) - Rat(4)) == RealValue::zero(q2()));
}

TEST_CASE("state image and infinitesimal rank") {
    auto p = sturmian_params(sqrt2m1());
    auto s = denjoy_state_image(p);
    CHECK(s.module == zmodule_of(q2(), {RealValue::one(q2()), surd(q2(), 0, 1, 1, 1)}));
    CHECK(s.coinvariant_rank == 2);
    CHECK(s.infinitesimal_rank == 0);

    // adding the rational rep 1/2 creates one relation: 2*(1/2) - 1 = 0
    auto p2 = normalize(sqrt2m1(), {RealValue::from_rat(q2(), make_rat(1, 2))}).params;
    auto s2 = denjoy_state_image(p2);
    CHECK(s2.module == zmodule_of(q2(), {RealValue::from_rat(q2(), make_rat(1, 2)),
                                         surd(q2(), 0, 1, 1, 1)}));
    CHECK(s2.coinvariant_rank == 3);
    CHECK(s2.infinitesimal_rank == 1);
}

TEST_CASE("power_params") {
    auto p = sturmian_params(sqrt2m1());
    auto p1 = power_params(p, 1);
    CHECK(p1.rho == p.rho);
    CHECK(p1.reps == p.reps);

    auto p2 = power_params(p, 2);
    CHECK(p2.rho == surd(q2(), -2, 1, 2, 1));  // 2*sqrt2 - 2, already in (0,1)
    REQUIRE(p2.reps.size() == 2);
    CHECK(p2.reps[0] == RealValue::zero(q2()));
    CHECK(orbit_canonical(p2.rho, sqrt2m1()) == p2.reps[1]);

    // time reversal: rotation 1 - rho, cut orbits unchanged
    auto pm1 = power_params(p, -1);
    CHECK(pm1.rho == RealValue::one(q2()) - p.rho);
    CHECK(pm1.reps == p.reps);
}

TEST_CASE("power composition law") {
    std::mt19937_64 rng(40);
    for (int trial = 0; trial < 6; ++trial) {
        auto p = random_params(rng, trial % 2 ? q2() : q5(), trial % 3);
        for (long m : {-1L, 2L, 3L}) {
            for (long n : {-1L, 2L, 3L}) {
                auto a = power_params(power_params(p, m), n);
                auto b = power_params(p, m * n);
                CHECK(a.rho == b.rho);
                CHECK(a.reps == b.reps);
            }
        }
    }
}

TEST_CASE("two_ai_infinitesimal") {
    auto rho = sqrt2m1();
    auto third = RealValue::from_rat(q2(), make_rat(1, 3));
    auto big = normalize(rho, {third}).params;
    auto small = normalize(rho, {}).params;
    CHECK(two_ai_infinitesimal(big, small));
    CHECK(two_ai_infinitesimal(big, big));

    // independent irrational rep on a rank-3 formal basis obstructs
    auto fb = Basis::formal({FormalElement::one(),
                             FormalElement::surd(make_rat(-1, 2), make_rat(1, 2), 5),
                             FormalElement::surd(Rat(0), make_rat(1, 4), 2)});
    auto frho = RealValue::make(fb, {Rat(0), Rat(1), Rat(0)});  // phi - 1
    auto quarter_sqrt2 = RealValue::make(fb, {Rat(0), Rat(0), Rat(1)});
    auto fbig = normalize(frho, {quarter_sqrt2}).params;
    auto fsmall = normalize(frho, {}).params;
    CHECK(!two_ai_infinitesimal(fbig, fsmall));

    CHECK_THROWS_AS(two_ai_infinitesimal(small, big), NotAFactor);
}

TEST_CASE("two_ai_equivalent") {
    auto p = sturmian_params(sqrt2m1());
    auto d = two_ai_equivalent(p, p);
    CHECK(d.is_yes());
    CHECK(*d.sign == 1);

    auto flipped = sturmian_params(RealValue::one(q2()) - sqrt2m1());
    auto d2 = two_ai_equivalent(p, flipped);
    CHECK(d2.is_yes());
    CHECK(*d2.sign == -1);

    // rational reps never obstruct: spans absorb 1/2
    auto with_half = normalize(sqrt2m1(), {RealValue::from_rat(q2(), make_rat(1, 2))}).params;
    CHECK(two_ai_equivalent(with_half, p).is_yes());

    auto other = sturmian_params(frac(sqrt2m1() * make_rat(1, 3)));
    auto d3 = two_ai_equivalent(p, other);
    CHECK(d3.is_no());
}

TEST_CASE("two_ai_equivalent is reflexive and symmetric on random parameters") {
    std::mt19937_64 rng(41);
    std::vector<DenjoyParams> pool;
    for (int i = 0; i < 20; ++i) pool.push_back(random_params(rng, q3(), i % 3));
    for (const auto& p : pool) CHECK(two_ai_equivalent(p, p).is_yes());
    for (size_t i = 0; i < pool.size(); ++i)
        for (size_t j = i + 1; j < pool.size(); ++j)
            CHECK(two_ai_equivalent(pool[i], pool[j]).verdict ==
                  two_ai_equivalent(pool[j], pool[i]).verdict);
}

TEST_CASE("two_ai_equivalent is transitive along YES chains") {
    auto rho = sqrt2m1();
    auto a = sturmian_params(rho);
    auto b = normalize(rho, {RealValue::from_rat(q2(), make_rat(1, 3))}).params;
    auto c = sturmian_params(RealValue::one(q2()) - rho);
    REQUIRE(two_ai_equivalent(a, b).is_yes());
    REQUIRE(two_ai_equivalent(b, c).is_yes());
    CHECK(two_ai_equivalent(a, c).is_yes());
}

TEST_CASE("verify_isogeny_certificate") {
    auto p = sturmian_params(sqrt2m1());
    CHECK(verify_isogeny_certificate(p, p, Mat2::identity()));

    // Sturmian pair (alpha, m*alpha): diag(m, 1)
    auto pm = sturmian_params(frac(sqrt2m1() * Rat(3)));
    CHECK(verify_isogeny_certificate(p, pm, Mat2::diag(Rat(3), Rat(1))));

    // different quadratic fields can never be certified
    auto q = sturmian_params(surd(q3(), -1, 1, 1, 1));
    CHECK(!verify_isogeny_certificate(p, q, Mat2::identity()));

    // wrong rotation image fails
    CHECK(!verify_isogeny_certificate(p, pm, Mat2::diag(Rat(5), Rat(1))));
}

TEST_CASE("denjoy_flow_equivalent") {
    // Sturmian pair sqrt2 ~ 3-sqrt2 (reduced mod 1 by normalize)
    auto p0 = sturmian_params(surd(q2(), 0, 1, 1, 1));
    auto p1 = sturmian_params(surd(q2(), 3, 1, -1, 1));
    auto d = denjoy_flow_equivalent(p0, p1, 3);
    REQUIRE(d.is_yes());
    // witness re-verifies: maps rho0 to rho1 exactly and matches the cut sets
    CHECK(apply(*d.witness, p0.rho) == p1.rho);
    CHECK(verify_flow_certificate(p0, p1, *d.witness));
    CHECK(!verify_flow_certificate(p0, p1, Mat2::from_ints(1, 1, 0, 1)));

    // halves are not flow equivalent
    auto h0 = sturmian_params(surd(q2(), 0, 1, 1, 2));
    auto h1 = sturmian_params(surd(q2(), 3, 2, -1, 2));
    CHECK(denjoy_flow_equivalent(h0, h1, 3).is_no());

    // reflexivity with identity-type witness
    auto dd = denjoy_flow_equivalent(p0, p0, 2);
    REQUIRE(dd.is_yes());
    CHECK(apply(*dd.witness, p0.rho) == p0.rho);

    // orbit-count obstruction
    auto extra = normalize(p0.rho, {RealValue::from_rat(q2(), make_rat(1, 2))}).params;
    CHECK(denjoy_flow_equivalent(p0, extra, 2).is_no());
}

TEST_CASE("rational span is a power invariant") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 5; ++trial) {
        auto p = random_params(rng, q5(), trial % 3);
        for (long m : {2L, 3L, -1L}) {
            CHECK(rational_cut_span(power_params(p, m)) == rational_cut_span(p));
        }
    }
}
