#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "sturmkit/sturmian.hpp"
#include "testutil.hpp"

using namespace sturmkit;
using namespace sturmkit::testutil;

namespace {

SturmianParams golden() {
    // phi - 1 = (sqrt5 - 1)/2
    return SturmianParams(surd(q5(), -1, 2, 1, 2));
}

SturmianParams silver() {
    // sqrt2 - 1
    return SturmianParams(surd(q2(), -1, 1, 1, 1));
}

}  // namespace

TEST_CASE("sturmian_window") {
    auto w = sturmian_window(golden(), 0, 5);
    CHECK(w.symbols == std::vector<int>{0, 1, 0, 1, 1});
    CHECK(w.str() == "01011@0");

    // {0} = 0 codes to letter 0 for every alpha
    CHECK(sturmian_window(silver(), 0, 1).symbols == std::vector<int>{0});

    // negative indices work
    auto neg = sturmian_window(golden(), -3, 0);
    CHECK(neg.offset == -3);
    CHECK(neg.size() == 3);
}

TEST_CASE("factors: cardinality n+1 and window consistency") {
    CHECK(factors(golden(), 1) == std::set<Word>{word_from_string("0"), word_from_string("1")});

    auto f2 = factors(golden(), 2);
    CHECK(f2 == std::set<Word>{word_from_string("01"), word_from_string("10"),
                               word_from_string("11")});

    for (size_t n = 1; n <= 20; ++n) CHECK(factors(silver(), n).size() == n + 1);

    // every length-n subword of a long window is a factor
    auto p = silver();
    auto w = sturmian_window(p, 0, 120);
    for (size_t n : {3u, 7u, 12u}) {
        auto fs = factors(p, n);
        for (size_t i = 0; i + n <= w.size(); ++i) {
            Word sub;
            sub.alphabet = 2;
            sub.symbols.assign(w.symbols.begin() + i, w.symbols.begin() + i + n);
            CHECK(fs.count(sub) == 1);
        }
    }
}

TEST_CASE("complexity law on random quadratic parameters") {
    std::mt19937_64 rng(123);
    std::vector<BasisPtr> bases{q2(), q3(), q5()};
    for (int trial = 0; trial < 6; ++trial) {
        auto alpha = random_surd_01(rng, bases[trial % bases.size()]);
        SturmianParams p(alpha);
        for (size_t n = 1; n <= 30; n += 7) CHECK(factors(p, n).size() == n + 1);
    }
}

TEST_CASE("substitutions") {
    CHECK(substitution_apply(SubstName::J, word_from_string("0110")) == word_from_string("1001"));
    CHECK(substitution_apply(SubstName::R, word_from_string("01")) == word_from_string("011"));
    CHECK(substitution_apply(SubstName::L, word_from_string("01")) == word_from_string("010"));
    // R after J on "0"
    CHECK(substitution_apply(SubstName::R, substitution_apply(SubstName::J, word_from_string("0"))) ==
          word_from_string("1"));
    // L is the J-conjugate of R
    auto w = word_from_string("0110100");
    auto lhs = substitution_apply(SubstName::L, w);
    auto rhs = substitution_apply(
        SubstName::J, substitution_apply(SubstName::R, substitution_apply(SubstName::J, w)));
    CHECK(lhs == rhs);
}

TEST_CASE("sadic_prefix equals the coding window") {
    // golden parameter: the classical binary fixed point up to letter order
    auto g = golden();
    CHECK(sadic_prefix(g, 8).symbols == sturmian_window(g, 0, 8).symbols);
    CHECK(sadic_prefix(g, 1).size() == 1);

    auto s = silver();
    CHECK(sadic_prefix(s, 50).symbols == sturmian_window(s, 0, 50).symbols);

    // every length-10 subword of a length-50 prefix is a factor
    auto w = sadic_prefix(s, 50);
    auto fs = factors(s, 10);
    for (size_t i = 0; i + 10 <= w.size(); ++i) {
        Word sub;
        sub.alphabet = 2;
        sub.symbols.assign(w.symbols.begin() + i, w.symbols.begin() + i + 10);
        CHECK(fs.count(sub) == 1);
    }

    // more parameters, including ones with large first digits
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 8; ++trial) {
        auto alpha = random_surd_01(rng, q3());
        SturmianParams p(alpha);
        CHECK(sadic_prefix(p, 40).symbols == sturmian_window(p, 0, 40).symbols);
    }
}

TEST_CASE("letter frequencies approach alpha") {
    auto p = golden();
    const long n = 10000;
    auto w = sturmian_window(p, 0, n);
    long ones = std::count(w.symbols.begin(), w.symbols.end(), 1);
    // |count(1)/N - alpha| <= 2/N  <=>  |count(1) - N*alpha| <= 2
    RealValue gap = p.alpha * Rat(n) - Rat(ones);
    CHECK(lt(gap, RealValue::from_rat(p.alpha.basis(), Rat(2))));
    CHECK(gt(gap, RealValue::from_rat(p.alpha.basis(), Rat(-2))));
}

TEST_CASE("state_image") {
    auto s = silver();
    auto m = state_image(s);
    // Z + (sqrt2 - 1) Z = Z + sqrt2 Z
    CHECK(m == zmodule_of(q2(), {RealValue::one(q2()), surd(q2(), 0, 1, 1, 1)}));
    CHECK(m.rank() == 2);

    auto g = SturmianParams(surd(q5(), 1, 4, 1, 4));  // phi/2
    CHECK(state_image(g).rank() == 2);

    // alpha and 1 - alpha generate the same lattice
    auto flipped = SturmianParams(RealValue::one(q2()) - s.alpha);
    CHECK(state_image(flipped) == m);
}

TEST_CASE("long windows exhaust the factor sets") {
    auto p = golden();
    auto w = sturmian_window(p, 0, 400);
    for (size_t n : {2u, 5u, 8u}) {
        std::set<Word> seen;
        for (size_t i = 0; i + n <= w.size(); ++i) {
            Word sub;
            sub.alphabet = 2;
            sub.symbols.assign(w.symbols.begin() + i, w.symbols.begin() + i + n);
            seen.insert(sub);
        }
        CHECK(seen == factors(p, n));
    }
}

TEST_CASE("window matches S-adic generation for sqrt2-1 (cross-oracle)") {
    auto s = silver();
    auto w = sturmian_window(s, 0, 8);
    CHECK(w.symbols == sadic_prefix(s, 8).symbols);
}
