#include <doctest.h>

#include "wordlib/analysis.hpp"
#include "wordlib/factor_index.hpp"
#include "wordlib/morphism.hpp"

using namespace wordlib;

TEST_CASE("morphism parsing and application") {
    Morphism m = Morphism::parse("a -> ab\nb -> a");
    CHECK(apply(m, Word::parse("ab", m.alphabet())).str() == "aba");

    Morphism tm = thue_morse_morphism();
    Word w = Word::parse("a", tm.alphabet());
    for (int i = 0; i < 3; ++i) w = apply(tm, w);
    CHECK(w.str() == "abbabaab");

    Morphism id = Morphism::identity(binary_ab());
    Word u = Word::parse("abba");
    CHECK(apply(id, u) == u);

    CHECK_THROWS_AS(Morphism::parse("a -> ab\nb ="), std::invalid_argument);
    CHECK_THROWS_AS(Morphism::parse("a -> \nb -> a"), std::invalid_argument);
}

TEST_CASE("fixed point prefixes") {
    CHECK(fixed_point_prefix(fibonacci_morphism(), 0, 13).str() == "abaababaabaab");
    CHECK(fixed_point_prefix(thue_morse_morphism(), 0, 8).str() == "abbabaab");
    CHECK(fixed_point_prefix(tribonacci_morphism(), 0, 7).str() == "abacaba");

    // not prolongable on b (image "a" does not start with b)
    CHECK_THROWS_AS(fixed_point_prefix(fibonacci_morphism(), 1, 5), std::invalid_argument);

    // prefix stability and invariance under the morphism
    Morphism f = fibonacci_morphism();
    Word p200 = fixed_point_prefix(f, 0, 200);
    CHECK(fixed_point_prefix(f, 0, 120) == p200.prefix(120));
    Word img = apply(f, p200);
    CHECK(img.prefix(200) == p200);
}

TEST_CASE("sturmian morphism test") {
    CHECK(is_sturmian_morphism(fibonacci_morphism()).sturmian);
    CHECK(is_sturmian_morphism(Morphism::identity(binary_ab())).sturmian);

    auto ev = is_sturmian_morphism(Morphism::parse("a -> aa\nb -> bb"));
    CHECK(!ev.sturmian);
    REQUIRE(ev.witness.has_value());
    CHECK(ev.witness->delta >= 2);

    CHECK_THROWS_AS(is_sturmian_morphism(tribonacci_morphism()), std::invalid_argument);
}

TEST_CASE("standard words and convergents") {
    DirectiveSequence ones({1, 1, 1, 1});
    Word s = standard_word(ones, 13);
    CHECK(s.str() == "abaababaabaab");

    // d = (1,1,...) agrees with the Fibonacci fixed point far out
    CHECK(standard_word(ones, 10000) == fixed_point_prefix(fibonacci_morphism(), 0, 10000));

    // convergents of [0; 2, 1, 1, ...] approach (3 - sqrt 5)/2 ~ 0.38196...
    mpq_class c3 = directive_convergent(DirectiveSequence({1, 1, 1}));
    mpq_class c8 = directive_convergent(DirectiveSequence(std::vector<unsigned>(8, 1)));
    mpq_class target(381966, 1000000);
    CHECK(abs(c8 - target) < abs(c3 - target));
    CHECK(abs(c8 - target) < mpq_class(1, 1000));

    // d = (0, k): s_1 = b, s_2 = b^k a
    CHECK(standard_word(DirectiveSequence({0, 3}), 5).str() == "bbbab");
}

TEST_CASE("rauzy rules") {
    Word abc = Word::parse("abc");
    CHECK(rauzy_rules_word(abc, 0).str() == "abacaba");
    Word a = Word::parse("a");
    CHECK(rauzy_rules_word(a, 0).str() == "a");
    Word aa = Word::parse("a,a"); // forces single-symbol alphabet
    CHECK(rauzy_rules_word(aa, 0).str() == "a");

    // tau_{ab}(a) = tau_a(ab...) by hand: tau_b(a) = ba, tau_a(ba) = aba
    Word ab = Word::parse("ab");
    CHECK(rauzy_rules_word(ab, 0).str() == "aba");
}

TEST_CASE("closure words") {
    Word delta = Word::parse("ababababab");
    Word u = closure_word(delta, 13);
    CHECK(u.str() == "abaababaabaab"); // characteristic Fibonacci word

    Word all_a = Word::parse("a,a,a", binary_ab());
    CHECK(closure_word(all_a, 5).str() == "aaaaa");

    // every prefix of a characteristic word is left special
    Word big = closure_word(delta, 5000);
    FactorIndex idx(big, 20);
    for (std::size_t n = 1; n <= 20; ++n) {
        auto ls = special_factors(idx, n, Side::Left);
        REQUIRE(ls.size() == 1);
        CHECK(ls[0].factor == big.prefix(n));
    }

    // three-letter delta gives one left special factor of valence 3 per length
    Word tri = closure_word(Word::parse("abcabcabc"), 3000);
    FactorIndex tidx(tri, 10);
    for (std::size_t n = 1; n <= 10; ++n) {
        auto ls = special_factors(tidx, n, Side::Left);
        REQUIRE(ls.size() == 1);
        CHECK(ls[0].valence == 3);
    }
}

TEST_CASE("fraenkel words") {
    CHECK(fraenkel_word(3, 7).str() == "abacaba");
    CHECK(fraenkel_word(3, 14).str() == "abacabaabacaba");
    CHECK(fraenkel_word(4, 15).str() == "abacabadabacaba");
    CHECK_THROWS_AS(fraenkel_word(2, 5), std::invalid_argument);
    CHECK_THROWS_AS(fraenkel_word(9, 5), std::invalid_argument);

    // balanced, periodic with period 2^k - 1, pairwise distinct densities
    for (std::size_t k = 3; k <= 5; ++k) {
        std::size_t period = (std::size_t{1} << k) - 1;
        Word w = fraenkel_word(k, 6 * period);
        CHECK(is_m_balanced(w, 1).ok());
        for (std::size_t i = 0; i + period < w.size(); ++i) CHECK(w[i] == w[i + period]);
        std::set<std::size_t> densities;
        for (std::size_t s = 0; s < k; ++s) densities.insert(w.prefix(period).count(static_cast<uint8_t>(s)));
        CHECK(densities.size() == k);
    }
}

TEST_CASE("thue-morse prefix is cube-free") {
    Word w = fixed_point_prefix(thue_morse_morphism(), 0, 4096);
    const auto& d = w.data();
    // match-run scan: for each period p, the longest run of w[i] == w[i+p]
    // must stay below 2p (a cube needs a run of length >= 2p).
    bool cube = false;
    for (std::size_t p = 1; !cube && 3 * p <= d.size(); ++p) {
        std::size_t run = 0;
        for (std::size_t i = 0; i + p < d.size(); ++i) {
            run = d[i] == d[i + p] ? run + 1 : 0;
            if (run >= 2 * p) { cube = true; break; }
        }
    }
    CHECK(!cube);
}
