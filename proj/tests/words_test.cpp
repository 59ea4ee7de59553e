#include <doctest.h>

#include "wordlib/analysis.hpp"
#include "wordlib/factor_index.hpp"
#include "wordlib/morphism.hpp"
#include "wordlib/word.hpp"

using namespace wordlib;

TEST_CASE("word parsing round-trips") {
    Word w = Word::parse("abaab");
    CHECK(w.size() == 5);
    CHECK(w.str() == "abaab");
    CHECK(w.alphabet().size() == 2);

    Word m = Word::parse("ab,ba,ab");
    CHECK(m.size() == 3);
    CHECK(m.alphabet().size() == 2);
    CHECK(m.str() == "ab,ba,ab");

    CHECK(Word::parse("aba").is_palindrome());
    CHECK(!Word::parse("ab").is_palindrome());
    CHECK(Word::parse("abaab").reversed().str() == "baaba");
}

TEST_CASE("factor index counts and extensions") {
    // Fibonacci prefix of length 13: T(1..4) = 2, 3, 4, 5.
    Word w = fixed_point_prefix(fibonacci_morphism(), 0, 13);
    CHECK(w.str() == "abaababaabaab");
    FactorIndex idx(w, 6);
    CHECK(idx.factor_count(1) == 2);
    CHECK(idx.factor_count(2) == 3);
    CHECK(idx.factor_count(3) == 4);
    CHECK(idx.factor_count(4) == 5);

    auto id = idx.find(Word::parse("aba", w.alphabet()));
    REQUIRE(id.has_value());
    CHECK(idx.factor(3, *id).count == 4);
    CHECK(!idx.find(Word::parse("bb", w.alphabet())).has_value());

    CHECK(idx.id_at(3, 0) == idx.id_at(3, 3)); // both are "aba"
}

TEST_CASE("complexity of an eventually periodic word flattens") {
    Word w = Word::parse("aaabababababababab");
    FactorIndex idx(w, 8);
    auto t = complexity_profile(idx);
    CHECK(t[0] == 2);
    CHECK(t[3] == t[4]); // plateau
    auto rep = periodicity_check(idx);
    REQUIRE(rep.plateau_at.has_value());
    REQUIRE(rep.period.has_value());
    CHECK(*rep.period == 2);
}

TEST_CASE("special factors of the Fibonacci prefix") {
    Word w = fixed_point_prefix(fibonacci_morphism(), 0, 200);
    FactorIndex idx(w, 10);
    for (std::size_t n = 1; n <= 8; ++n) {
        auto left = special_factors(idx, n, Side::Left);
        REQUIRE(left.size() == 1); // Sturmian: one left special factor per length
        CHECK(left[0].valence == 2);
        // left special factors of a characteristic Sturmian word are its prefixes
        CHECK(left[0].factor == w.prefix(n));
    }
}

TEST_CASE("balance checker") {
    // aabb is not 1-balanced: witness (aa, bb) on symbol a with delta 2.
    Word w = Word::parse("aabb");
    auto r = is_m_balanced(w, 1);
    REQUIRE(!r.ok());
    CHECK(r.witness->u.str() == "aa");
    CHECK(r.witness->v.str() == "bb");
    CHECK(r.witness->symbol == 0);
    CHECK(r.witness->delta == 2);

    CHECK(is_m_balanced(Word::parse("aabb"), 2).ok());
    CHECK(is_m_balanced(fixed_point_prefix(fibonacci_morphism(), 0, 2000), 1).ok());

    // Thue-Morse is 2-balanced but not 1-balanced.
    Word tm = fixed_point_prefix(thue_morse_morphism(), 0, 512);
    CHECK(!is_m_balanced(tm, 1).ok());
    CHECK(is_m_balanced(tm, 2).ok());
}

TEST_CASE("unbalance core finds the shared middle") {
    // abbabaab contains both "aa" and "bb": core u is the empty word... the
    // shortest violation is at length 2 (aa vs bb), giving u = epsilon.
    auto core = unbalance_core(Word::parse("abbabaab"));
    REQUIRE(core.has_value());
    CHECK(core->size() == 0);

    CHECK(!unbalance_core(Word::parse("abaab")).has_value());

    // aabab...baa style: aa.b..aa vs b...b forces a palindromic core.
    Word w = Word::parse("aababb");
    auto c2 = unbalance_core(w);
    REQUIRE(c2.has_value());
    CHECK(c2->is_palindrome());
}

TEST_CASE("balance property: squares of balanced words under length 9") {
    // For every 1-balanced binary w with |w| <= 8, ww is 1-balanced iff it is
    // (checked both ways against brute force on factors).
    Alphabet ab = binary_ab();
    for (std::size_t len = 1; len <= 8; ++len) {
        for (std::size_t bits = 0; bits < (std::size_t{1} << len); ++bits) {
            std::vector<uint8_t> d;
            for (std::size_t i = 0; i < len; ++i) d.push_back((bits >> i) & 1);
            Word w(ab, d);
            if (!is_m_balanced(w, 1).ok()) continue;
            Word ww = w + w;
            auto r = is_m_balanced(ww, 1);
            // brute force over all factor pairs of ww
            bool brute = true;
            for (std::size_t n = 1; n <= ww.size() && brute; ++n) {
                std::size_t mn = n + 1, mx = 0;
                for (std::size_t i = 0; i + n <= ww.size(); ++i) {
                    std::size_t c = 0;
                    for (std::size_t j = 0; j < n; ++j) c += ww[i + j] == 0;
                    mn = std::min(mn, c);
                    mx = std::max(mx, c);
                }
                if (mx - mn >= 2) brute = false;
            }
            CHECK(r.ok() == brute);
        }
    }
}

TEST_CASE("reduction of balanced words") {
    auto r = reduce_balanced(Word::parse("abaabaab"));
    REQUIRE(r.has_value());
    CHECK(r->n == 2);
    CHECK(r->red.str() == "aa");

    auto r2 = reduce_balanced(Word::parse("bb", binary_ab()));
    REQUIRE(r2.has_value());
    CHECK(r2->red.str() == "a");

    // gaps 1 and 3 cannot be reconciled
    CHECK(!reduce_balanced(Word::parse("babaaab")).has_value());
}

TEST_CASE("reduction property: w balanced iff reducible and Red(w) balanced") {
    Alphabet ab = binary_ab();
    for (std::size_t len = 2; len <= 16; ++len) {
        for (std::size_t bits = 0; bits < (std::size_t{1} << len); ++bits) {
            std::vector<uint8_t> d;
            bool has_b = false;
            for (std::size_t i = 0; i < len; ++i) {
                d.push_back((bits >> i) & 1);
                has_b |= d.back() == 1;
            }
            if (!has_b) continue;
            Word w(ab, d);
            bool bal = is_m_balanced(w, 1).ok();
            auto red = reduce_balanced(w);
            bool rhs = red.has_value() && is_m_balanced(red->red, 1).ok();
            CHECK(bal == rhs);
        }
        if (len >= 14) break; // cap the exhaustive sweep
    }
}

TEST_CASE("balanced extensions") {
    // The Fibonacci prefix extends on the right by both letters or one of them.
    Word w = fixed_point_prefix(fibonacci_morphism(), 0, 50);
    auto ext = balanced_extensions(w, Side::Right);
    CHECK(!ext.empty());
    for (uint8_t s : ext) CHECK(is_m_balanced(w.append(s), 1).ok());

    CHECK_THROWS_AS(balanced_extensions(Word::parse("aabb"), Side::Right), std::invalid_argument);
}

TEST_CASE("palindromic closure") {
    CHECK(palindromic_closure(Word::parse("abaabab")).str() == "abaababaaba");
    CHECK(palindromic_closure(Word::parse("aba")).str() == "aba");
    CHECK(palindromic_closure(Word::parse("ab")).str() == "aba");
    CHECK(palindromic_closure(Word::parse("aab")).str() == "aabaa");
}

TEST_CASE("palindrome census of Sturmian prefixes") {
    // A Sturmian word has exactly 1 palindrome of each even length and 2 of
    // each odd length; finite prefixes attain this for small lengths.
    Word w = fixed_point_prefix(fibonacci_morphism(), 0, 3000);
    FactorIndex idx(w, 12);
    for (std::size_t n = 1; n <= 12; ++n) {
        auto pals = palindrome_census(idx, n);
        CHECK(pals.size() == (n % 2 == 0 ? 1 : 2));
    }
}

TEST_CASE("return words") {
    Word w = fixed_point_prefix(fibonacci_morphism(), 0, 400);
    FactorIndex idx(w, 12);
    // Every Sturmian factor has exactly two return words.
    auto ret = return_words(idx, Word::parse("aba", w.alphabet()));
    CHECK(ret.size() == 2);
    CHECK(ret.count(Word::parse("ab", w.alphabet())) == 1);

    auto ret2 = return_words(idx, Word::parse("a", w.alphabet()));
    CHECK(ret2.size() == 2); // epsilon (from "aa") and "b" (from "aba")
    CHECK(ret2.count(Word(w.alphabet(), {})) == 1);
    CHECK(ret2.count(Word::parse("b", w.alphabet())) == 1);

    CHECK_THROWS_AS(return_words(idx, Word::parse("ababab", w.alphabet())), std::invalid_argument);
}

TEST_CASE("periodicity of a preperiodic word") {
    Word w = Word::parse("aaab" + std::string("ab") + "ababababababababab");
    FactorIndex idx(w, 10);
    auto rep = periodicity_check(idx);
    REQUIRE(rep.eventually_periodic());
    CHECK(*rep.period == 2);
    // The preperiod "aaa" keeps factor count vectors non-uniform at every length.
    CHECK(!rep.zero_balance_length.has_value());
}

TEST_CASE("zero balance length on a purely periodic word") {
    Word w = Word::parse("abababababababab");
    FactorIndex idx(w, 6);
    auto rep = periodicity_check(idx);
    REQUIRE(rep.zero_balance_length.has_value());
    CHECK(*rep.zero_balance_length == 2); // ab and ba share the count vector
}

TEST_CASE("frequencies") {
    Word w = Word::parse("abaababa");
    FactorIndex idx(w, 4);
    CHECK(frequency(idx, Word::parse("a", w.alphabet())) == mpq_class(5, 8));
    CHECK(frequency(idx, Word::parse("ab", w.alphabet())) == mpq_class(3, 7));
    CHECK(frequency(idx, Word::parse("bb", w.alphabet())) == 0);
    CHECK_THROWS_AS(frequency(idx, Word::parse("aaaaa", w.alphabet())), std::invalid_argument);
}

TEST_CASE("frequency spectrum of a Sturmian prefix has <= 3 clusters") {
    Word w = fixed_point_prefix(fibonacci_morphism(), 0, 20000);
    FactorIndex idx(w, 10);
    for (std::size_t n = 2; n <= 10; ++n) {
        auto v = frequency_spectrum_check(idx, n);
        CHECK(v.cluster_count <= 3);
        CHECK(v.cluster_count >= 2);
        if (v.cluster_count == 3) {
            REQUIRE(v.sum_property.has_value());
            CHECK(*v.sum_property);
        }
    }
}

TEST_CASE("mismatch density") {
    CHECK(mismatch_density(Word::parse("abab"), Word::parse("abab")) == 0);
    CHECK(mismatch_density(Word::parse("abab"), Word::parse("abba")) == mpq_class(1, 2));
    CHECK(mismatch_density(Word::parse("aaaa"), Word::parse("bbbb")) == 1);
}

TEST_CASE("factor-set equivalence") {
    Word w1 = Word::parse("abaababaabaababaab");
    Word w2 = Word::parse("baababaabaabab");
    FactorIndex i1(w1, 4), i2(w2, 4);
    CHECK(equivalent_up_to(i1, i2, 3));
    CHECK(!equivalent_up_to(i1, FactorIndex(Word::parse("abababab"), 4), 3));
}
