#include <doctest.h>

#include "wordlib/analysis.hpp"
#include "wordlib/factor_index.hpp"
#include "wordlib/iet.hpp"
#include "wordlib/morphism.hpp"
#include "wordlib/quadratic.hpp"
#include "wordlib/rotation.hpp"
#include "wordlib/roulette.hpp"

using namespace wordlib;

static QuadraticReal golden_frac() { return QuadraticReal(-1, 1, 2, 5); }   // (sqrt5 - 1)/2
static QuadraticReal golden_conj() { return QuadraticReal(3, -1, 2, 5); }   // (3 - sqrt5)/2

TEST_CASE("quadratic arithmetic") {
    CHECK(golden_frac() + golden_conj() == QuadraticReal::integer(1));
    CHECK(QuadraticReal(0, 1, 1, 2) < QuadraticReal::rational(mpq_class(3, 2)));
    CHECK(QuadraticReal(3, 1, 1, 2).frac_mod1() == QuadraticReal(-1, 1, 1, 2)); // sqrt2 - 1
    CHECK(QuadraticReal(3, 1, 1, 2).floor() == 4);
    CHECK(QuadraticReal(-1, -1, 1, 2).floor() == -3); // -1 - sqrt2
    CHECK(golden_frac().floor() == 0);
    CHECK((golden_frac() * mpq_class(2)).floor() == 1);
    CHECK(QuadraticReal(2, -1, 1, 4) == QuadraticReal::integer(0)); // 2 - sqrt4, d need not be squarefree
    CHECK_THROWS_AS(QuadraticReal(0, 1, 1, 2) + QuadraticReal(0, 1, 1, 5), std::invalid_argument);
}

TEST_CASE("quadratic parsing") {
    CHECK(QuadraticReal::parse("(-1+√5)/2") == golden_frac());
    CHECK(QuadraticReal::parse("(3-sqrt(5))/2") == golden_conj());
    CHECK(QuadraticReal::parse("(3-1*sqrt(5))/2") == golden_conj());
    CHECK(QuadraticReal::parse("√2/2") == QuadraticReal(0, 1, 2, 2));
    CHECK(QuadraticReal::parse("2/5") == QuadraticReal::rational(mpq_class(2, 5)));
    CHECK(QuadraticReal::parse("-7") == QuadraticReal::integer(-7));
    CHECK(QuadraticReal::parse(" ( 0 + 2√3 ) / 4 ") == QuadraticReal(0, 1, 2, 3));
    CHECK_THROWS_AS(QuadraticReal::parse("pi"), std::invalid_argument);
    CHECK(QuadraticReal::parse(golden_frac().str()) == golden_frac());
}

TEST_CASE("mechanical words") {
    Word zeros = mechanical_word(QuadraticReal::integer(0), QuadraticReal::integer(0), 6);
    CHECK(zeros.str() == "000000");
    Word halves = mechanical_word(QuadraticReal::rational(mpq_class(1, 2)), QuadraticReal::integer(0), 6);
    CHECK(halves.str() == "010101");

    Word mech = mechanical_word(golden_conj(), golden_conj(), 10000);
    Word fib = fixed_point_prefix(fibonacci_morphism(), 0, 10000);
    CHECK(relabel(mech, binary_ab()) == fib);
}

TEST_CASE("rotation coding") {
    RotationSystem half(QuadraticReal::rational(mpq_class(1, 2)), binary_ab(),
                        {{{QuadraticReal::integer(0), QuadraticReal::rational(mpq_class(1, 2))}, 0},
                         {{QuadraticReal::rational(mpq_class(1, 2)), QuadraticReal::integer(1)}, 1}},
                        QuadraticReal::integer(0));
    auto orb = rotation_code(half, 8);
    CHECK(orb.word.str() == "abababab");
    CHECK(orb.boundary_hits.size() == 8); // the orbit rides the arc endpoints

    RotationSystem fib = sturmian_rotation(golden_frac(), QuadraticReal::integer(0));
    auto w = rotation_code(fib, 10000).word;
    FactorIndex idx(w, 31);
    for (std::size_t n = 1; n <= 30; ++n) CHECK(idx.factor_count(n) == n + 1);
    CHECK(is_m_balanced(w, 1, std::nullopt, 40).ok());
    // only x_0 = 0 and x_1 = alpha land on arc endpoints
    CHECK(rotation_code(fib, 10000).boundary_hits.size() == 2);
}

TEST_CASE("strict policy truncates at a boundary hit") {
    RotationSystem fib = sturmian_rotation(golden_frac(), golden_frac());
    auto orb = rotation_code(fib, 100, BoundaryPolicy::Strict);
    REQUIRE(orb.boundary_hits.size() == 1);
    CHECK(orb.boundary_hits[0].step == 0);
    CHECK(orb.truncated);
    CHECK(orb.word.size() == 0);
}

TEST_CASE("rotation words from different start points share factors") {
    RotationSystem s1 = sturmian_rotation(golden_frac(), QuadraticReal::integer(0));
    RotationSystem s2 = sturmian_rotation(golden_frac(), golden_frac() * mpq_class(1, 3));
    Word w1 = rotation_code(s1, 10000).word;
    Word w2 = rotation_code(s2, 10000).word;
    FactorIndex i1(w1, 15), i2(w2, 15);
    CHECK(equivalent_up_to(i1, i2, 15));
}

TEST_CASE("q-multiplication preserves the coded word") {
    RotationSystem fib = sturmian_rotation(golden_frac(), golden_frac() * mpq_class(1, 2));
    Word base = rotation_code(fib, 3000).word;
    CHECK(rotation_code(q_multiply(fib, 1, 0), 3000).word == base);
    CHECK(rotation_code(q_multiply(fib, 2, 0), 3000).word == base);
    CHECK(rotation_code(q_multiply(fib, 3, 1), 3000).word == base);
}

TEST_CASE("iet basics") {
    // 2-IET equals the rotation it came from
    RotationSystem fib = sturmian_rotation(golden_frac(), QuadraticReal::integer(0));
    IntervalExchange iet = as_interval_exchange(fib);
    CHECK(iet_code(iet, fib.start(), 2000).word == rotation_code(fib, 2000).word);

    // identity permutation codes a constant word
    IntervalExchange ident({QuadraticReal::rational(mpq_class(1, 2)), QuadraticReal::rational(mpq_class(1, 2))},
                           {0, 1});
    CHECK(iet_code(ident, QuadraticReal::rational(mpq_class(1, 4)), 5).word.str() == "aaaaa");

    CHECK_THROWS_AS(IntervalExchange({QuadraticReal::rational(mpq_class(1, 2))}, {0}), std::invalid_argument);
}

TEST_CASE("iet regularity") {
    // rational rotation 2/5: the interior endpoint orbit is 5-periodic
    IntervalExchange r25({QuadraticReal::rational(mpq_class(3, 5)), QuadraticReal::rational(mpq_class(2, 5))},
                         {1, 0});
    auto v = iet_regularity(r25, 10);
    REQUIRE(v.has_value());
    CHECK(v->step == 5);

    IntervalExchange gold = as_interval_exchange(sturmian_rotation(golden_frac(), QuadraticReal::integer(0)));
    CHECK(!iet_regularity(gold, 2000).has_value());
}

TEST_CASE("regular 3-iet complexity") {
    // lengths in Q(sqrt 2), symmetric permutation (3,2,1)
    QuadraticReal l1(-1, 1, 1, 2); // sqrt2 - 1
    QuadraticReal l2(0, 1, 4, 2);  // sqrt2 / 4
    QuadraticReal l3 = QuadraticReal::integer(1) - l1 - l2;
    IntervalExchange iet({l1, l2, l3}, {2, 1, 0});
    CHECK(!iet_regularity(iet, 2000).has_value());

    Word w = iet_code(iet, QuadraticReal(1, 0, 3, 2), 20000).word;
    FactorIndex idx(w, 31);
    for (std::size_t n = 1; n <= 30; ++n) CHECK(idx.factor_count(n) == 2 * n + 1);
    for (std::size_t len = 1; len <= 6; ++len)
        for (std::size_t id = 0; id < idx.level_size(len); ++id)
            CHECK(return_words(idx, idx.factor_word(len, id)).size() == 3);
}

TEST_CASE("factor interval lengths") {
    RotationSystem fib = sturmian_rotation(golden_frac(), QuadraticReal::integer(0));
    auto n1 = factor_interval_lengths(fib, 1);
    REQUIRE(n1.lengths.size() == 2);
    CHECK(n1.lengths.at(Word::parse("a")) == golden_frac());

    auto n5 = factor_interval_lengths(fib, 5);
    CHECK(n5.cell_count == 6);
    CHECK(n5.lengths.size() == 6);

    Word coded = rotation_code(fib, 100000).word;
    FactorIndex idx(coded, 20);
    for (std::size_t n = 1; n <= 20; ++n) {
        auto fi = factor_interval_lengths(fib, n);
        // partition conservation
        QuadraticReal total = QuadraticReal::integer(0);
        std::set<std::string> distinct;
        for (const auto& [f, len] : fi.lengths) {
            total = total + len;
            distinct.insert(len.str());
        }
        CHECK(total == QuadraticReal::integer(1));
        // three-distance: at most 3 values; the largest is the sum of the others
        REQUIRE(distinct.size() <= 3);
        if (distinct.size() == 3) {
            std::vector<QuadraticReal> vals;
            for (const auto& s : distinct) vals.push_back(QuadraticReal::parse(s));
            std::sort(vals.begin(), vals.end());
            CHECK(vals[0] + vals[1] == vals[2]);
        }
        // geometry/coding agreement
        CHECK(fi.lengths.size() == idx.factor_count(n));
        for (const auto& [f, len] : fi.lengths) CHECK(idx.find(f).has_value());
    }
}

TEST_CASE("roulette m=1 reduces to a rotation word") {
    RouletteSystem r(1, golden_frac(), {1}, {1}, 0, QuadraticReal::integer(0));
    Word w = roulette_code(r, 2000).word;
    Word rot = rotation_code(sturmian_rotation(golden_frac(), QuadraticReal::integer(0)), 2000).word;
    CHECK(relabel(w, binary_ab()) == rot);
}

TEST_CASE("roulette five-letter configuration is balanced") {
    // 3 red digon hues (3 x 2 = 6 arcs), 2 blue triangle hues (2 x 3 = 6), m = 6
    RouletteSystem r(6, golden_frac(), {2, 2, 2}, {3, 3}, 0, QuadraticReal(1, 0, 7, 5));
    Word w = roulette_code(r, 3000).word;
    CHECK(w.alphabet().size() == 5);
    CHECK(is_m_balanced(w, 1).ok());

    // collapsing hues to colors gives a Sturmian-type word
    Word colors = collapse_to_colors(r, w);
    CHECK(is_m_balanced(colors, 1).ok());
    FactorIndex idx(colors, 21);
    for (std::size_t n = 1; n <= 20; ++n) CHECK(idx.factor_count(n) == n + 1);
}

TEST_CASE("roulette with rational alpha is periodic and balanced") {
    RouletteSystem r(6, QuadraticReal::rational(mpq_class(1, 3)), {2, 2, 2}, {3, 3}, 0,
                     QuadraticReal::rational(mpq_class(1, 7)));
    Word w = roulette_code(r, 500).word;
    CHECK(is_m_balanced(w, 1).ok());
    // state space is finite: position period 18 steps, component period 6
    for (std::size_t i = 0; i + 18 < w.size(); ++i) CHECK(w[i] == w[i + 18]);
}

TEST_CASE("roulette rejects impossible hue configurations") {
    CHECK_THROWS_AS(RouletteSystem(6, golden_frac(), {3, 2, 1}, {3, 3}, 0, QuadraticReal::integer(0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(RouletteSystem(6, golden_frac(), {4, 2}, {3, 3}, 0, QuadraticReal::integer(0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(RouletteSystem(6, golden_frac(), {2, 2}, {3, 3}, 0, QuadraticReal::integer(0)),
                    std::invalid_argument);
}
