#include "wordlib/suites.hpp"

#include <algorithm>
#include <set>

#include "wordlib/analysis.hpp"
#include "wordlib/factor_index.hpp"
#include "wordlib/iet.hpp"
#include "wordlib/marking.hpp"
#include "wordlib/morphism.hpp"
#include "wordlib/quadratic.hpp"
#include "wordlib/rauzy.hpp"
#include "wordlib/rotation.hpp"
#include "wordlib/roulette.hpp"

namespace wordlib {

namespace {

QuadraticReal golden() { return QuadraticReal(-1, 1, 2, 5); }      // (sqrt5 - 1)/2
QuadraticReal golden_conj() { return QuadraticReal(3, -1, 2, 5); } // (3 - sqrt5)/2

void add(SuiteResult& r, const std::string& name, bool ok, const std::string& detail = "") {
    r.checks.push_back({name, ok, detail});
}

Word fibonacci_word(std::size_t n) { return fixed_point_prefix(fibonacci_morphism(), 0, n); }

IntervalExchange three_iet() {
    QuadraticReal l1(-1, 1, 1, 2); // sqrt2 - 1
    QuadraticReal l2(0, 1, 4, 2);  // sqrt2 / 4
    QuadraticReal l3 = QuadraticReal::integer(1) - l1 - l2;
    return IntervalExchange({l1, l2, l3}, {2, 1, 0});
}

Word three_iet_word(std::size_t n) {
    return iet_code(three_iet(), QuadraticReal(1, 0, 3, 2), n).word;
}

bool complexity_is(const FactorIndex& idx, std::size_t n_max,
                   std::size_t slope, std::size_t offset) {
    for (std::size_t n = 1; n <= n_max; ++n)
        if (idx.factor_count(n) != slope * n + offset) return false;
    return true;
}

Word mask_word(std::size_t len, unsigned mask) {
    std::vector<uint8_t> d(len);
    for (std::size_t i = 0; i < len; ++i) d[i] = (mask >> i) & 1;
    return Word(binary_ab(), std::move(d));
}

} // namespace

SuiteResult suite_equivalence() {
    SuiteResult r{"equivalence", {}};
    Word w = rotation_code(sturmian_rotation(golden(), QuadraticReal::integer(0)), 100000).word;
    FactorIndex idx(w, 62);
    add(r, "complexity T(n) = n+1 for n <= 60", complexity_is(idx, 60, 1, 1));
    add(r, "1-balanced over factor lengths <= 60", is_m_balanced(w, 1, std::nullopt, 60).ok());
    add(r, "no complexity plateau (aperiodic)", !periodicity_check(idx).eventually_periodic());
    return r;
}

SuiteResult suite_lemma34(std::size_t max_len) {
    SuiteResult r{"lemma34", {}};
    std::size_t counterexamples = 0, checked = 0;
    for (std::size_t len = 1; len <= max_len; ++len)
        for (unsigned mask = 0; mask < (1u << len); ++mask) {
            if (mask == 0) continue; // needs at least one b
            Word w = mask_word(len, mask);
            bool bal = is_m_balanced(w, 1).ok();
            auto red = reduce_balanced(w);
            bool rhs = red.has_value() && is_m_balanced(red->red, 1).ok();
            ++checked;
            if (bal != rhs) ++counterexamples;
        }
    add(r, "balanced <=> reducible with balanced reduction", counterexamples == 0,
        std::to_string(checked) + " words checked");
    return r;
}

SuiteResult suite_extension(std::size_t max_len) {
    SuiteResult r{"extension", {}};
    std::size_t stuck = 0, balanced_count = 0;
    for (std::size_t len = 1; len <= max_len; ++len)
        for (unsigned mask = 0; mask < (1u << len); ++mask) {
            Word w = mask_word(len, mask);
            if (!is_m_balanced(w, 1).ok()) continue;
            ++balanced_count;
            if (balanced_extensions(w, Side::Right).empty() ||
                balanced_extensions(w, Side::Left).empty())
                ++stuck;
        }
    add(r, "every balanced word extends both ways", stuck == 0,
        std::to_string(balanced_count) + " balanced words checked");
    return r;
}

SuiteResult suite_iet_criterion(const std::string& word) {
    SuiteResult r{"iet-criterion", {}};
    bool all = word == "all";
    if (all || word == "fibonacci") {
        FactorIndex idx(fibonacci_word(100000), 42);
        auto v = iet_criterion(idx, 40);
        add(r, "fibonacci passes-oriented from k = 2",
            v.status == CriterionVerdict::Status::PassesOriented && v.k_min == 2,
            v.status_str());
        add(r, "fibonacci certificate replays",
            v.marking.has_value() && replay_marking(idx, *v.marking));
    }
    if (all || word == "3iet") {
        FactorIndex idx(three_iet_word(100000), 42);
        auto v = iet_criterion(idx, 40);
        add(r, "regular 3-iet passes-oriented",
            v.status == CriterionVerdict::Status::PassesOriented, v.status_str());
        add(r, "3-iet certificate replays",
            v.marking.has_value() && replay_marking(idx, *v.marking));
    }
    if (all || word == "tribonacci") {
        FactorIndex idx(fixed_point_prefix(tribonacci_morphism(), 0, 100000), 42);
        auto v = iet_criterion(idx, 40);
        bool valence = v.witness && v.witness->rule.find("valence") != std::string::npos;
        add(r, "tribonacci fails with a valence-3 witness",
            v.status == CriterionVerdict::Status::Fails && valence,
            v.witness ? v.witness->rule + " at k = " + std::to_string(v.witness->k) : "");
    }
    if (all || word == "thue-morse") {
        FactorIndex idx(fixed_point_prefix(thue_morse_morphism(), 0, 100000), 42);
        auto v = iet_criterion(idx, 40);
        bool compl_wit = v.witness && v.witness->rule.find("complexity") != std::string::npos;
        add(r, "thue-morse fails with a complexity-increment witness",
            v.status == CriterionVerdict::Status::Fails && compl_wit,
            v.witness ? v.witness->rule : "");
    }
    if (r.checks.empty()) add(r, "known word name", false, "unknown word " + word);
    return r;
}

SuiteResult suite_roulette() {
    SuiteResult r{"roulette", {}};
    // 3 red digon hues and 2 blue triangle hues on 6 components
    RouletteSystem irr(6, golden(), {2, 2, 2}, {3, 3}, 0, QuadraticReal(1, 0, 7, 5));
    Word w = roulette_code(irr, 10000).word;
    add(r, "irrational configuration is 1-balanced on 10^4 symbols",
        w.alphabet().size() == 5 && is_m_balanced(w, 1).ok());

    RouletteSystem rat(6, QuadraticReal::rational(mpq_class(1, 3)), {2, 2, 2}, {3, 3}, 0,
                       QuadraticReal::rational(mpq_class(1, 7)));
    Word wr = roulette_code(rat, 10000).word;
    bool periodic = false;
    for (std::size_t p = 1; !periodic && p <= 100; ++p) {
        periodic = true;
        for (std::size_t i = 0; i + p < wr.size(); ++i)
            if (wr[i] != wr[i + p]) { periodic = false; break; }
    }
    add(r, "rational alpha gives a periodic word", periodic);
    add(r, "rational word is 1-balanced", is_m_balanced(wr, 1).ok());

    Word colors = collapse_to_colors(irr, w);
    FactorIndex cidx(colors, 32);
    add(r, "hue collapse is 1-balanced", is_m_balanced(colors, 1).ok());
    add(r, "hue collapse has T(n) = n+1 for n <= 30", complexity_is(cidx, 30, 1, 1));
    add(r, "hue collapse is aperiodic", !periodicity_check(cidx).eventually_periodic());
    return r;
}

SuiteResult suite_fibonacci_generators() {
    SuiteResult r{"fibonacci-generators", {}};
    Word fp = fibonacci_word(10000);
    Word sw = standard_word(DirectiveSequence({1}), 10000);
    Word mech = relabel(mechanical_word(golden_conj(), golden_conj(), 10000), binary_ab());
    add(r, "fixed point = standard word (d = 1,1,...)", fp == sw);
    add(r, "fixed point = mechanical word, alpha = beta = (3-sqrt5)/2", fp == mech);
    FactorIndex idx(fp, 5);
    add(r, "T(1..4) = 2,3,4,5",
        idx.factor_count(1) == 2 && idx.factor_count(2) == 3 && idx.factor_count(3) == 4 &&
            idx.factor_count(4) == 5);
    return r;
}

SuiteResult suite_thue_morse() {
    SuiteResult r{"thue-morse", {}};
    Word w = fixed_point_prefix(thue_morse_morphism(), 0, 4096);
    bool cube = false;
    for (std::size_t p = 1; !cube && 3 * p <= w.size(); ++p) {
        std::size_t run = 0;
        for (std::size_t i = 0; i + p < w.size(); ++i) {
            run = w[i] == w[i + p] ? run + 1 : 0;
            if (run >= 2 * p) { cube = true; break; }
        }
    }
    add(r, "prefix 4096 is cube-free", !cube);
    auto bal = is_m_balanced(w, 1);
    add(r, "fails 1-balance with an explicit witness",
        !bal.ok() && w.contains(bal.witness->u) && w.contains(bal.witness->v) &&
            bal.witness->delta >= 2);
    FactorIndex idx(fixed_point_prefix(thue_morse_morphism(), 0, 100000), 42);
    auto v = iet_criterion(idx, 40);
    add(r, "iet criterion fails on the complexity increment",
        v.status == CriterionVerdict::Status::Fails && v.witness &&
            v.witness->rule.find("complexity") != std::string::npos,
        v.witness ? v.witness->rule : "");
    return r;
}

SuiteResult suite_palindromes_returns() {
    SuiteResult r{"palindromes-returns", {}};
    Word w = fibonacci_word(100000);
    FactorIndex idx(w, 52);
    bool census_ok = true;
    for (std::size_t n = 1; n <= 50 && census_ok; ++n)
        census_ok = palindrome_census(idx, n).size() == (n % 2 == 0 ? 1 : 2);
    add(r, "1 even / 2 odd palindromes per length <= 50", census_ok);
    bool returns_ok = true;
    for (std::size_t n = 1; n <= 12 && returns_ok; ++n)
        for (std::size_t id = 0; id < idx.level_size(n); ++id)
            if (return_words(idx, idx.factor_word(n, id)).size() != 2) { returns_ok = false; break; }
    add(r, "exactly 2 return words per factor of length <= 12", returns_ok);
    return r;
}

SuiteResult suite_three_iet() {
    SuiteResult r{"three-iet", {}};
    IntervalExchange iet = three_iet();
    add(r, "regularity holds over 10^4 steps", !iet_regularity(iet, 10000).has_value());
    Word w = three_iet_word(150000);
    FactorIndex idx(w, 62);
    add(r, "T(n) = 2n+1 for n <= 60", complexity_is(idx, 60, 2, 1));
    bool returns_ok = true;
    for (std::size_t n = 1; n <= 10 && returns_ok; ++n)
        for (std::size_t id = 0; id < idx.level_size(n); ++id)
            if (return_words(idx, idx.factor_word(n, id)).size() != 3) { returns_ok = false; break; }
    add(r, "exactly 3 return words per factor of length <= 10", returns_ok);
    return r;
}

SuiteResult suite_three_distance() {
    SuiteResult r{"three-distance", {}};
    RotationSystem sys = sturmian_rotation(golden(), QuadraticReal::integer(0));
    bool counts_ok = true, sums_ok = true, partition_ok = true;
    for (std::size_t n = 1; n <= 40; ++n) {
        auto fi = factor_interval_lengths(sys, n);
        std::set<std::string> reprs;
        std::vector<QuadraticReal> vals;
        QuadraticReal total = QuadraticReal::integer(0);
        for (const auto& [f, len] : fi.lengths) {
            total = total + len;
            if (reprs.insert(len.str()).second) vals.push_back(len);
        }
        partition_ok = partition_ok && total == QuadraticReal::integer(1);
        if (vals.size() > 3) counts_ok = false;
        if (vals.size() == 3) {
            std::sort(vals.begin(), vals.end());
            sums_ok = sums_ok && vals[0] + vals[1] == vals[2];
        }
    }
    add(r, "interval lengths partition the circle", partition_ok);
    add(r, "at most 3 distinct lengths at each n <= 40", counts_ok);
    add(r, "largest length = sum of the other two, exactly", sums_ok);
    return r;
}

SuiteResult suite_slow_growth() {
    SuiteResult r{"slow-growth", {}};
    // characteristic set made of two arcs whose endpoints all lie in one
    // orbit of the rotation: b on [2a, 4a) and [a, 3a), a = golden ratio
    QuadraticReal a = golden();
    QuadraticReal a2 = (a + a).frac_mod1();
    QuadraticReal a3 = (a2 + a).frac_mod1();
    QuadraticReal a4 = (a3 + a).frac_mod1();
    QuadraticReal one = QuadraticReal::integer(1);
    RotationSystem sys(a, binary_ab(),
                       {{{QuadraticReal::integer(0), a2}, 0},
                        {{a2, a4}, 1},
                        {{a4, a}, 0},
                        {{a, a3}, 1},
                        {{a3, one}, 0}},
                       QuadraticReal::rational(mpq_class(1, 7)));
    Word w = rotation_code(sys, 100000).word;
    FactorIndex idx(w, 42);
    std::size_t N = 41;
    for (std::size_t n = 40; n >= 1; --n) {
        if (idx.factor_count(n + 1) - idx.factor_count(n) != 1) break;
        N = n;
    }
    bool settled = N <= 20;
    add(r, "T(n+1) - T(n) = 1 for all n >= N with N <= 20", settled,
        "N = " + std::to_string(N));
    add(r, "offset K = T(N) - N exceeds 1",
        settled && idx.factor_count(N) > N + 1,
        settled ? "K = " + std::to_string(idx.factor_count(N) - N) : "");
    return r;
}

SuiteResult suite_q_multiplication() {
    SuiteResult r{"q-multiplication", {}};
    RotationSystem sys = sturmian_rotation(golden(), golden() * mpq_class(1, 2));
    Word base = rotation_code(sys, 10000).word;
    for (auto [q, rr] : {std::pair<unsigned long, long>{1, 0}, {2, 0}, {3, 1}}) {
        Word w = rotation_code(q_multiply(sys, q, rr), 10000).word;
        add(r, "q = " + std::to_string(q) + ", r = " + std::to_string(rr) +
               " preserves the coded word", w == base);
    }
    return r;
}

SuiteResult suite_lrs_calculus() {
    SuiteResult r{"lrs-calculus", {}};
    std::set<LrsShape> frontier = {{0, 1, 2}, {0, 2, 1}};
    std::set<LrsShape> seen;
    for (int step = 0; step < 12; ++step) {
        std::set<LrsShape> next;
        for (const auto& x : frontier)
            for (const auto& y : successor_lrs(x))
                if (seen.insert(y).second) next.insert(y);
        frontier.swap(next);
    }
    std::size_t failures = 0;
    for (const auto& x : seen) {
        auto back = successor_lrs(predecessor_lrs(x));
        if (std::find(back.begin(), back.end(), x) == back.end()) ++failures;
    }
    add(r, "predecessor inverts successor on all reachable shapes", failures == 0,
        std::to_string(seen.size()) + " shapes reached");
    return r;
}

} // namespace wordlib
