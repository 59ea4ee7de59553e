// Acceptance runner: one line per headline criterion, nonzero exit on any
// failure.
#include <cstdio>
#include <functional>
#include <vector>

#include "wordlib/suites.hpp"

using namespace wordlib;

int main() {
    std::vector<std::pair<const char*, std::function<SuiteResult()>>> items = {
        {"sturmian equivalence (complexity / balance / aperiodicity)", suite_equivalence},
        {"fibonacci cross-generator agreement", suite_fibonacci_generators},
        {"balanced-word reduction, exhaustive to length 16", [] { return suite_lemma34(16); }},
        {"balanced-word extension, exhaustive to length 14", [] { return suite_extension(14); }},
        {"thue-morse: cube-free, unbalanced, criterion failure", suite_thue_morse},
        {"fibonacci palindrome census and return words", suite_palindromes_returns},
        {"regular 3-iet complexity and return words", suite_three_iet},
        {"three-distance structure of factor intervals", suite_three_distance},
        {"slow-growth word from a two-arc characteristic set", suite_slow_growth},
        {"roulette five-letter configuration", suite_roulette},
        {"iet codability criterion end-to-end", [] { return suite_iet_criterion("all"); }},
        {"q-multiplication invariance", suite_q_multiplication},
        {"(l,r,s) calculus round-trip", suite_lrs_calculus},
    };

    int failures = 0;
    for (std::size_t i = 0; i < items.size(); ++i) {
        SuiteResult r = items[i].second();
        bool ok = r.passed();
        std::printf("%s criterion %02zu: %s\n", ok ? "PASS" : "FAIL", i + 1, items[i].first);
        if (!ok) {
            ++failures;
            for (const auto& c : r.checks)
                if (!c.passed)
                    std::printf("      failed: %s%s%s\n", c.name.c_str(),
                                c.detail.empty() ? "" : " -- ", c.detail.c_str());
        }
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(items.size()) - failures, items.size());
    return failures == 0 ? 0 : 1;
}
