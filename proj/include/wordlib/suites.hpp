#pragma once

#include <string>
#include <vector>

namespace wordlib {

struct SuiteCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::vector<SuiteCheck> checks;
    bool passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return !checks.empty();
    }
};

// Desk-scale verification suites.  Each bundles the checks of one headline
// property; the CLI exposes five of them and the acceptance runner drives
// the whole list.

// Sturmian three-way cross-check on one exact rotation word: affine
// complexity, 1-balance, and aperiodicity.
SuiteResult suite_equivalence();

// balanced(w) <=> reducible(w) and balanced(Red(w)), exhaustively over
// binary words containing b up to max_len.
SuiteResult suite_lemma34(std::size_t max_len = 16);

// Every balanced binary word extends on both sides without losing balance,
// exhaustively up to max_len.
SuiteResult suite_extension(std::size_t max_len = 14);

// Interval-exchange codability verdicts; word is one of fibonacci,
// tribonacci, 3iet, thue-morse, or all.
SuiteResult suite_iet_criterion(const std::string& word = "all");

// The 5-letter roulette configuration: balance, rational periodicity, and
// the Sturmian collapse.
SuiteResult suite_roulette();

// Remaining acceptance items.
SuiteResult suite_fibonacci_generators();
SuiteResult suite_thue_morse();
SuiteResult suite_palindromes_returns();
SuiteResult suite_three_iet();
SuiteResult suite_three_distance();
SuiteResult suite_slow_growth();
SuiteResult suite_q_multiplication();
SuiteResult suite_lrs_calculus();

} // namespace wordlib
