#pragma once

#include <gmpxx.h>

#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "wordlib/factor_index.hpp"
#include "wordlib/word.hpp"

namespace wordlib {

// --- complexity ------------------------------------------------------------

// T(1..maxLen) for the indexed prefix.
std::vector<std::size_t> complexity_profile(const FactorIndex& idx);

enum class Side { Left, Right };

struct SpecialFactor {
    Word factor;
    std::vector<uint8_t> extensions; // extension symbols, ascending
    std::size_t valence;
};

// Factors of length n with >= 2 extensions on the given side.
std::vector<SpecialFactor> special_factors(const FactorIndex& idx, std::size_t n, Side side);

// --- balance ---------------------------------------------------------------

struct BalanceWitness {
    Word u;
    Word v;
    uint8_t symbol;
    std::size_t delta; // | |u|_sym - |v|_sym |, >= m+1 for a violation
};

struct BalanceResult {
    std::optional<BalanceWitness> witness; // empty when the word is m-balanced
    bool ok() const { return !witness.has_value(); }
};

// m-balance over all factor pairs of length <= max_factor_len (defaults to
// |w|).  A violation yields a shortest witness, leftmost occurrences first.
BalanceResult is_m_balanced(const Word& w, std::size_t m, std::optional<uint8_t> symbol = std::nullopt,
                            std::size_t max_factor_len = 0);

// For an unbalanced binary word, the core word u with both a.u.a and b.u.b
// factors of w.
std::optional<Word> unbalance_core(const Word& w);

struct Reduction {
    std::size_t n;
    Word red;
};

// Decomposition w = S A_1..A_k P with A_i in {b a^n, b a^{n+1}} and the
// derived word Red(w).  Symbol 0 plays "a", symbol 1 plays "b".
std::optional<Reduction> reduce_balanced(const Word& w);

// Symbols x with wx (or xw) still 1-balanced.  Requires w 1-balanced.
std::vector<uint8_t> balanced_extensions(const Word& w, Side side);

// --- palindromes -----------------------------------------------------------

std::vector<Word> palindrome_census(const FactorIndex& idx, std::size_t n);

// Shortest palindrome with w as a prefix.
Word palindromic_closure(const Word& w);

// --- return words ----------------------------------------------------------

// Return words of v: the words between consecutive occurrences of v (empty
// when vv occurs; the overlap word when consecutive occurrences overlap).
// v is never a factor of a return word.  Requires >= 2 occurrences of v.
std::set<Word> return_words(const FactorIndex& idx, const Word& v);

// --- periodicity -----------------------------------------------------------

struct PeriodicityReport {
    // set when T(n) = T(n+1) for some n < maxLen
    std::optional<std::size_t> plateau_at;
    std::optional<std::size_t> period;
    // smallest length at which all factors have identical per-symbol counts
    std::optional<std::size_t> zero_balance_length;
    std::size_t checked_up_to = 0;
    bool eventually_periodic() const { return plateau_at.has_value(); }
};

PeriodicityReport periodicity_check(const FactorIndex& idx);

// --- frequencies -----------------------------------------------------------

// Occurrence count of v over the window count, exact.
mpq_class frequency(const FactorIndex& idx, const Word& v);

struct SpectrumVerdict {
    std::size_t cluster_count = 0;
    std::vector<mpq_class> cluster_means;
    // when exactly 3 clusters: whether max ~ sum of the other two
    std::optional<bool> sum_property;
};

SpectrumVerdict frequency_spectrum_check(const FactorIndex& idx, std::size_t n,
                                         const mpq_class& tolerance = mpq_class(1, 500));

// --- misc ------------------------------------------------------------------

mpq_class mismatch_density(const Word& w1, const Word& w2);

// True iff factor sets of both prefixes coincide for all lengths <= n.
bool equivalent_up_to(const FactorIndex& idx1, const FactorIndex& idx2, std::size_t n);

} // namespace wordlib
