#pragma once

#include <gmpxx.h>

#include <optional>
#include <string_view>
#include <vector>

#include "wordlib/analysis.hpp"
#include "wordlib/word.hpp"

namespace wordlib {

// Monoid morphism A* -> A*, given by one nonempty image per symbol.
class Morphism {
public:
    Morphism(Alphabet alphabet, std::vector<Word> images);

    // One rule per line, "a -> ab".  The alphabet is the sorted set of
    // left-hand sides; every symbol needs a rule.
    static Morphism parse(std::string_view text);

    static Morphism identity(const Alphabet& alphabet);

    const Alphabet& alphabet() const { return alphabet_; }
    const Word& image(uint8_t sym) const { return images_.at(sym); }

    // Prolongable on `sym`: image(sym) starts with sym and has length >= 2,
    // so iterating from sym converges to a fixed point.
    bool prolongable_on(uint8_t sym) const {
        const Word& im = images_.at(sym);
        return im.size() >= 2 && im[0] == sym;
    }

    std::string str() const;

private:
    Alphabet alphabet_;
    std::vector<Word> images_;
};

Word apply(const Morphism& m, const Word& w);

// First `len` symbols of the fixed point of m starting with `seed`.
Word fixed_point_prefix(const Morphism& m, uint8_t seed, std::size_t len);

struct SturmianMorphismEvidence {
    bool sturmian = false;
    Word image; // image of the test word abbabababbaba
    std::optional<BalanceWitness> witness;
};

// Balance test on the image of abbabababbaba decides Sturmian-ness for
// binary morphisms.
SturmianMorphismEvidence is_sturmian_morphism(const Morphism& m);

// Directive sequence d_0, d_1, ...; d_0 may be zero, later entries positive.
class DirectiveSequence {
public:
    explicit DirectiveSequence(std::vector<unsigned> entries);
    static DirectiveSequence parse(std::string_view text); // comma-separated

    const std::vector<unsigned>& entries() const { return entries_; }
    // Entry n, repeating the final entry past the end of the list.
    unsigned entry(std::size_t n) const { return n < entries_.size() ? entries_[n] : entries_.back(); }

private:
    std::vector<unsigned> entries_;
};

// Prefix of the standard word s_{-1} = b, s_0 = a, s_n = s_{n-1}^{d_{n-1}} s_{n-2}.
Word standard_word(const DirectiveSequence& d, std::size_t len);

// Convergent of [0; 1+d_0, d_1, ..., d_m] over all listed entries, exact.
mpq_class directive_convergent(const DirectiveSequence& d);

// tau_w(a) for the directive word w, composed right to left:
// tau_{xy}(a) = tau_x(tau_y(a)), where tau_x(y) = x if y = x, else xy.
Word rauzy_rules_word(const Word& directive, uint8_t a);

// Iterated palindromic closure u_{n+1} = (u_n . delta_n)^+ from u_0 = empty,
// cycling delta; first `len` symbols.
Word closure_word(const Word& delta, std::size_t len);

// Prefix of the periodic word (U_k)^inf, U_k = U_{k-1} a_k U_{k-1},
// U_1 = a; |U_k| = 2^k - 1.  Requires 3 <= k <= 8.
Word fraenkel_word(std::size_t k, std::size_t len);

// Preset generators.
Morphism fibonacci_morphism();  // a -> ab, b -> a
Morphism thue_morse_morphism(); // a -> ab, b -> ba
Morphism tribonacci_morphism(); // a -> ab, b -> ac, c -> a

} // namespace wordlib
