#pragma once

#include <vector>

#include "wordlib/coding.hpp"
#include "wordlib/quadratic.hpp"
#include "wordlib/word.hpp"

namespace wordlib {

// Half-open arc [lo, hi) within [0, 1).
struct Arc {
    QuadraticReal lo, hi;
};

// Circle rotation x -> x + alpha (mod 1) coded by an arc partition of [0,1):
// each arc carries a symbol, several arcs may share one.
class RotationSystem {
public:
    RotationSystem(QuadraticReal alpha, Alphabet alphabet,
                   std::vector<std::pair<Arc, uint8_t>> arcs, QuadraticReal start);

    const QuadraticReal& alpha() const { return alpha_; }
    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<std::pair<Arc, uint8_t>>& arcs() const { return arcs_; } // sorted by lo
    const QuadraticReal& start() const { return start_; }

    // Symbol of the arc containing x, plus whether x sits exactly on an arc
    // endpoint.
    uint8_t symbol_at(const QuadraticReal& x, bool* on_boundary = nullptr) const;

private:
    QuadraticReal alpha_;
    Alphabet alphabet_;
    std::vector<std::pair<Arc, uint8_t>> arcs_;
    QuadraticReal start_;
};

CodedOrbit rotation_code(const RotationSystem& sys, std::size_t n,
                         BoundaryPolicy policy = BoundaryPolicy::LeftLimit);

// w_i = floor(alpha (i+1) + beta) - floor(alpha i + beta), over {0, 1}.
Word mechanical_word(const QuadraticReal& alpha, const QuadraticReal& beta, std::size_t n);

// The system (alpha + r)/q with arcs {x | qx mod 1 in U} and start x0/q;
// its coded word equals the original's.
RotationSystem q_multiply(const RotationSystem& sys, unsigned long q, long r);

// Two-arc Sturmian system: a = [0, alpha), b = [alpha, 1).
RotationSystem sturmian_rotation(const QuadraticReal& alpha, const QuadraticReal& start);

} // namespace wordlib
