#pragma once

#include <map>
#include <optional>
#include <vector>

#include "wordlib/coding.hpp"
#include "wordlib/quadratic.hpp"
#include "wordlib/rotation.hpp"
#include "wordlib/word.hpp"

namespace wordlib {

// Exchange of k intervals of [0,1): interval i (0-based) is
// X_i = [A_i, A_i + lambda_i) and moves to position perm^{-1}(i) in the
// image; flipped intervals are additionally reflected about their image
// midpoint.  Coding reads which characteristic set contains the point.
class IntervalExchange {
public:
    // perm[j] = index of the interval occupying image position j.
    // charsets: per symbol, a union of half-open intervals partitioning
    // [0,1); empty list means "the exchange intervals themselves".
    IntervalExchange(std::vector<QuadraticReal> lengths, std::vector<std::size_t> perm,
                     std::vector<bool> flips, Alphabet alphabet,
                     std::vector<std::pair<Arc, uint8_t>> charsets);

    // Convenience: default charsets and alphabet a, b, c, ...
    IntervalExchange(std::vector<QuadraticReal> lengths, std::vector<std::size_t> perm,
                     std::vector<bool> flips = {});

    std::size_t k() const { return lengths_.size(); }
    const std::vector<QuadraticReal>& lengths() const { return lengths_; }
    const std::vector<std::size_t>& perm() const { return perm_; }
    const std::vector<bool>& flips() const { return flips_; }
    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<std::pair<Arc, uint8_t>>& charsets() const { return charsets_; }

    // Left endpoints A_0 = 0 < A_1 < ... < A_{k-1}; A_k = 1 appended.
    const std::vector<QuadraticReal>& endpoints() const { return endpoints_; }
    // Translation constant of interval i.
    const QuadraticReal& translation(std::size_t i) const { return trans_.at(i); }

    QuadraticReal map(const QuadraticReal& x) const;
    QuadraticReal inverse(const QuadraticReal& y) const;

    // Points of discontinuity of the map and of the coding: interior
    // interval endpoints plus interior charset boundaries.
    std::vector<QuadraticReal> breakpoints() const;

    uint8_t symbol_at(const QuadraticReal& x, bool* on_boundary = nullptr) const;

private:
    std::vector<QuadraticReal> lengths_;
    std::vector<std::size_t> perm_;
    std::vector<bool> flips_;
    Alphabet alphabet_;
    std::vector<std::pair<Arc, uint8_t>> charsets_;
    std::vector<QuadraticReal> endpoints_;       // A_0..A_k
    std::vector<QuadraticReal> image_endpoints_; // B of image position 0..k
    std::vector<QuadraticReal> trans_;
};

CodedOrbit iet_code(const IntervalExchange& iet, const QuadraticReal& x0, std::size_t n,
                    BoundaryPolicy policy = BoundaryPolicy::LeftLimit);

struct RegularityViolation {
    std::size_t step; // n with T^n(a_i) = a_j
    std::size_t i, j; // 1-based discontinuity indices
};

// Checks T^n(a_i) != a_j for all interior discontinuities a_i, a_j and all
// 1 <= n <= N.
std::optional<RegularityViolation> iet_regularity(const IntervalExchange& iet, std::size_t N);

// View a coded rotation as the equivalent 2-interval exchange (lengths
// 1-alpha, alpha swapped), keeping the arc coding.
IntervalExchange as_interval_exchange(const RotationSystem& sys);

struct FactorIntervals {
    std::map<Word, QuadraticReal> lengths; // length-n coding -> total measure
    std::size_t cell_count = 0;            // refinement cells before merging
};

// Exact partition of [0,1) into cells with constant length-n coding.
FactorIntervals factor_interval_lengths(const IntervalExchange& iet, std::size_t n,
                                        std::size_t max_cells = 1000000);
FactorIntervals factor_interval_lengths(const RotationSystem& sys, std::size_t n,
                                        std::size_t max_cells = 1000000);

} // namespace wordlib
