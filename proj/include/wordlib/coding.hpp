#pragma once

#include <vector>

#include "wordlib/quadratic.hpp"
#include "wordlib/word.hpp"

namespace wordlib {

enum class BoundaryPolicy {
    LeftLimit, // resolve boundary hits by the half-open convention and log them
    Strict,    // stop coding at the first boundary hit
};

struct BoundaryHit {
    std::size_t step;
    QuadraticReal point;
};

struct CodedOrbit {
    Word word;
    std::vector<BoundaryHit> boundary_hits;
    BoundaryPolicy policy = BoundaryPolicy::LeftLimit;
    // true when a strict-policy hit truncated the word below the request
    bool truncated = false;
};

} // namespace wordlib
