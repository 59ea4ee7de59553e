#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wordlib/rauzy.hpp"

namespace wordlib {

// Rauzy graph with the two edges of every in-fork and every out-fork
// labeled 'l'/'r' and a set of vertices marked "-".  The labels say which
// side of the underlying exchange interval an extension lands on; the
// marks flag orientation-reversing vertices.
struct MarkedRauzyGraph {
    RauzyGraph base;
    std::map<std::size_t, char> in_labels;  // edge id -> label, edges into in-forks
    std::map<std::size_t, char> out_labels; // edge id -> label, edges out of out-forks
    std::set<std::size_t> minus_marks;      // vertex ids
};

struct MarkingViolation {
    std::size_t k = 0;
    Word factor;
    std::string rule;
};

struct MarkingResult {
    std::size_t k_min = 0, k_max = 0;
    bool oriented = false;
    std::vector<MarkedRauzyGraph> graphs; // one per k in [k_min, k_max]
    std::optional<MarkingViolation> violation;
    bool ok() const { return !violation.has_value(); }
};

// Searches for fork-edge labels (and, unless oriented, "-" marks closed
// under propagation to right descendants) such that along the whole chain
// G_{k_min} .. G_{k_max} every follower edge dropped at a bispecial vertex
// is an allowed label pair: {lr, rl} at unmarked vertices, {ll, rr} at
// marked ones.  Ties resolve to the lexicographically least assignment
// (forks ordered by factor, in-forks before out-forks, label order l < r).
MarkingResult find_marking(const FactorIndex& idx, std::size_t k_min, std::size_t k_max,
                           bool oriented);

// Re-checks a returned marking against the rules, with no search involved.
bool replay_marking(const FactorIndex& idx, const MarkingResult& m);

struct CriterionVerdict {
    enum class Status { PassesOriented, PassesGeneral, Fails };
    Status status = Status::Fails;
    std::size_t k_checked_min = 1, k_checked_max = 0; // the window examined
    std::size_t k_min = 0;                            // rules hold for k >= k_min
    std::optional<MarkingViolation> witness;          // set when status == Fails
    std::optional<MarkingResult> marking;             // certificate on success
    bool passes() const { return status != Status::Fails; }
    std::string status_str() const;
};

// Interval-exchange codability test over the window [1, k_max]: the
// complexity increment T(k+1) - T(k) must become constant, every fork must
// have valence 2 from some k_min on, and a consistent marking must exist
// from that k_min to k_max -- first without marks (oriented), then with.
CriterionVerdict iet_criterion(const FactorIndex& idx, std::size_t k_max);

} // namespace wordlib
