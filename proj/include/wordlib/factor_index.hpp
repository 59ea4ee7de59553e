#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "wordlib/word.hpp"

namespace wordlib {

// Index of all factors of a word up to a maximum length.  Factors of length
// n+1 are keyed by (id of their length-n prefix, last symbol), so lookup of
// a concrete word walks one level per symbol.  Immutable after build.
class FactorIndex {
public:
    struct Factor {
        std::size_t rep_pos = 0;   // leftmost occurrence
        std::size_t count = 0;     // occurrences fully inside the prefix
        uint64_t left_mask = 0;    // left-extension symbols
        uint64_t right_mask = 0;   // right-extension symbols
        uint32_t prefix_id = 0;    // id of the length-(n-1) prefix factor
        uint32_t suffix_id = 0;    // id of the length-(n-1) suffix factor
    };

    FactorIndex(Word source, std::size_t max_len);

    const Word& source() const { return source_; }
    std::size_t max_len() const { return max_len_; }

    // T(n): number of distinct factors of length n, 1 <= n <= max_len.
    std::size_t factor_count(std::size_t n) const { return levels_.at(n - 1).factors.size(); }

    const Factor& factor(std::size_t n, std::size_t id) const { return levels_.at(n - 1).factors.at(id); }
    std::size_t level_size(std::size_t n) const { return levels_.at(n - 1).factors.size(); }

    Word factor_word(std::size_t n, std::size_t id) const {
        return source_.subword(factor(n, id).rep_pos, n);
    }

    // Id of factor v if it occurs, by walking levels.
    std::optional<std::size_t> find(const Word& v) const;

    // Id of the length-n factor starting at position pos of the source.
    std::size_t id_at(std::size_t n, std::size_t pos) const;

    // Id of the length-n factor whose length-(n-1) prefix has id prefix_id
    // and whose last symbol is sym, if that factor occurs.
    std::optional<std::size_t> child(std::size_t n, std::size_t prefix_id, uint8_t sym) const {
        const Level& lvl = levels_.at(n - 1);
        auto it = lvl.children.find((static_cast<uint64_t>(prefix_id) << 8) | sym);
        if (it == lvl.children.end()) return std::nullopt;
        return it->second;
    }

    static int popcount(uint64_t m) { return __builtin_popcountll(m); }

private:
    struct Level {
        std::vector<Factor> factors;
        // (prefix_id << 8 | symbol) -> id at this level
        std::unordered_map<uint64_t, uint32_t> children;
    };

    Word source_;
    std::size_t max_len_;
    std::vector<Level> levels_;
};

} // namespace wordlib
