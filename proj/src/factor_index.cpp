#include "wordlib/factor_index.hpp"

#include <stdexcept>

namespace wordlib {

FactorIndex::FactorIndex(Word source, std::size_t max_len) : source_(std::move(source)), max_len_(max_len) {
    if (max_len_ == 0 || max_len_ > source_.size())
        throw std::invalid_argument("factor index: maxLen must be in [1, |w|]");

    const auto& w = source_.data();
    const std::size_t n = w.size();
    levels_.resize(max_len_);

    // ids of length-(len-1) factors per start position; level 0 is epsilon.
    std::vector<uint32_t> prev_ids(n + 1, 0);
    std::vector<uint32_t> cur_ids(n + 1, 0);

    for (std::size_t len = 1; len <= max_len_; ++len) {
        Level& lvl = levels_[len - 1];
        for (std::size_t i = 0; i + len <= n; ++i) {
            uint64_t key = (static_cast<uint64_t>(prev_ids[i]) << 8) | w[i + len - 1];
            auto [it, inserted] = lvl.children.emplace(key, static_cast<uint32_t>(lvl.factors.size()));
            if (inserted) {
                Factor f;
                f.rep_pos = i;
                f.prefix_id = prev_ids[i];
                f.suffix_id = prev_ids[i + 1];
                lvl.factors.push_back(f);
            }
            uint32_t id = it->second;
            cur_ids[i] = id;
            Factor& f = lvl.factors[id];
            f.count++;
            if (i > 0) f.left_mask |= uint64_t{1} << w[i - 1];
            if (i + len < n) f.right_mask |= uint64_t{1} << w[i + len];
        }
        std::swap(prev_ids, cur_ids);
    }
}

std::optional<std::size_t> FactorIndex::find(const Word& v) const {
    if (v.size() == 0 || v.size() > max_len_) return std::nullopt;
    uint32_t id = 0;
    for (std::size_t len = 1; len <= v.size(); ++len) {
        const Level& lvl = levels_[len - 1];
        uint64_t key = (static_cast<uint64_t>(id) << 8) | v[len - 1];
        auto it = lvl.children.find(key);
        if (it == lvl.children.end()) return std::nullopt;
        id = it->second;
    }
    return id;
}

std::size_t FactorIndex::id_at(std::size_t n, std::size_t pos) const {
    auto id = find(source_.subword(pos, n));
    if (!id) throw std::logic_error("factor index: unindexed position");
    return *id;
}

} // namespace wordlib
