#include "wordlib/marking.hpp"

#include <algorithm>
#include <stdexcept>

namespace wordlib {

namespace {

struct Fork {
    std::size_t vertex = 0;
    // the two incident edges, keyed and sorted by the extension symbol on
    // the fork side (first symbol for in-edges, last for out-edges)
    std::vector<std::pair<uint8_t, std::size_t>> edges;
};

struct LevelData {
    RauzyGraph g;
    std::vector<Fork> in_forks, out_forks; // sorted by fork vertex factor
    std::map<std::size_t, std::size_t> in_of, out_of; // vertex -> fork index
};

uint8_t first_symbol(const FactorIndex& idx, std::size_t n, std::size_t id) {
    return idx.source()[idx.factor(n, id).rep_pos];
}

uint8_t last_symbol(const FactorIndex& idx, std::size_t n, std::size_t id) {
    return idx.source()[idx.factor(n, id).rep_pos + n - 1];
}

// Builds fork data for G_{k_min}..G_{k_max}; a fork of valence >= 3 yields
// a violation (the marked-graph rules require valence exactly 2).
std::optional<MarkingViolation> build_levels(const FactorIndex& idx, std::size_t k_min,
                                             std::size_t k_max, std::vector<LevelData>& out) {
    for (std::size_t k = k_min; k <= k_max; ++k) {
        LevelData lvl;
        lvl.g = build_rauzy(idx, k);
        for (std::size_t v = 0; v < lvl.g.vertex_count; ++v) {
            if (lvl.g.in_degree(v) >= 3 || lvl.g.out_degree(v) >= 3)
                return MarkingViolation{k, idx.factor_word(k, v), "fork of valence >= 3"};
            if (lvl.g.in_degree(v) == 2) {
                Fork f{v, {}};
                for (std::size_t e : lvl.g.in[v]) f.edges.push_back({first_symbol(idx, k + 1, e), e});
                std::sort(f.edges.begin(), f.edges.end());
                lvl.in_forks.push_back(std::move(f));
            }
            if (lvl.g.out_degree(v) == 2) {
                Fork f{v, {}};
                for (std::size_t e : lvl.g.out[v]) f.edges.push_back({last_symbol(idx, k + 1, e), e});
                std::sort(f.edges.begin(), f.edges.end());
                lvl.out_forks.push_back(std::move(f));
            }
        }
        auto by_factor = [&](const Fork& a, const Fork& b) {
            return idx.factor_word(k, a.vertex) < idx.factor_word(k, b.vertex);
        };
        std::sort(lvl.in_forks.begin(), lvl.in_forks.end(), by_factor);
        std::sort(lvl.out_forks.begin(), lvl.out_forks.end(), by_factor);
        for (std::size_t i = 0; i < lvl.in_forks.size(); ++i) lvl.in_of[lvl.in_forks[i].vertex] = i;
        for (std::size_t i = 0; i < lvl.out_forks.size(); ++i) lvl.out_of[lvl.out_forks[i].vertex] = i;
        out.push_back(std::move(lvl));
    }
    return std::nullopt;
}

// choice 0: edges in symbol order get (l, r); choice 1: (r, l)
char label_of(const Fork& f, int choice, uint8_t sym) {
    int pos = f.edges[0].first == sym ? 0 : 1;
    return (pos ^ choice) ? 'r' : 'l';
}

struct Attempt {
    std::vector<std::vector<int>> in_choice, out_choice; // per level, per fork
    std::vector<std::map<std::size_t, int>> forced;      // per level: vertex -> +1/-1
    std::vector<std::set<std::size_t>> marks;            // per level: mark closure
};

// Inherit the base-level choices along prefix (in-forks) and suffix
// (out-forks) chains: an in-fork's edges carry the labels of the edges
// into its length-(k-1) prefix, an out-fork's those out of its suffix.
void propagate_choices(const FactorIndex& idx, const std::vector<LevelData>& L,
                       std::size_t k_min, Attempt& at) {
    for (std::size_t t = 1; t < L.size(); ++t) {
        std::size_t k = k_min + t;
        at.in_choice[t].resize(L[t].in_forks.size());
        at.out_choice[t].resize(L[t].out_forks.size());
        for (std::size_t i = 0; i < L[t].in_forks.size(); ++i) {
            std::size_t pid = idx.factor(k, L[t].in_forks[i].vertex).prefix_id;
            at.in_choice[t][i] = at.in_choice[t - 1][L[t - 1].in_of.at(pid)];
        }
        for (std::size_t i = 0; i < L[t].out_forks.size(); ++i) {
            std::size_t sid = idx.factor(k, L[t].out_forks[i].vertex).suffix_id;
            at.out_choice[t][i] = at.out_choice[t - 1][L[t - 1].out_of.at(sid)];
        }
    }
}

// Checks every follower edge dropped between G_k and G_{k+1} against the
// current labels; fills in the forced marked/unmarked state per bispecial
// vertex and the mark closure, or reports the first violation.
std::optional<MarkingViolation> check_transitions(const FactorIndex& idx,
                                                  const std::vector<LevelData>& L,
                                                  std::size_t k_min, bool oriented, Attempt& at) {
    at.forced.assign(L.size(), {});
    at.marks.assign(L.size(), {});
    for (std::size_t t = 0; t < L.size(); ++t) {
        std::size_t k = k_min + t;
        const LevelData& lvl = L[t];
        std::map<std::size_t, std::pair<bool, bool>> seen; // vertex -> (same pair, cross pair)
        for (std::size_t w = 0; w < lvl.g.vertex_count; ++w)
            for (std::size_t e1 : lvl.g.in[w])
                for (std::size_t e2 : lvl.g.out[w]) {
                    uint8_t y = last_symbol(idx, k + 1, e2);
                    if (idx.child(k + 2, e1, y)) continue;
                    auto in_it = lvl.in_of.find(w);
                    auto out_it = lvl.out_of.find(w);
                    if (in_it == lvl.in_of.end() || out_it == lvl.out_of.end())
                        return MarkingViolation{k, idx.factor_word(k, w),
                                                "edge removed at a non-bispecial vertex"};
                    char ci = label_of(lvl.in_forks[in_it->second], at.in_choice[t][in_it->second],
                                       first_symbol(idx, k + 1, e1));
                    char co = label_of(lvl.out_forks[out_it->second],
                                       at.out_choice[t][out_it->second], y);
                    auto& flags = seen[w];
                    (ci == co ? flags.first : flags.second) = true;
                }
        for (const auto& [w, flags] : seen) {
            if (flags.first && flags.second)
                return MarkingViolation{k, idx.factor_word(k, w),
                                        "removed edges mix straight and reversing label pairs"};
            if (flags.first && oriented)
                return MarkingViolation{k, idx.factor_word(k, w),
                                        "removed ll/rr pair needs a minus mark (oriented mode)"};
            at.forced[t][w] = flags.first ? +1 : -1;
        }
    }
    // minus marks propagate to right descendants: a vertex inherits the
    // mark of its length-(k-1) suffix
    for (std::size_t t = 0; t < L.size(); ++t) {
        std::size_t k = k_min + t;
        for (std::size_t v = 0; v < L[t].g.vertex_count; ++v) {
            bool m = false;
            auto it = at.forced[t].find(v);
            if (it != at.forced[t].end() && it->second > 0) m = true;
            if (!m && t > 0 && at.marks[t - 1].count(idx.factor(k, v).suffix_id)) m = true;
            if (!m) continue;
            if (it != at.forced[t].end() && it->second < 0)
                return MarkingViolation{k, idx.factor_word(k, v),
                                        "inherited minus mark conflicts with lr/rl removals"};
            at.marks[t].insert(v);
        }
    }
    return std::nullopt;
}

} // namespace

MarkingResult find_marking(const FactorIndex& idx, std::size_t k_min, std::size_t k_max,
                           bool oriented) {
    if (k_min < 1 || k_max < k_min || k_max + 2 > idx.max_len())
        throw std::invalid_argument("marking: k range out of bounds for this index");
    MarkingResult res;
    res.k_min = k_min;
    res.k_max = k_max;
    res.oriented = oriented;

    std::vector<LevelData> L;
    if (auto rule1 = build_levels(idx, k_min, k_max, L)) {
        res.violation = rule1;
        return res;
    }

    // free binary label choices live at the base level only; order forks by
    // factor (in-forks first on ties) for a lexicographic search
    struct Slot { Word factor; bool is_out; std::size_t fork; };
    std::vector<Slot> slots;
    for (std::size_t i = 0; i < L[0].in_forks.size(); ++i)
        slots.push_back({idx.factor_word(k_min, L[0].in_forks[i].vertex), false, i});
    for (std::size_t i = 0; i < L[0].out_forks.size(); ++i)
        slots.push_back({idx.factor_word(k_min, L[0].out_forks[i].vertex), true, i});
    std::sort(slots.begin(), slots.end(), [](const Slot& a, const Slot& b) {
        return std::tie(a.factor, a.is_out) < std::tie(b.factor, b.is_out);
    });
    if (slots.size() > 20) throw std::invalid_argument("marking: too many base-level forks");

    std::optional<MarkingViolation> best;
    for (std::size_t a = 0; a < (std::size_t(1) << slots.size()); ++a) {
        Attempt at;
        at.in_choice.assign(L.size(), {});
        at.out_choice.assign(L.size(), {});
        at.in_choice[0].resize(L[0].in_forks.size());
        at.out_choice[0].resize(L[0].out_forks.size());
        for (std::size_t j = 0; j < slots.size(); ++j) {
            int bit = (a >> (slots.size() - 1 - j)) & 1;
            (slots[j].is_out ? at.out_choice[0] : at.in_choice[0])[slots[j].fork] = bit;
        }
        propagate_choices(idx, L, k_min, at);
        auto bad = check_transitions(idx, L, k_min, oriented, at);
        if (!bad) {
            for (std::size_t t = 0; t < L.size(); ++t) {
                MarkedRauzyGraph mg;
                mg.base = L[t].g;
                for (std::size_t i = 0; i < L[t].in_forks.size(); ++i)
                    for (const auto& [sym, e] : L[t].in_forks[i].edges)
                        mg.in_labels[e] = label_of(L[t].in_forks[i], at.in_choice[t][i], sym);
                for (std::size_t i = 0; i < L[t].out_forks.size(); ++i)
                    for (const auto& [sym, e] : L[t].out_forks[i].edges)
                        mg.out_labels[e] = label_of(L[t].out_forks[i], at.out_choice[t][i], sym);
                if (!oriented) mg.minus_marks = at.marks[t];
                res.graphs.push_back(std::move(mg));
            }
            return res;
        }
        if (!best || bad->k < best->k) best = bad;
    }
    res.violation = best ? best
                         : MarkingViolation{k_min, Word(), "no fork structure to label"};
    return res;
}

bool replay_marking(const FactorIndex& idx, const MarkingResult& m) {
    if (!m.ok() || m.graphs.size() != m.k_max - m.k_min + 1) return false;
    for (std::size_t t = 0; t < m.graphs.size(); ++t) {
        std::size_t k = m.k_min + t;
        const MarkedRauzyGraph& mg = m.graphs[t];
        if (mg.base.k != k || mg.base.edges.size() != idx.level_size(k + 1)) return false;
        if (m.oriented && !mg.minus_marks.empty()) return false;

        for (std::size_t v = 0; v < mg.base.vertex_count; ++v) {
            // every fork has valence 2 and distinctly labeled edges
            if (mg.base.in_degree(v) >= 3 || mg.base.out_degree(v) >= 3) return false;
            if (mg.base.in_degree(v) == 2) {
                auto a = mg.in_labels.find(mg.base.in[v][0]), b = mg.in_labels.find(mg.base.in[v][1]);
                if (a == mg.in_labels.end() || b == mg.in_labels.end() || a->second == b->second)
                    return false;
            }
            if (mg.base.out_degree(v) == 2) {
                auto a = mg.out_labels.find(mg.base.out[v][0]), b = mg.out_labels.find(mg.base.out[v][1]);
                if (a == mg.out_labels.end() || b == mg.out_labels.end() || a->second == b->second)
                    return false;
            }
            if (t > 0) {
                const MarkedRauzyGraph& prev = m.graphs[t - 1];
                // label inheritance along the prefix / suffix chains
                if (mg.base.in_degree(v) == 2) {
                    std::size_t pid = idx.factor(k, v).prefix_id;
                    for (std::size_t e : mg.base.in[v]) {
                        uint8_t x = idx.source()[idx.factor(k + 1, e).rep_pos];
                        for (std::size_t pe : prev.base.in[pid])
                            if (idx.source()[idx.factor(k, pe).rep_pos] == x &&
                                prev.in_labels.at(pe) != mg.in_labels.at(e))
                                return false;
                    }
                }
                if (mg.base.out_degree(v) == 2) {
                    std::size_t sid = idx.factor(k, v).suffix_id;
                    for (std::size_t e : mg.base.out[v]) {
                        uint8_t y = idx.source()[idx.factor(k + 1, e).rep_pos + k];
                        for (std::size_t pe : prev.base.out[sid])
                            if (idx.source()[idx.factor(k, pe).rep_pos + k - 1] == y &&
                                prev.out_labels.at(pe) != mg.out_labels.at(e))
                                return false;
                    }
                }
                // minus marks propagate to right descendants
                if (prev.minus_marks.count(idx.factor(k, v).suffix_id) && !mg.minus_marks.count(v))
                    return false;
            }
        }

        // every dropped follower edge is an allowed pair for the vertex mark
        for (std::size_t w = 0; w < mg.base.vertex_count; ++w)
            for (std::size_t e1 : mg.base.in[w])
                for (std::size_t e2 : mg.base.out[w]) {
                    uint8_t y = idx.source()[idx.factor(k + 1, e2).rep_pos + k];
                    if (idx.child(k + 2, e1, y)) continue;
                    auto li = mg.in_labels.find(e1);
                    auto lo = mg.out_labels.find(e2);
                    if (li == mg.in_labels.end() || lo == mg.out_labels.end()) return false;
                    bool same = li->second == lo->second;
                    if (same != (mg.minus_marks.count(w) > 0)) return false;
                }
    }
    return true;
}

std::string CriterionVerdict::status_str() const {
    switch (status) {
        case Status::PassesOriented: return "passes-oriented";
        case Status::PassesGeneral: return "passes-general";
        default: return "fails";
    }
}

CriterionVerdict iet_criterion(const FactorIndex& idx, std::size_t k_max) {
    if (k_max < 4 || k_max + 2 > idx.max_len())
        throw std::invalid_argument("criterion: k_max out of bounds for this index");
    CriterionVerdict v;
    v.k_checked_min = 1;
    v.k_checked_max = k_max;
    const std::size_t limit = std::max<std::size_t>(2, k_max / 2);

    // affine complexity gate: T(k+1) - T(k) must settle well inside the window
    std::vector<std::size_t> d;
    for (std::size_t k = 1; k <= k_max + 1; ++k)
        d.push_back(idx.factor_count(k + 1) - idx.factor_count(k));
    std::size_t k0 = 1;
    for (std::size_t i = d.size() - 1; i >= 1; --i)
        if (d[i] != d[i - 1]) { k0 = i + 1; break; }
    if (k0 > limit) {
        v.status = CriterionVerdict::Status::Fails;
        v.witness = MarkingViolation{k0, Word(),
                                     "complexity increment still changes at k = " + std::to_string(k0)};
        return v;
    }

    for (bool oriented : {true, false}) {
        std::size_t km = std::max<std::size_t>(k0, 2);
        while (km <= limit) {
            MarkingResult m = find_marking(idx, km, k_max, oriented);
            if (m.ok()) {
                v.status = oriented ? CriterionVerdict::Status::PassesOriented
                                    : CriterionVerdict::Status::PassesGeneral;
                v.k_min = km;
                v.marking = std::move(m);
                v.witness.reset();
                return v;
            }
            v.witness = m.violation;
            km = std::max(km + 1, m.violation->k + 1);
        }
    }
    v.status = CriterionVerdict::Status::Fails;
    return v;
}

} // namespace wordlib
