#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "wordlib/factor_index.hpp"
#include "wordlib/word.hpp"

namespace wordlib {

// Rauzy graph of order k: vertices are the length-k factors, edges the
// length-(k+1) factors, each running from its length-k prefix to its
// length-k suffix.  Edge i is the level-(k+1) factor with id i when the
// graph comes from a FactorIndex.
struct RauzyGraph {
    struct Edge {
        std::size_t from = 0;
        std::size_t to = 0;
    };

    std::size_t k = 0;
    const FactorIndex* idx = nullptr; // set when built from a word; non-owning
    std::size_t vertex_count = 0;
    std::vector<Edge> edges;
    std::vector<std::vector<std::size_t>> out, in; // vertex -> incident edge ids

    static RauzyGraph from_edges(std::size_t vertices, std::vector<Edge> edge_list);

    std::size_t in_degree(std::size_t v) const { return in.at(v).size(); }
    std::size_t out_degree(std::size_t v) const { return out.at(v).size(); }

    // Factor words; require idx != nullptr.
    Word vertex_factor(std::size_t v) const;
    Word edge_factor(std::size_t e) const;
};

RauzyGraph build_rauzy(const FactorIndex& idx, std::size_t k);

// Plain digraph, used for the follower (line-graph) construction.
struct Digraph {
    std::size_t n = 0;
    std::vector<std::pair<std::size_t, std::size_t>> arcs;
};

// Vertices of the follower are the edges of g; there is an arc e1 -> e2
// whenever head(e1) = tail(e2).  For a graph built from a word, the order-
// (k+1) Rauzy graph is a subgraph of the follower of the order-k graph.
Digraph follower(const RauzyGraph& g);

bool strongly_connected(const RauzyGraph& g);

// Shape of a slow-growth Rauzy graph: one in-fork and one out-fork joined
// by a bridge of l edges, with two arcs of r and s edges running back.
// l = 0 means the forks coincide (a bispecial vertex); r = s = 1 cannot
// occur.  Arcs are kept as an ordered pair.
struct LrsShape {
    std::size_t l = 0, r = 1, s = 2;
    bool operator==(const LrsShape& o) const { return l == o.l && r == o.r && s == o.s; }
    bool operator<(const LrsShape& o) const {
        return std::tie(l, r, s) < std::tie(o.l, o.r, o.s);
    }
    std::string str() const;
};

bool valid_shape(const LrsShape& x);

enum class SlowType { TypeA, TypeB, NotSlow };

struct SlowClass {
    SlowType type = SlowType::NotSlow;
    std::optional<LrsShape> shape; // set for TypeA, arcs sorted r <= s
};

// TypeA: exactly one in-fork and one out-fork (possibly equal), both of
// valence 2, and strongly connected; TypeB: the same fork census but two
// cycles joined by a one-way path; NotSlow otherwise.
SlowClass classify_slow(const RauzyGraph& g);

// Shape evolution.  A bridged shape has a unique successor; a degenerate
// one (l = 0) has up to two, the branches that would need a nonpositive
// bridge being dropped.
std::vector<LrsShape> successor_lrs(const LrsShape& x);

// Unique predecessor; throws for (l,1,1), which is not a valid shape
// anyway, and may return the formal (0,1,1) for the base shape (0,1,2).
LrsShape predecessor_lrs(const LrsShape& x);

struct EvolutionStep {
    std::size_t k = 0;
    std::vector<std::size_t> in_fork_valences, out_fork_valences;
    std::vector<Word> bispecials;
    // follower edges of G_k absent from G_{k+1}: the minimal forbidden
    // (k+2)-words; set only when the index reaches length k+2
    std::vector<Word> removed_factors;
    std::optional<bool> follower_equal;
};

std::vector<EvolutionStep> evolution_trace(const FactorIndex& idx, std::size_t k_max);

} // namespace wordlib
