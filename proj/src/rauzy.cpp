#include "wordlib/rauzy.hpp"

#include <algorithm>
#include <stdexcept>

namespace wordlib {

RauzyGraph RauzyGraph::from_edges(std::size_t vertices, std::vector<Edge> edge_list) {
    RauzyGraph g;
    g.vertex_count = vertices;
    g.edges = std::move(edge_list);
    g.out.assign(vertices, {});
    g.in.assign(vertices, {});
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        if (g.edges[e].from >= vertices || g.edges[e].to >= vertices)
            throw std::invalid_argument("rauzy: edge endpoint out of range");
        g.out[g.edges[e].from].push_back(e);
        g.in[g.edges[e].to].push_back(e);
    }
    return g;
}

Word RauzyGraph::vertex_factor(std::size_t v) const {
    if (!idx) throw std::logic_error("rauzy: graph has no factor index");
    return idx->factor_word(k, v);
}

Word RauzyGraph::edge_factor(std::size_t e) const {
    if (!idx) throw std::logic_error("rauzy: graph has no factor index");
    return idx->factor_word(k + 1, e);
}

RauzyGraph build_rauzy(const FactorIndex& idx, std::size_t k) {
    if (k == 0 || k + 1 > idx.max_len())
        throw std::invalid_argument("rauzy: k out of range for this index");
    std::vector<RauzyGraph::Edge> edges;
    edges.reserve(idx.level_size(k + 1));
    for (std::size_t e = 0; e < idx.level_size(k + 1); ++e) {
        const auto& f = idx.factor(k + 1, e);
        edges.push_back({f.prefix_id, f.suffix_id});
    }
    RauzyGraph g = RauzyGraph::from_edges(idx.level_size(k), std::move(edges));
    g.k = k;
    g.idx = &idx;
    return g;
}

Digraph follower(const RauzyGraph& g) {
    Digraph d;
    d.n = g.edges.size();
    for (std::size_t v = 0; v < g.vertex_count; ++v)
        for (std::size_t e1 : g.in[v])
            for (std::size_t e2 : g.out[v]) d.arcs.emplace_back(e1, e2);
    std::sort(d.arcs.begin(), d.arcs.end());
    return d;
}

static void reach(const RauzyGraph& g, std::size_t start, bool forward, std::vector<bool>& seen) {
    std::vector<std::size_t> stack = {start};
    seen[start] = true;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t e : forward ? g.out[v] : g.in[v]) {
            std::size_t u = forward ? g.edges[e].to : g.edges[e].from;
            if (!seen[u]) {
                seen[u] = true;
                stack.push_back(u);
            }
        }
    }
}

bool strongly_connected(const RauzyGraph& g) {
    if (g.vertex_count <= 1) return true;
    std::vector<bool> fwd(g.vertex_count, false), bwd(g.vertex_count, false);
    reach(g, 0, true, fwd);
    reach(g, 0, false, bwd);
    for (std::size_t v = 0; v < g.vertex_count; ++v)
        if (!fwd[v] || !bwd[v]) return false;
    return true;
}

std::string LrsShape::str() const {
    return "(" + std::to_string(l) + "," + std::to_string(r) + "," + std::to_string(s) + ")";
}

bool valid_shape(const LrsShape& x) { return x.r >= 1 && x.s >= 1 && !(x.r == 1 && x.s == 1); }

SlowClass classify_slow(const RauzyGraph& g) {
    std::vector<std::size_t> in_forks, out_forks;
    for (std::size_t v = 0; v < g.vertex_count; ++v) {
        if (g.in_degree(v) >= 3 || g.out_degree(v) >= 3) return {SlowType::NotSlow, std::nullopt};
        if (g.in_degree(v) >= 2) in_forks.push_back(v);
        if (g.out_degree(v) >= 2) out_forks.push_back(v);
    }
    if (in_forks.size() != 1 || out_forks.size() != 1) return {SlowType::NotSlow, std::nullopt};
    if (!strongly_connected(g)) return {SlowType::TypeB, std::nullopt};

    const std::size_t J = in_forks[0], F = out_forks[0];
    auto arc_len = [&](std::size_t e0) -> std::optional<std::size_t> {
        std::size_t len = 1, v = g.edges[e0].to;
        while (v != J) {
            if (g.out[v].size() != 1 || len > g.edges.size()) return std::nullopt;
            v = g.edges[g.out[v][0]].to;
            ++len;
        }
        return len;
    };
    auto r = arc_len(g.out[F][0]), s = arc_len(g.out[F][1]);
    if (!r || !s) return {SlowType::NotSlow, std::nullopt};

    std::size_t l = 0, v = J;
    while (v != F) {
        if (g.out[v].size() != 1 || l > g.edges.size()) return {SlowType::NotSlow, std::nullopt};
        v = g.edges[g.out[v][0]].to;
        ++l;
    }

    LrsShape shape{l, std::min(*r, *s), std::max(*r, *s)};
    if (!valid_shape(shape) || l + *r + *s != g.edges.size())
        return {SlowType::NotSlow, std::nullopt};
    return {SlowType::TypeA, shape};
}

std::vector<LrsShape> successor_lrs(const LrsShape& x) {
    if (!valid_shape(x)) throw std::invalid_argument("lrs: invalid shape " + x.str());
    if (x.l >= 1) return {{x.l - 1, x.r + 1, x.s + 1}};
    // degenerate case: the bispecial vertex resolves into one of two shapes;
    // a branch whose bridge would be empty cannot occur
    std::vector<LrsShape> out;
    if (x.s >= 2) out.push_back({x.s - 1, 1, x.r + 1});
    if (x.r >= 2) out.push_back({x.r - 1, 1, x.s + 1});
    return out;
}

LrsShape predecessor_lrs(const LrsShape& x) {
    if (!valid_shape(x)) throw std::invalid_argument("lrs: invalid shape " + x.str());
    if (x.r > 1 && x.s > 1) return {x.l + 1, x.r - 1, x.s - 1};
    // exactly one arc is a single edge: the predecessor is degenerate
    std::size_t other = x.r == 1 ? x.s : x.r;
    return {0, x.l + 1, other - 1};
}

std::vector<EvolutionStep> evolution_trace(const FactorIndex& idx, std::size_t k_max) {
    if (k_max == 0 || k_max + 1 > idx.max_len())
        throw std::invalid_argument("rauzy: k_max out of range for this index");
    std::vector<EvolutionStep> trace;
    for (std::size_t k = 1; k <= k_max; ++k) {
        RauzyGraph g = build_rauzy(idx, k);
        EvolutionStep step;
        step.k = k;
        for (std::size_t v = 0; v < g.vertex_count; ++v) {
            if (g.in_degree(v) >= 2) step.in_fork_valences.push_back(g.in_degree(v));
            if (g.out_degree(v) >= 2) step.out_fork_valences.push_back(g.out_degree(v));
            if (g.in_degree(v) >= 2 && g.out_degree(v) >= 2)
                step.bispecials.push_back(g.vertex_factor(v));
        }
        std::sort(step.bispecials.begin(), step.bispecials.end());
        if (k + 2 <= idx.max_len()) {
            for (std::size_t v = 0; v < g.vertex_count; ++v)
                for (std::size_t e1 : g.in[v])
                    for (std::size_t e2 : g.out[v]) {
                        uint8_t y = idx.source()[idx.factor(k + 1, e2).rep_pos + k];
                        if (!idx.child(k + 2, e1, y))
                            step.removed_factors.push_back(g.edge_factor(e1).append(y));
                    }
            std::sort(step.removed_factors.begin(), step.removed_factors.end());
            step.follower_equal = step.removed_factors.empty();
        }
        trace.push_back(std::move(step));
    }
    return trace;
}

} // namespace wordlib
