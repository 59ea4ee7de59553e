#include "wordlib/dot.hpp"

#include <algorithm>
#include <sstream>

namespace wordlib {

namespace {

std::string vertex_name(const RauzyGraph& g, std::size_t v) {
    return g.idx ? g.vertex_factor(v).str() : "v" + std::to_string(v);
}

std::string edge_name(const RauzyGraph& g, std::size_t e) {
    return g.idx ? g.edge_factor(e).str() : "e" + std::to_string(e);
}

std::string render(const RauzyGraph& g, const MarkedRauzyGraph* mg) {
    std::ostringstream os;
    os << "digraph rauzy {\n";
    os << "  rankdir=LR;\n";
    os << "  node [shape=ellipse];\n";

    std::vector<std::size_t> vs(g.vertex_count);
    for (std::size_t v = 0; v < g.vertex_count; ++v) vs[v] = v;
    std::sort(vs.begin(), vs.end(),
              [&](std::size_t a, std::size_t b) { return vertex_name(g, a) < vertex_name(g, b); });
    for (std::size_t v : vs) {
        os << "  \"" << vertex_name(g, v) << "\"";
        if (mg && mg->minus_marks.count(v)) os << " [shape=box, label=\"" << vertex_name(g, v) << " −\"]";
        os << ";\n";
    }

    std::vector<std::size_t> es(g.edges.size());
    for (std::size_t e = 0; e < g.edges.size(); ++e) es[e] = e;
    std::sort(es.begin(), es.end(), [&](std::size_t a, std::size_t b) {
        auto ka = std::make_tuple(vertex_name(g, g.edges[a].from), vertex_name(g, g.edges[a].to),
                                  edge_name(g, a));
        auto kb = std::make_tuple(vertex_name(g, g.edges[b].from), vertex_name(g, g.edges[b].to),
                                  edge_name(g, b));
        return ka < kb;
    });
    for (std::size_t e : es) {
        std::string label = edge_name(g, e);
        if (mg) {
            auto li = mg->in_labels.find(e);
            auto lo = mg->out_labels.find(e);
            if (lo != mg->out_labels.end()) label += " " + std::string(1, lo->second) + "→";
            if (li != mg->in_labels.end()) label += " →" + std::string(1, li->second);
        }
        os << "  \"" << vertex_name(g, g.edges[e].from) << "\" -> \"" << vertex_name(g, g.edges[e].to)
           << "\" [label=\"" << label << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace

std::string to_dot(const RauzyGraph& g) { return render(g, nullptr); }

std::string to_dot(const MarkedRauzyGraph& mg) { return render(mg.base, &mg); }

} // namespace wordlib
