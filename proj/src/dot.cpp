#include "sban/dot.hpp"

#include <sstream>

namespace sban {

std::string necc_to_dot(const ConfusabilityGraph& g) {
    std::ostringstream out;
    out << "graph confusability {\n";
    out << "  node [shape=box, fontname=\"monospace\"];\n";
    const Word count = full_mask(g.n) + 1;
    for (Word x = 0; x < count; ++x)
        out << "  \"" << config_to_string(x, g.n) << "\";\n";
    const auto& edges = g.graph.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
        out << "  \"" << config_to_string(edges[e].first, g.n) << "\" -- \""
            << config_to_string(edges[e].second, g.n) << "\"";
        if (e < g.intervals.size()) {
            const StepInterval& iv = g.intervals[e];
            out << " [label=\"⟦" << iv.lo << "," << iv.hi << "⟧\"]";
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string quotient_to_dot(const ImageQuotientGraph& g) {
    std::ostringstream out;
    out << "graph image_quotient {\n";
    out << "  node [shape=ellipse, fontname=\"monospace\"];\n";
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        out << "  \"" << config_to_string(g.vertices[i], g.n) << "\" [label=\""
            << config_to_string(g.vertices[i], g.n) << "\\n(" << g.classes[i].size()
            << " preimages)\"];\n";
    }
    for (const auto& [u, v] : g.graph.edges())
        out << "  \"" << config_to_string(g.vertices[u], g.n) << "\" -- \""
            << config_to_string(g.vertices[v], g.n) << "\";\n";
    out << "}\n";
    return out.str();
}

} // namespace sban
