#include "brauer/dot.hpp"

#include <sstream>

namespace brauer {

namespace {

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

} // namespace

std::string to_dot(const RibbonBrauerGraph& g) {
    std::ostringstream out;
    out << "graph brauer {\n";
    for (int v = 0; v < g.num_vertices(); ++v) {
        DartId base = -1;
        for (DartId d = 0; d < g.num_darts(); ++d) {
            if (g.vertex_of(d) != v) continue;
            if (base == -1 || g.dart_label_less(d, base)) base = d;
        }
        out << "  // rotation " << g.vertex_labels[v] << ":";
        for (DartId d : successor_sequence(g, base)) out << " " << g.dart_name(d);
        out << "\n";
        out << "  " << quote(g.vertex_labels[v]) << " [label=" << quote(
            g.vertex_labels[v] + " (m=" + std::to_string(g.multiplicity[v]) + ")") << "];\n";
    }
    for (int e = 0; e < g.num_edges(); ++e) {
        out << "  " << quote(g.vertex_labels[g.vertex_of(2 * e)]) << " -- "
            << quote(g.vertex_labels[g.vertex_of(2 * e + 1)]) << " [label="
            << quote(g.edge_labels[e]) << "];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace brauer
