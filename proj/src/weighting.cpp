#include "brauer/weighting.hpp"

#include <stdexcept>

namespace brauer {

VertexWeightData vertex_data(const RibbonBrauerGraph& g, const BrauerWeighting& W, int vertex) {
    if (W.w.size() != static_cast<size_t>(g.num_darts()))
        throw std::invalid_argument("weighting is not total on the graph's successor pairs");
    VertexWeightData out;
    for (DartId d = 0; d < g.num_darts(); ++d) {
        if (g.vertex_of(d) != vertex) continue;
        if (out.base == -1 || g.dart_label_less(d, out.base)) out.base = d;
    }
    if (out.base == -1) throw std::invalid_argument("vertex has no incident darts");

    out.darts = successor_sequence(g, out.base);
    GroupElement acc = W.group.identity();
    for (DartId d : out.darts) {
        out.partial.push_back(acc);
        acc = W.group.compose(acc, W.at(d));
    }
    out.omega = acc;
    out.ord = W.group.element_order(out.omega);
    out.cosets = W.group.coset_partition(out.omega);
    return out;
}

std::vector<std::string> validate_weighting(const RibbonBrauerGraph& g, const BrauerWeighting& W) {
    std::vector<std::string> issues;
    if (W.w.size() != static_cast<size_t>(g.num_darts())) {
        issues.push_back("weighting must assign an element to every successor pair (dart)");
        return issues;
    }
    for (const GroupElement& e : W.w) {
        if (!W.group.contains(e)) {
            issues.push_back("weight value outside the target group");
            return issues;
        }
    }
    // rotation products only; coset data is not needed (and the group may be
    // too large to enumerate)
    std::vector<GroupElement> omega(g.num_vertices(), W.group.identity());
    for (DartId d = 0; d < g.num_darts(); ++d) {
        int v = g.vertex_of(d);
        omega[v] = W.group.compose(omega[v], W.at(d));
    }
    for (int v = 0; v < g.num_vertices(); ++v) {
        long long ord = W.group.element_order(omega[v]);
        if (g.multiplicity[v] % ord != 0) {
            issues.push_back("ord(" + g.vertex_labels[v] + ") = " + std::to_string(ord) +
                             " does not divide m = " + std::to_string(g.multiplicity[v]));
        }
    }
    return issues;
}

void require_valid_weighting(const RibbonBrauerGraph& g, const BrauerWeighting& W) {
    auto issues = validate_weighting(g, W);
    if (issues.empty()) return;
    std::string msg = "not a Brauer weighting:";
    for (const auto& s : issues) msg += "\n  " + s;
    throw std::invalid_argument(msg);
}

} // namespace brauer
