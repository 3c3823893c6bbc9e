#include "brauer/random_gen.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace brauer {

RibbonBrauerGraph random_graph(Rng& rng, const GraphGenOptions& opts) {
    int edges = 1 + static_cast<int>(rng.next(opts.max_edges));
    int vertices = 1 + static_cast<int>(rng.next(edges + 1));
    if (!opts.allow_loops && vertices < 2) vertices = 2;

    std::vector<std::pair<int, int>> ends;
    for (int v = 1; v < vertices; ++v) {
        ends.push_back({static_cast<int>(rng.next(v)), v});  // spanning tree
    }
    while (static_cast<int>(ends.size()) < edges) {
        int u = static_cast<int>(rng.next(vertices));
        int w = static_cast<int>(rng.next(vertices));
        if (!opts.allow_loops) {
            for (int tries = 0; u == w && tries < 32; ++tries)
                w = static_cast<int>(rng.next(vertices));
            if (u == w) continue;
        }
        ends.push_back({u, w});
    }

    std::vector<GraphVertexSpec> vspecs;
    for (int v = 0; v < vertices; ++v) {
        vspecs.push_back({"v" + std::to_string(v),
                          1 + static_cast<int>(rng.next(opts.max_multiplicity))});
    }
    std::vector<GraphEdgeSpec> especs;
    std::map<std::string, std::vector<std::string>> rotation;
    for (int e = 0; e < edges; ++e) {
        std::string id = "e" + std::to_string(e);
        especs.push_back({id, "v" + std::to_string(ends[e].first),
                          "v" + std::to_string(ends[e].second)});
        rotation["v" + std::to_string(ends[e].first)].push_back(id + ".0");
        rotation["v" + std::to_string(ends[e].second)].push_back(id + ".1");
    }
    for (auto& [vid, darts] : rotation) {
        for (size_t i = darts.size(); i > 1; --i) {
            std::swap(darts[i - 1], darts[rng.next(i)]);
        }
    }

    std::map<std::string, std::string> quantizer;
    if (opts.quantized) {
        static const char* palette[] = {"1", "-1", "2", "1/2", "-2/3", "3", "5/2", "-3/4"};
        // quantizer lives on darts of edges not truncated at either end;
        // build once without q to find them
        RibbonBrauerGraph bare = make_graph(vspecs, especs, rotation);
        for (DartId d : index_sets(bare).x_darts) {
            quantizer[bare.dart_name(d)] = palette[rng.next(8)];
        }
    }
    return make_graph(vspecs, especs, rotation, quantizer);
}

std::optional<BrauerWeighting> random_brauer_weighting(Rng& rng, const RibbonBrauerGraph& g,
                                                       const AbelianGroup& group, int attempts,
                                                       bool need_connected_cover) {
    std::vector<GroupElement> elements = group.elements();

    // admissible rotation products per vertex: order divides multiplicity
    std::vector<std::vector<GroupElement>> admissible(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) {
        for (const GroupElement& e : elements) {
            if (g.multiplicity[v] % group.element_order(e) == 0) admissible[v].push_back(e);
        }
    }
    std::vector<DartId> base(g.num_vertices(), -1);
    for (DartId d = 0; d < g.num_darts(); ++d) {
        int v = g.vertex_of(d);
        if (base[v] == -1 || g.dart_label_less(d, base[v])) base[v] = d;
    }

    for (int attempt = 0; attempt < attempts; ++attempt) {
        BrauerWeighting W;
        W.group = group;
        W.w.resize(g.num_darts());
        for (DartId d = 0; d < g.num_darts(); ++d) {
            W.w[d] = elements[rng.next(elements.size())];
        }
        for (int v = 0; v < g.num_vertices(); ++v) {
            GroupElement omega = group.identity();
            for (DartId d : successor_sequence(g, base[v])) omega = group.compose(omega, W.w[d]);
            GroupElement target = admissible[v][rng.next(admissible[v].size())];
            W.w[base[v]] =
                group.compose(W.w[base[v]], group.compose(group.inverse(omega), target));
        }
        if (!validate_weighting(g, W).empty()) continue;
        if (need_connected_cover) {
            try {
                covering_graph(g, W);
            } catch (const CoverDisconnected&) {
                continue;
            }
        }
        return W;
    }
    return std::nullopt;
}

} // namespace brauer
