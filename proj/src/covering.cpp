#include "brauer/covering.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace brauer {

namespace {

bool degenerate_single_edge(const RibbonBrauerGraph& g) {
    return g.num_edges() == 1 && is_truncated(g, 0) && is_truncated(g, 1);
}

} // namespace

CoveringOutput covering_graph(const RibbonBrauerGraph& g, const BrauerWeighting& W) {
    require_valid(g);
    require_valid_weighting(g, W);

    const AbelianGroup& G = W.group;
    std::vector<GroupElement> elements = G.elements();
    long long n = G.order();
    int darts = g.num_darts();

    std::vector<VertexWeightData> vdata;
    vdata.reserve(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) vdata.push_back(vertex_data(g, W, v));
    // partial product from the vertex base dart, indexed by dart
    std::vector<GroupElement> partial(darts, G.identity());
    for (int v = 0; v < g.num_vertices(); ++v) {
        for (size_t i = 0; i < vdata[v].darts.size(); ++i)
            partial[vdata[v].darts[i]] = vdata[v].partial[i];
    }

    auto lift_id = [&](DartId d, long long gi) { return d * n + gi; };

    long long total = static_cast<long long>(darts) * n;
    std::vector<long long> sw(total);
    for (DartId d = 0; d < darts; ++d) {
        for (long long gi = 0; gi < n; ++gi) {
            GroupElement next = G.compose(elements[gi], W.at(d));
            sw[lift_id(d, gi)] = lift_id(g.sigma[d], G.index_of(next));
        }
    }

    // lifted vertices are the rotation cycles of the lift
    std::vector<int> cycle_of(total, -1);
    std::vector<std::vector<long long>> cycles;
    for (long long ld = 0; ld < total; ++ld) {
        if (cycle_of[ld] != -1) continue;
        int c = static_cast<int>(cycles.size());
        cycles.push_back({});
        long long cur = ld;
        do {
            cycle_of[cur] = c;
            cycles[c].push_back(cur);
            cur = sw[cur];
        } while (cur != ld);
    }

    // counting identities and the coset description of the cycles
    std::map<std::pair<int, int>, int> class_to_cycle;  // (base vertex, coset) -> cycle
    std::vector<int> classes_per_vertex(g.num_vertices(), 0);
    for (long long ld = 0; ld < total; ++ld) {
        DartId d = static_cast<DartId>(ld / n);
        long long gi = ld % n;
        int v = g.vertex_of(d);
        GroupElement key_elt = G.compose(elements[gi], G.inverse(partial[d]));
        int coset = vdata[v].cosets.index_of.at(key_elt);
        auto [it, inserted] = class_to_cycle.insert({{v, coset}, cycle_of[ld]});
        if (inserted) ++classes_per_vertex[v];
        else if (it->second != cycle_of[ld])
            throw std::logic_error("internal: lifted rotation cycles do not match coset classes");
    }
    if (static_cast<long long>(class_to_cycle.size()) != static_cast<long long>(cycles.size()))
        throw std::logic_error("internal: lifted vertex count does not match class count");
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (classes_per_vertex[v] != n / vdata[v].ord)
            throw std::logic_error("internal: wrong number of lifted vertices over " +
                                   g.vertex_labels[v]);
    }
    for (const auto& cyc : cycles) {
        DartId d = static_cast<DartId>(cyc.front() / n);
        int v = g.vertex_of(d);
        if (static_cast<long long>(cyc.size()) != vdata[v].ord * g.valency(v))
            throw std::logic_error("internal: lifted valency is not ord(mu) val(mu)");
        for (long long ld : cyc) {
            if (g.vertex_of(static_cast<DartId>(ld / n)) != v)
                throw std::logic_error("internal: lifted cycle mixes base vertices");
        }
    }

    // connectivity of the lift under rotation and pairing
    {
        std::vector<char> reach(total, 0);
        std::vector<long long> stack{0};
        reach[0] = 1;
        long long count = 1;
        while (!stack.empty()) {
            long long ld = stack.back();
            stack.pop_back();
            DartId d = static_cast<DartId>(ld / n);
            long long gi = ld % n;
            long long neighbours[2] = {sw[ld], lift_id(g.alpha(d), gi)};
            for (long long next : neighbours) {
                if (!reach[next]) {
                    reach[next] = 1;
                    ++count;
                    stack.push_back(next);
                }
            }
        }
        if (count != total)
            throw CoverDisconnected(
                "covering graph is disconnected: the weighting's voltages generate a proper "
                "subgroup; the lift splits into " +
                std::to_string(total / count) + " components");
    }

    // assemble: lifted edge (e, g) owns lifted darts (2e, g), (2e+1, g)
    CoveringOutput out;
    RibbonBrauerGraph& cover = out.cover;
    struct LiftedEdge {
        std::string label;
        int base_edge;
        long long gi;
    };
    std::vector<LiftedEdge> ledges;
    for (int e = 0; e < g.num_edges(); ++e) {
        for (long long gi = 0; gi < n; ++gi) {
            ledges.push_back({g.edge_labels[e] + "@" + G.to_string(elements[gi]), e, gi});
        }
    }
    std::sort(ledges.begin(), ledges.end(),
              [](const LiftedEdge& a, const LiftedEdge& b) { return a.label < b.label; });
    // new dart id of lifted dart
    std::vector<int> new_dart(total, -1);
    for (size_t i = 0; i < ledges.size(); ++i) {
        new_dart[lift_id(2 * ledges[i].base_edge, ledges[i].gi)] = static_cast<int>(2 * i);
        new_dart[lift_id(2 * ledges[i].base_edge + 1, ledges[i].gi)] = static_cast<int>(2 * i + 1);
    }

    // vertex labels: base label + "@" + minimal lifted dart name of the cycle
    auto lifted_dart_name = [&](long long ld) {
        DartId d = static_cast<DartId>(ld / n);
        long long gi = ld % n;
        return g.edge_labels[g.edge_of(d)] + "@" + G.to_string(elements[gi]) + "." +
               ((d & 1) ? "1" : "0");
    };
    struct LiftedVertex {
        std::string label;
        int cycle;
    };
    std::vector<LiftedVertex> lvertices;
    for (size_t c = 0; c < cycles.size(); ++c) {
        std::string min_name = lifted_dart_name(cycles[c].front());
        for (long long ld : cycles[c]) min_name = std::min(min_name, lifted_dart_name(ld));
        int base_v = g.vertex_of(static_cast<DartId>(cycles[c].front() / n));
        lvertices.push_back({g.vertex_labels[base_v] + "@" + min_name, static_cast<int>(c)});
    }
    std::sort(lvertices.begin(), lvertices.end(),
              [](const LiftedVertex& a, const LiftedVertex& b) { return a.label < b.label; });
    std::vector<int> new_vertex_of_cycle(cycles.size(), -1);
    for (size_t i = 0; i < lvertices.size(); ++i) {
        new_vertex_of_cycle[lvertices[i].cycle] = static_cast<int>(i);
    }

    cover.edge_labels.reserve(ledges.size());
    for (const auto& le : ledges) cover.edge_labels.push_back(le.label);
    cover.vertex_labels.reserve(lvertices.size());
    cover.multiplicity.assign(lvertices.size(), 1);
    for (size_t i = 0; i < lvertices.size(); ++i) {
        cover.vertex_labels.push_back(lvertices[i].label);
        int base_v = g.vertex_of(static_cast<DartId>(cycles[lvertices[i].cycle].front() / n));
        cover.multiplicity[i] = g.multiplicity[base_v] / static_cast<int>(vdata[base_v].ord);
        out.base_vertex.push_back(base_v);
    }
    cover.dart_vertex.assign(total, -1);
    cover.sigma.assign(total, -1);
    out.base_dart.assign(total, -1);
    out.fiber.assign(total, G.identity());
    for (long long ld = 0; ld < total; ++ld) {
        int nd = new_dart[ld];
        cover.dart_vertex[nd] = new_vertex_of_cycle[cycle_of[ld]];
        cover.sigma[nd] = new_dart[sw[ld]];
        out.base_dart[nd] = static_cast<DartId>(ld / n);
        out.fiber[nd] = elements[ld % n];
    }
    // pairing consistency: alpha commutes with the relabeling by construction
    for (long long ld = 0; ld < total; ++ld) {
        DartId d = static_cast<DartId>(ld / n);
        if (new_dart[lift_id(g.alpha(d), ld % n)] != (new_dart[ld] ^ 1))
            throw std::logic_error("internal: lifted pairing broken by relabeling");
    }

    if (g.quantized) {
        cover.quantized = true;
        for (int nd = 0; nd < static_cast<int>(total); ++nd) {
            auto it = g.quantizer.find(out.base_dart[nd]);
            if (it != g.quantizer.end()) cover.quantizer[nd] = it->second;
        }
    }

    require_valid(cover);
    cover.valency(0);

    // truncation must correspond along the projection
    for (int nd = 0; nd < static_cast<int>(total); ++nd) {
        if (is_truncated(cover, nd) != is_truncated(g, out.base_dart[nd]))
            throw std::logic_error("internal: truncation does not correspond under the lift");
    }

    // canonical action: (d, g) -> (d, g + generator)
    out.action.group = G;
    for (int k = 0; k < G.rank(); ++k) {
        GroupElement gen = G.generator(k);
        std::vector<DartId> perm(total);
        for (long long ld = 0; ld < total; ++ld) {
            DartId d = static_cast<DartId>(ld / n);
            long long hi = G.index_of(G.compose(elements[ld % n], gen));
            perm[new_dart[ld]] = new_dart[lift_id(d, hi)];
        }
        out.action.generator_perm.push_back(std::move(perm));
    }
    return out;
}

RoundtripWitness roundtrip_orbit(const RibbonBrauerGraph& g, const BrauerWeighting& W) {
    RoundtripWitness out{covering_graph(g, W), {}, {}, {}};
    out.orbit = orbit_graph(out.covering.cover, out.covering.action);

    auto giso = brauer_iso(out.orbit.orbit, g, g.quantized);
    if (!giso)
        throw std::logic_error("round trip failed: orbit of the cover is not isomorphic to the base");
    out.graph_iso = *giso;

    Presentation p_base = build_presentation(g);
    Presentation p_orbit = orbit_presentation(out.covering.cover, out.covering.action);
    auto piso = presentation_iso(p_base, p_orbit);
    if (!piso)
        throw std::logic_error(
            "round trip failed: base presentation is not isomorphic to the orbit presentation");
    out.pres_iso = *piso;
    return out;
}

Presentation covering_presentation(const RibbonBrauerGraph& g, const BrauerWeighting& W) {
    require_valid(g);
    require_valid_weighting(g, W);
    Presentation pres = build_presentation(g);
    if (W.group.order() == 1) return pres;
    if (degenerate_single_edge(g)) {
        // the only Brauer weighting here is trivial; lift the loop with weight id
        ArrowWeighting aw;
        aw.group = W.group;
        aw.arrow_weight.assign(1, W.group.identity());
        return covering_quiver(pres, W.group, aw.arrow_weight).cover;
    }
    ArrowWeighting aw = arrow_weights(pres, W.group, W.w);
    return covering_quiver(pres, W.group, aw.arrow_weight).cover;
}

ClassifyResult classify_weight_function(const Presentation& pres, const AbelianGroup& group,
                                        const std::vector<GroupElement>& arrow_weight) {
    if (arrow_weight.size() != pres.quiver.arrows.size())
        throw std::invalid_argument("weight function must cover every arrow");
    ClassifyResult out;

    auto degree_of = [&](const std::vector<int>& path, size_t length) {
        GroupElement deg = group.identity();
        for (size_t i = 0; i < length; ++i) deg = group.compose(deg, arrow_weight[path[i]]);
        return deg;
    };

    for (size_t ri = 0; ri < pres.relations.size(); ++ri) {
        const Relation& r = pres.relations[ri];
        GroupElement first = degree_of(r.terms[0].arrows, r.terms[0].arrows.size());
        for (size_t ti = 1; ti < r.terms.size(); ++ti) {
            if (!(degree_of(r.terms[ti].arrows, r.terms[ti].arrows.size()) == first)) {
                out.verdict = WeightClass::NotHomogeneous;
                out.witness_relation = static_cast<int>(ri);
                out.detail = "relation " + std::to_string(ri) + " (" +
                             render_relation(pres, r) + ") is not weight homogeneous";
                return out;
            }
        }
    }

    // every cycle power occurring in a relation must have degree identity:
    // both terms of a type-one relation, and the prefix of a type-two one
    for (size_t ri = 0; ri < pres.relations.size(); ++ri) {
        const Relation& r = pres.relations[ri];
        if (r.type == RelationType::One) {
            for (const auto& term : r.terms) {
                GroupElement deg = degree_of(term.arrows, term.arrows.size());
                if (!(deg == group.identity())) {
                    out.verdict = WeightClass::NotBrauer;
                    out.witness_relation = static_cast<int>(ri);
                    out.witness_vertex = pres.quiver.arrows[term.arrows.front()].source;
                    out.detail = "cycle power at " +
                                 pres.quiver.vertex_names[out.witness_vertex] +
                                 " has degree " + group.to_string(deg);
                    return out;
                }
            }
        } else if (r.type == RelationType::Two) {
            const auto& path = r.terms[0].arrows;
            GroupElement deg = degree_of(path, path.size() - 1);
            if (!(deg == group.identity())) {
                out.verdict = WeightClass::NotBrauer;
                out.witness_relation = static_cast<int>(ri);
                out.witness_vertex = pres.quiver.arrows[path.front()].source;
                out.detail = "cycle power at " + pres.quiver.vertex_names[out.witness_vertex] +
                             " has degree " + group.to_string(deg);
                return out;
            }
        }
    }

    BrauerWeighting W;
    W.group = group;
    W.w.assign(2 * pres.quiver.vertex_names.size(), group.identity());
    for (size_t a = 0; a < pres.quiver.arrows.size(); ++a) {
        DartId d = pres.quiver.arrows[a].dart;
        if (d >= 0) W.w[d] = arrow_weight[a];
    }
    out.verdict = WeightClass::Brauer;
    out.recovered = std::move(W);
    return out;
}

} // namespace brauer
