#include "brauer/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace brauer {

namespace {

void check_format(const json& j, const char* what) {
    if (j.contains("format") && j["format"] != 1)
        throw std::invalid_argument(std::string(what) + ": unsupported format version");
}

} // namespace

json group_to_json(const AbelianGroup& g) {
    return json{{"cyclic_orders", g.cyclic_orders()}};
}

AbelianGroup group_from_json(const json& j) {
    return AbelianGroup(j.at("cyclic_orders").get<std::vector<int>>());
}

json element_to_json(const GroupElement& e) {
    return json(e.residues);
}

GroupElement element_from_json(const json& j) {
    return GroupElement{j.get<std::vector<int>>()};
}

json graph_to_json(const RibbonBrauerGraph& g) {
    json out;
    out["format"] = 1;
    json vertices = json::array();
    for (int v = 0; v < g.num_vertices(); ++v) {
        vertices.push_back({{"id", g.vertex_labels[v]}, {"m", g.multiplicity[v]}});
    }
    out["vertices"] = vertices;
    json edges = json::array();
    for (int e = 0; e < g.num_edges(); ++e) {
        edges.push_back({{"id", g.edge_labels[e]},
                         {"ends", {g.vertex_labels[g.vertex_of(2 * e)],
                                   g.vertex_labels[g.vertex_of(2 * e + 1)]}}});
    }
    out["edges"] = edges;
    json rotation = json::object();
    for (int v = 0; v < g.num_vertices(); ++v) {
        DartId base = -1;
        for (DartId d = 0; d < g.num_darts(); ++d) {
            if (g.vertex_of(d) != v) continue;
            if (base == -1 || g.dart_label_less(d, base)) base = d;
        }
        json names = json::array();
        for (DartId d : successor_sequence(g, base)) names.push_back(g.dart_name(d));
        rotation[g.vertex_labels[v]] = names;
    }
    out["rotation"] = rotation;
    if (g.quantized) {
        json q = json::object();
        for (const auto& [d, value] : g.quantizer) q[g.dart_name(d)] = value.to_string();
        out["q"] = q;
    }
    return out;
}

RibbonBrauerGraph graph_from_json(const json& j) {
    check_format(j, "graph");
    std::vector<GraphVertexSpec> vertices;
    for (const auto& v : j.at("vertices")) {
        vertices.push_back({v.at("id").get<std::string>(), v.value("m", 1)});
    }
    std::vector<GraphEdgeSpec> edges;
    for (const auto& e : j.at("edges")) {
        const auto& ends = e.at("ends");
        if (!ends.is_array() || ends.size() != 2)
            throw std::invalid_argument("edge needs exactly two ends");
        edges.push_back({e.at("id").get<std::string>(), ends[0].get<std::string>(),
                         ends[1].get<std::string>()});
    }
    std::map<std::string, std::vector<std::string>> rotation;
    for (const auto& [vid, darts] : j.at("rotation").items()) {
        rotation[vid] = darts.get<std::vector<std::string>>();
    }
    std::map<std::string, std::string> quantizer;
    if (j.contains("q")) {
        for (const auto& [dart, value] : j.at("q").items()) {
            quantizer[dart] = value.get<std::string>();
        }
    }
    return make_graph(vertices, edges, rotation, quantizer);
}

json weighting_to_json(const RibbonBrauerGraph& g, const BrauerWeighting& w) {
    json out;
    out["format"] = 1;
    out["group"] = group_to_json(w.group);
    json values = json::object();
    for (DartId d = 0; d < g.num_darts(); ++d) values[g.dart_name(d)] = element_to_json(w.w[d]);
    out["W"] = values;
    return out;
}

BrauerWeighting weighting_from_json(const RibbonBrauerGraph& g, const json& j) {
    check_format(j, "weighting");
    BrauerWeighting w;
    w.group = group_from_json(j.at("group"));
    w.w.assign(g.num_darts(), w.group.identity());
    std::vector<bool> given(g.num_darts(), false);
    for (const auto& [dart, value] : j.at("W").items()) {
        DartId d = g.dart_by_name(dart);
        w.w[d] = element_from_json(value);
        if (!w.group.contains(w.w[d]))
            throw std::invalid_argument("weight at " + dart + " is not a group element");
        given[d] = true;
    }
    for (DartId d = 0; d < g.num_darts(); ++d) {
        if (!given[d])
            throw std::invalid_argument("weighting missing dart " + g.dart_name(d));
    }
    return w;
}

json action_to_json(const RibbonBrauerGraph& g, const FreeBrauerAction& a) {
    json out;
    out["format"] = 1;
    out["group"] = group_to_json(a.group);
    json gens = json::array();
    for (const auto& perm : a.generator_perm) {
        json map = json::object();
        for (DartId d = 0; d < g.num_darts(); ++d) map[g.dart_name(d)] = g.dart_name(perm[d]);
        gens.push_back({{"dart_map", map}});
    }
    out["generators"] = gens;
    return out;
}

FreeBrauerAction action_from_json(const RibbonBrauerGraph& g, const json& j) {
    check_format(j, "action");
    FreeBrauerAction a;
    a.group = group_from_json(j.at("group"));
    for (const auto& gen : j.at("generators")) {
        std::vector<DartId> perm(g.num_darts(), -1);
        for (const auto& [from, to] : gen.at("dart_map").items()) {
            perm[g.dart_by_name(from)] = g.dart_by_name(to.get<std::string>());
        }
        for (DartId d = 0; d < g.num_darts(); ++d) {
            if (perm[d] == -1)
                throw std::invalid_argument("generator dart map missing " + g.dart_name(d));
        }
        a.generator_perm.push_back(std::move(perm));
    }
    if (static_cast<int>(a.generator_perm.size()) != a.group.rank())
        throw std::invalid_argument("expected one generator map per cyclic factor");
    return a;
}

json presentation_to_json(const Presentation& p) {
    json out;
    out["format"] = 1;
    out["vertices"] = p.quiver.vertex_names;
    json arrows = json::array();
    for (const Arrow& a : p.quiver.arrows) {
        arrows.push_back({{"name", a.name},
                          {"source", p.quiver.vertex_names[a.source]},
                          {"target", p.quiver.vertex_names[a.target]}});
    }
    out["arrows"] = arrows;
    json rels = json::array();
    for (const Relation& r : p.relations) {
        json terms = json::array();
        for (const PathTerm& t : r.terms) {
            json path = json::array();
            for (int a : t.arrows) path.push_back(p.quiver.arrows[a].name);
            terms.push_back({{"coeff", t.coeff.to_string()}, {"path", path}});
        }
        rels.push_back({{"type", relation_type_name(r.type)}, {"terms", terms}});
    }
    out["relations"] = rels;
    return out;
}

Presentation presentation_from_json(const json& j) {
    check_format(j, "presentation");
    Presentation p;
    p.quiver.vertex_names = j.at("vertices").get<std::vector<std::string>>();
    std::map<std::string, int> vindex, aindex;
    for (size_t i = 0; i < p.quiver.vertex_names.size(); ++i)
        vindex[p.quiver.vertex_names[i]] = static_cast<int>(i);
    for (const auto& a : j.at("arrows")) {
        Arrow arrow;
        arrow.name = a.at("name").get<std::string>();
        arrow.source = vindex.at(a.at("source").get<std::string>());
        arrow.target = vindex.at(a.at("target").get<std::string>());
        aindex[arrow.name] = static_cast<int>(p.quiver.arrows.size());
        p.quiver.arrows.push_back(arrow);
    }
    for (const auto& r : j.at("relations")) {
        Relation rel;
        std::string type = r.at("type").get<std::string>();
        if (type == "one") rel.type = RelationType::One;
        else if (type == "two") rel.type = RelationType::Two;
        else if (type == "three") rel.type = RelationType::Three;
        else throw std::invalid_argument("unknown relation type: " + type);
        for (const auto& t : r.at("terms")) {
            PathTerm term;
            term.coeff = Rational::parse(t.at("coeff").get<std::string>());
            if (term.coeff.is_zero())
                throw std::invalid_argument("relation term with zero coefficient");
            for (const auto& name : t.at("path")) {
                term.arrows.push_back(aindex.at(name.get<std::string>()));
            }
            if (term.arrows.empty()) throw std::invalid_argument("relation term with empty path");
            for (size_t k = 0; k + 1 < term.arrows.size(); ++k) {
                if (p.quiver.arrows[term.arrows[k]].target !=
                    p.quiver.arrows[term.arrows[k + 1]].source)
                    throw std::invalid_argument("relation path is not composable");
            }
            rel.terms.push_back(std::move(term));
        }
        if (rel.terms.empty()) throw std::invalid_argument("relation without terms");
        p.relations.push_back(std::move(rel));
    }
    return p;
}

std::pair<AbelianGroup, std::vector<GroupElement>> arrow_weights_from_json(const Presentation& p,
                                                                           const json& j) {
    check_format(j, "weight function");
    AbelianGroup group = group_from_json(j.at("group"));
    std::vector<GroupElement> weights(p.quiver.arrows.size(), group.identity());
    std::map<std::string, int> aindex;
    for (size_t i = 0; i < p.quiver.arrows.size(); ++i)
        aindex[p.quiver.arrows[i].name] = static_cast<int>(i);
    for (const auto& [name, value] : j.at("W").items()) {
        auto it = aindex.find(name);
        if (it == aindex.end()) throw std::invalid_argument("unknown arrow in weight map: " + name);
        weights[it->second] = element_from_json(value);
        if (!group.contains(weights[it->second]))
            throw std::invalid_argument("weight at " + name + " is not a group element");
    }
    return {std::move(group), std::move(weights)};
}

json tower_to_json(const Tower& t) {
    json out;
    out["format"] = 1;
    out["initial"] = graph_to_json(t.initial);
    json stages = json::array();
    const RibbonBrauerGraph* prev = &t.initial;
    for (const TowerStage& stage : t.stages) {
        json s;
        s["stage"] = stage.tag;
        s["group"] = group_to_json(stage.weighting.group);
        s["weighting"] = weighting_to_json(*prev, stage.weighting);
        s["output"] = graph_to_json(stage.output.cover);
        json checks;
        checks["edges"] = stage.output.cover.num_edges();
        checks["edge_growth"] =
            stage.output.cover.num_edges() ==
            prev->num_edges() * stage.weighting.group.order();
        checks["multiplicity_one"] = multiplicity_lcm(stage.output.cover) == 1;
        checks["loop_free"] = !has_loops(stage.output.cover);
        checks["simple"] = !has_multiple_edges(stage.output.cover);
        s["checks"] = checks;
        stages.push_back(s);
        prev = &stage.output.cover;
    }
    out["stages"] = stages;
    out["final"] = graph_to_json(t.result());
    return out;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return json::parse(in);
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

} // namespace brauer
