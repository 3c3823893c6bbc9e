#include "brauer/ribbon.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace brauer {

int RibbonBrauerGraph::valency(int vertex) const {
    if (valency_cache_.size() != static_cast<size_t>(num_vertices())) {
        valency_cache_.assign(num_vertices(), 0);
        for (int v : dart_vertex) ++valency_cache_[v];
    }
    return valency_cache_[vertex];
}

std::string RibbonBrauerGraph::dart_name(DartId d) const {
    return edge_labels[edge_of(d)] + "." + ((d & 1) ? "1" : "0");
}

DartId RibbonBrauerGraph::dart_by_name(const std::string& name) const {
    auto dot = name.rfind('.');
    if (dot == std::string::npos || dot + 2 != name.size())
        throw std::invalid_argument("bad dart name: " + name);
    char bit = name[dot + 1];
    if (bit != '0' && bit != '1') throw std::invalid_argument("bad dart name: " + name);
    std::string edge = name.substr(0, dot);
    for (int e = 0; e < num_edges(); ++e) {
        if (edge_labels[e] == edge) return 2 * e + (bit == '1' ? 1 : 0);
    }
    throw std::invalid_argument("unknown edge in dart name: " + name);
}

bool RibbonBrauerGraph::dart_label_less(DartId a, DartId b) const {
    const std::string& ea = edge_labels[edge_of(a)];
    const std::string& eb = edge_labels[edge_of(b)];
    if (ea != eb) return ea < eb;
    return (a & 1) < (b & 1);
}

RibbonBrauerGraph make_graph(const std::vector<GraphVertexSpec>& vertices,
                             const std::vector<GraphEdgeSpec>& edges,
                             const std::map<std::string, std::vector<std::string>>& rotation,
                             const std::map<std::string, std::string>& quantizer) {
    RibbonBrauerGraph g;
    std::map<std::string, int> vindex;
    for (const auto& v : vertices) {
        if (vindex.count(v.id)) throw std::invalid_argument("duplicate vertex id: " + v.id);
        vindex[v.id] = g.num_vertices();
        g.vertex_labels.push_back(v.id);
        g.multiplicity.push_back(v.m);
    }
    std::map<std::string, int> eindex;
    g.dart_vertex.resize(2 * edges.size(), -1);
    for (const auto& e : edges) {
        if (eindex.count(e.id)) throw std::invalid_argument("duplicate edge id: " + e.id);
        auto u = vindex.find(e.end0);
        auto v = vindex.find(e.end1);
        if (u == vindex.end() || v == vindex.end())
            throw std::invalid_argument("edge " + e.id + " references unknown vertex");
        int idx = g.num_edges();
        eindex[e.id] = idx;
        g.edge_labels.push_back(e.id);
        g.dart_vertex[2 * idx] = u->second;
        g.dart_vertex[2 * idx + 1] = v->second;
    }

    // Rotation lists define sigma. Every dart must appear exactly once, at
    // the vertex its edge end names.
    g.sigma.assign(g.num_darts(), -1);
    std::vector<bool> placed(g.num_darts(), false);
    for (const auto& [vid, darts] : rotation) {
        auto vit = vindex.find(vid);
        if (vit == vindex.end()) throw std::invalid_argument("rotation names unknown vertex: " + vid);
        if (darts.empty()) throw std::invalid_argument("empty rotation at vertex " + vid);
        std::vector<DartId> ids;
        for (const auto& name : darts) {
            DartId d = g.dart_by_name(name);
            if (placed[d]) throw std::invalid_argument("dart listed twice in rotation: " + name);
            if (g.vertex_of(d) != vit->second)
                throw std::invalid_argument("dart " + name + " listed at the wrong vertex " + vid);
            placed[d] = true;
            ids.push_back(d);
        }
        for (size_t i = 0; i < ids.size(); ++i) {
            g.sigma[ids[i]] = ids[(i + 1) % ids.size()];
        }
    }
    for (DartId d = 0; d < g.num_darts(); ++d) {
        if (!placed[d])
            throw std::invalid_argument("unpaired dart " + g.dart_name(d) +
                                        " missing from the rotation of its vertex");
    }

    for (const auto& [name, value] : quantizer) {
        g.quantizer[g.dart_by_name(name)] = Rational::parse(value);
    }
    g.quantized = !quantizer.empty();

    require_valid(g);
    if (g.num_vertices() > 0) g.valency(0);  // warm the cache
    return g;
}

std::vector<std::string> validate(const RibbonBrauerGraph& g) {
    std::vector<std::string> issues;
    if (g.num_edges() < 1) {
        issues.push_back("graph must have at least one edge");
        return issues;
    }
    if (g.dart_vertex.size() != 2 * g.edge_labels.size() ||
        g.sigma.size() != g.dart_vertex.size()) {
        issues.push_back("dart tables are inconsistent with the edge count");
        return issues;
    }
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (g.multiplicity[v] < 1)
            issues.push_back("vertex " + g.vertex_labels[v] + " has multiplicity < 1");
    }

    // sigma must permute darts with cycles exactly the per-vertex dart sets
    std::vector<int> hit(g.num_darts(), 0);
    for (DartId d = 0; d < g.num_darts(); ++d) {
        DartId s = g.sigma[d];
        if (s < 0 || s >= g.num_darts()) {
            issues.push_back("rotation undefined at dart " + g.dart_name(d));
            return issues;
        }
        ++hit[s];
        if (g.vertex_of(s) != g.vertex_of(d))
            issues.push_back("rotation leaves vertex " + g.vertex_labels[g.vertex_of(d)] +
                             " at dart " + g.dart_name(d));
    }
    for (DartId d = 0; d < g.num_darts(); ++d) {
        if (hit[d] != 1) {
            issues.push_back("rotation is not a permutation at dart " + g.dart_name(d));
            return issues;
        }
    }
    std::vector<bool> seen(g.num_darts(), false);
    int cycles = 0;
    for (DartId d = 0; d < g.num_darts(); ++d) {
        if (seen[d]) continue;
        ++cycles;
        DartId cur = d;
        do {
            seen[cur] = true;
            cur = g.sigma[cur];
        } while (cur != d);
    }
    std::set<int> vertices_with_darts(g.dart_vertex.begin(), g.dart_vertex.end());
    if (cycles != static_cast<int>(vertices_with_darts.size()))
        issues.push_back("some vertex's darts split into several rotation cycles");
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (!vertices_with_darts.count(v))
            issues.push_back("vertex " + g.vertex_labels[v] + " has no incident edge");
    }

    // connectivity under {sigma, alpha}
    if (g.num_darts() > 0) {
        std::vector<bool> reach(g.num_darts(), false);
        std::vector<DartId> stack{0};
        reach[0] = true;
        while (!stack.empty()) {
            DartId d = stack.back();
            stack.pop_back();
            for (DartId n : {g.sigma[d], g.alpha(d)}) {
                if (!reach[n]) {
                    reach[n] = true;
                    stack.push_back(n);
                }
            }
        }
        if (!std::all_of(reach.begin(), reach.end(), [](bool b) { return b; }))
            issues.push_back("graph is not connected");
    }

    if (g.quantized) {
        for (int e = 0; e < g.num_edges(); ++e) {
            bool trunc0 = is_truncated(g, 2 * e);
            bool trunc1 = is_truncated(g, 2 * e + 1);
            for (DartId d : {2 * e, 2 * e + 1}) {
                bool in_x = !trunc0 && !trunc1;
                bool has = g.quantizer.count(d) > 0;
                if (in_x && !has)
                    issues.push_back("quantizer missing on dart " + g.dart_name(d));
                if (!in_x && has)
                    issues.push_back("quantizer defined on truncated-edge dart " + g.dart_name(d));
            }
        }
        for (const auto& [d, q] : g.quantizer) {
            if (q.is_zero())
                issues.push_back("quantizer value 0 at dart " + g.dart_name(d));
        }
    }
    return issues;
}

void require_valid(const RibbonBrauerGraph& g) {
    auto issues = validate(g);
    if (issues.empty()) return;
    std::string msg = "invalid Brauer graph:";
    for (const auto& s : issues) msg += "\n  " + s;
    throw std::invalid_argument(msg);
}

std::vector<DartId> successor_sequence(const RibbonBrauerGraph& g, DartId d) {
    if (d < 0 || d >= g.num_darts()) throw std::out_of_range("unknown dart");
    std::vector<DartId> seq;
    DartId cur = d;
    do {
        seq.push_back(cur);
        cur = g.sigma[cur];
    } while (cur != d);
    return seq;
}

bool is_truncated(const RibbonBrauerGraph& g, DartId d) {
    int v = g.vertex_of(d);
    return g.valency(v) == 1 && g.multiplicity[v] == 1;
}

IndexSets index_sets(const RibbonBrauerGraph& g) {
    IndexSets out;
    for (int e = 0; e < g.num_edges(); ++e) {
        if (!is_truncated(g, 2 * e) && !is_truncated(g, 2 * e + 1)) {
            out.y_edges.push_back(e);
            out.x_darts.push_back(2 * e);
            out.x_darts.push_back(2 * e + 1);
        }
    }
    for (DartId d = 0; d < g.num_darts(); ++d) out.z_darts.push_back(d);
    return out;
}

namespace {

// Propagates phi(d0) = e0 through sigma and alpha. Connectivity makes the
// extension unique; returns false on any clash.
bool propagate(const RibbonBrauerGraph& g1, const RibbonBrauerGraph& g2,
               DartId d0, DartId e0, DartBijection& phi) {
    phi.assign(g1.num_darts(), -1);
    std::vector<DartId> used(g2.num_darts(), 0);
    std::vector<DartId> stack;
    phi[d0] = e0;
    used[e0] = 1;
    stack.push_back(d0);
    while (!stack.empty()) {
        DartId d = stack.back();
        stack.pop_back();
        const std::pair<DartId, DartId> steps[2] = {
            {g1.sigma[d], g2.sigma[phi[d]]},
            {g1.alpha(d), g2.alpha(phi[d])},
        };
        for (auto [nd, ne] : steps) {
            if (phi[nd] == -1) {
                if (used[ne]) return false;
                phi[nd] = ne;
                used[ne] = 1;
                stack.push_back(nd);
            } else if (phi[nd] != ne) {
                return false;
            }
        }
    }
    return true;
}

bool check_structure(const RibbonBrauerGraph& g1, const RibbonBrauerGraph& g2,
                     const DartBijection& phi, bool quantized) {
    for (DartId d = 0; d < g1.num_darts(); ++d) {
        if (phi[d] == -1) return false;  // disconnected input would leave gaps
        if (g2.sigma[phi[d]] != phi[g1.sigma[d]]) return false;
        if (g2.alpha(phi[d]) != phi[g1.alpha(d)]) return false;
    }
    // induced vertex map must preserve multiplicities
    for (DartId d = 0; d < g1.num_darts(); ++d) {
        if (g1.multiplicity[g1.vertex_of(d)] != g2.multiplicity[g2.vertex_of(phi[d])])
            return false;
    }
    if (quantized) {
        for (int e = 0; e < g1.num_edges(); ++e) {
            DartId a = 2 * e, b = 2 * e + 1;
            if (!g1.quantizer.count(a)) continue;  // not a Y-edge
            const Rational& qa = g1.quantizer.at(a);
            const Rational& qb = g1.quantizer.at(b);
            auto ia = g2.quantizer.find(phi[a]);
            auto ib = g2.quantizer.find(phi[b]);
            if (ia == g2.quantizer.end() || ib == g2.quantizer.end()) return false;
            if (qa * ib->second != qb * ia->second) return false;
        }
    }
    return true;
}

} // namespace

std::optional<DartBijection> brauer_iso(const RibbonBrauerGraph& g1,
                                        const RibbonBrauerGraph& g2,
                                        bool quantized) {
    if (quantized && (!g1.quantized || !g2.quantized))
        throw std::invalid_argument("quantized isomorphism requires quantizers on both graphs");
    if (g1.num_edges() != g2.num_edges() || g1.num_vertices() != g2.num_vertices())
        return std::nullopt;
    {
        std::vector<std::pair<int, int>> s1, s2;  // (valency, multiplicity) multisets
        for (int v = 0; v < g1.num_vertices(); ++v) s1.push_back({g1.valency(v), g1.multiplicity[v]});
        for (int v = 0; v < g2.num_vertices(); ++v) s2.push_back({g2.valency(v), g2.multiplicity[v]});
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        if (s1 != s2) return std::nullopt;
    }
    // An isomorphism of connected maps is determined by the image of one dart.
    DartBijection phi;
    for (DartId e0 = 0; e0 < g2.num_darts(); ++e0) {
        if (!propagate(g1, g2, 0, e0, phi)) continue;
        if (check_structure(g1, g2, phi, quantized)) return phi;
    }
    return std::nullopt;
}

std::vector<long long> canonical_key(const RibbonBrauerGraph& g) {
    std::vector<long long> best;
    DartBijection phi;
    for (DartId start = 0; start < g.num_darts(); ++start) {
        // relabel darts in deterministic traversal order from `start`
        std::vector<DartId> order(g.num_darts(), -1);
        std::vector<DartId> stack{start};
        std::vector<DartId> bfs;
        order[start] = 0;
        bfs.push_back(start);
        for (size_t i = 0; i < bfs.size(); ++i) {
            DartId d = bfs[i];
            for (DartId n : {g.sigma[d], g.alpha(d)}) {
                if (order[n] == -1) {
                    order[n] = static_cast<int>(bfs.size());
                    bfs.push_back(n);
                }
            }
        }
        std::vector<long long> key;
        key.reserve(3 * g.num_darts());
        for (DartId d : bfs) {
            key.push_back(order[g.sigma[d]]);
            key.push_back(order[g.alpha(d)]);
            key.push_back(g.multiplicity[g.vertex_of(d)]);
        }
        if (best.empty() || key < best) best = std::move(key);
    }
    return best;
}

} // namespace brauer
