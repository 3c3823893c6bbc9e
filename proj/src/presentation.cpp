#include "brauer/presentation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace brauer {

std::string relation_type_name(RelationType t) {
    switch (t) {
        case RelationType::One: return "one";
        case RelationType::Two: return "two";
        case RelationType::Three: return "three";
    }
    return "?";
}

std::vector<DartId> cycle(const RibbonBrauerGraph& g, DartId d) {
    if (is_truncated(g, d))
        throw std::domain_error("no cycle at truncated dart " + g.dart_name(d));
    return successor_sequence(g, d);
}

namespace {

Rational quantizer_value(const RibbonBrauerGraph& g, DartId d) {
    if (!g.quantized) return Rational(1);
    auto it = g.quantizer.find(d);
    return it == g.quantizer.end() ? Rational(1) : it->second;
}

std::vector<std::vector<int>> sorted_paths(const Relation& r) {
    std::vector<std::vector<int>> paths;
    for (const auto& t : r.terms) paths.push_back(t.arrows);
    std::sort(paths.begin(), paths.end());
    return paths;
}

void sort_relations(std::vector<Relation>& rels) {
    std::sort(rels.begin(), rels.end(), [](const Relation& a, const Relation& b) {
        if (a.type != b.type) return static_cast<int>(a.type) < static_cast<int>(b.type);
        return sorted_paths(a) < sorted_paths(b);
    });
}

} // namespace

Presentation build_presentation(const RibbonBrauerGraph& g) {
    require_valid(g);
    Presentation pres;

    // Two-vertex single edge with trivial multiplicities: one vertex, one
    // loop, relation x^2.
    if (g.num_edges() == 1 && is_truncated(g, 0) && is_truncated(g, 1)) {
        pres.quiver.vertex_names.push_back("v_" + g.edge_labels[0]);
        pres.quiver.arrows.push_back(Arrow{"x", 0, 0, -1});
        Relation r;
        r.type = RelationType::Three;
        r.terms.push_back(PathTerm{Rational(1), {0, 0}});
        pres.relations.push_back(r);
        return pres;
    }

    for (int e = 0; e < g.num_edges(); ++e) {
        pres.quiver.vertex_names.push_back("v_" + g.edge_labels[e]);
    }
    std::vector<int> arrow_of_dart(g.num_darts(), -1);
    for (DartId d = 0; d < g.num_darts(); ++d) {
        if (is_truncated(g, d)) continue;
        Arrow a;
        a.name = "a_" + g.dart_name(d);
        a.source = g.edge_of(d);
        a.target = g.edge_of(g.sigma[d]);
        a.dart = d;
        arrow_of_dart[d] = static_cast<int>(pres.quiver.arrows.size());
        pres.quiver.arrows.push_back(a);
    }

    auto cycle_power_path = [&](DartId d, int exponent) {
        std::vector<int> path;
        std::vector<DartId> c = cycle(g, d);
        for (int k = 0; k < exponent; ++k) {
            for (DartId cd : c) path.push_back(arrow_of_dart[cd]);
        }
        return path;
    };

    for (int e = 0; e < g.num_edges(); ++e) {
        DartId d0 = 2 * e, d1 = 2 * e + 1;
        bool t0 = is_truncated(g, d0), t1 = is_truncated(g, d1);
        if (!t0 && !t1) {
            // type one; the positive term sits at the smaller dart of the edge
            Relation r;
            r.type = RelationType::One;
            r.terms.push_back(
                PathTerm{quantizer_value(g, d0), cycle_power_path(d0, g.multiplicity[g.vertex_of(d0)])});
            r.terms.push_back(
                PathTerm{-quantizer_value(g, d1), cycle_power_path(d1, g.multiplicity[g.vertex_of(d1)])});
            pres.relations.push_back(std::move(r));
        } else if (t0 != t1) {
            // type two, emitted at the non-truncated end
            DartId live = t0 ? d1 : d0;
            Relation r;
            r.type = RelationType::Two;
            std::vector<int> path = cycle_power_path(live, g.multiplicity[g.vertex_of(live)]);
            path.push_back(arrow_of_dart[live]);
            r.terms.push_back(PathTerm{Rational(1), std::move(path)});
            pres.relations.push_back(std::move(r));
        }
    }

    // type three: composable arrow pairs that are not consecutive in a rotation cycle
    for (DartId d = 0; d < g.num_darts(); ++d) {
        if (arrow_of_dart[d] == -1) continue;
        int j = g.edge_of(g.sigma[d]);
        for (DartId e : {2 * j, 2 * j + 1}) {
            if (arrow_of_dart[e] == -1 || e == g.sigma[d]) continue;
            Relation r;
            r.type = RelationType::Three;
            r.terms.push_back(PathTerm{Rational(1), {arrow_of_dart[d], arrow_of_dart[e]}});
            pres.relations.push_back(std::move(r));
        }
    }

    sort_relations(pres.relations);
    return pres;
}

namespace {

struct QuiverView {
    int nv = 0;
    std::vector<std::vector<int>> out_arrows;  // per vertex
    std::vector<std::vector<int>> in_arrows;
    std::map<std::pair<int, int>, std::vector<int>> parallel;  // (src,dst) -> arrows

    explicit QuiverView(const Quiver& q) {
        nv = static_cast<int>(q.vertex_names.size());
        out_arrows.resize(nv);
        in_arrows.resize(nv);
        for (size_t i = 0; i < q.arrows.size(); ++i) {
            const Arrow& a = q.arrows[i];
            out_arrows[a.source].push_back(static_cast<int>(i));
            in_arrows[a.target].push_back(static_cast<int>(i));
            parallel[{a.source, a.target}].push_back(static_cast<int>(i));
        }
    }
};

// Signature of a vertex: degrees plus the positions at which it occurs in
// relation terms. Invariant under isomorphism, cheap to compare.
std::vector<std::vector<long long>> vertex_signatures(const Presentation& p, const QuiverView& qv) {
    std::vector<std::vector<long long>> sig(qv.nv);
    for (int v = 0; v < qv.nv; ++v) {
        long long loops = 0;
        for (int a : qv.out_arrows[v]) {
            if (p.quiver.arrows[a].target == v) ++loops;
        }
        sig[v] = {static_cast<long long>(qv.out_arrows[v].size()),
                  static_cast<long long>(qv.in_arrows[v].size()), loops};
    }
    std::vector<std::vector<long long>> marks(qv.nv);
    for (size_t ri = 0; ri < p.relations.size(); ++ri) {
        const Relation& r = p.relations[ri];
        for (const auto& term : r.terms) {
            int v = p.quiver.arrows[term.arrows.front()].source;
            long long code = static_cast<long long>(r.type) * 1000000 +
                             static_cast<long long>(term.arrows.size()) * 100;
            marks[v].push_back(code);  // position 0
            for (size_t i = 0; i < term.arrows.size(); ++i) {
                int w = p.quiver.arrows[term.arrows[i]].target;
                marks[w].push_back(code + static_cast<long long>(i) + 1);
            }
        }
    }
    for (int v = 0; v < qv.nv; ++v) {
        std::sort(marks[v].begin(), marks[v].end());
        sig[v].insert(sig[v].end(), marks[v].begin(), marks[v].end());
    }
    return sig;
}

struct RelKey {
    int type;
    std::vector<std::vector<int>> paths;
    bool operator<(const RelKey& o) const {
        if (type != o.type) return type < o.type;
        return paths < o.paths;
    }
};

bool coefficients_compatible(const Relation& a, const Relation& b,
                             const std::vector<std::vector<int>>& mapped_paths) {
    if (a.terms.size() != b.terms.size()) return false;
    if (a.terms.size() == 1) return !a.terms[0].coeff.is_zero() && !b.terms[0].coeff.is_zero();
    if (a.terms.size() != 2) return false;
    const Rational& c1 = a.terms[0].coeff;
    const Rational& c2 = a.terms[1].coeff;
    const Rational& d1 = b.terms[0].coeff;
    const Rational& d2 = b.terms[1].coeff;
    bool ok = false;
    if (mapped_paths[0] == b.terms[0].arrows && mapped_paths[1] == b.terms[1].arrows)
        ok = ok || (c1 * d2 == c2 * d1);
    if (mapped_paths[0] == b.terms[1].arrows && mapped_paths[1] == b.terms[0].arrows)
        ok = ok || (c1 * d1 == c2 * d2);
    return ok;
}

// Checks whether the relation sets correspond under a full arrow bijection.
bool relations_match(const Presentation& p1, const Presentation& p2,
                     const std::vector<int>& arrow_map) {
    std::map<RelKey, std::vector<int>> available;
    for (size_t i = 0; i < p2.relations.size(); ++i) {
        available[RelKey{static_cast<int>(p2.relations[i].type), sorted_paths(p2.relations[i])}]
            .push_back(static_cast<int>(i));
    }
    for (const Relation& r : p1.relations) {
        std::vector<std::vector<int>> mapped;
        for (const auto& t : r.terms) {
            std::vector<int> path;
            for (int a : t.arrows) path.push_back(arrow_map[a]);
            mapped.push_back(std::move(path));
        }
        auto key_paths = mapped;
        std::sort(key_paths.begin(), key_paths.end());
        auto it = available.find(RelKey{static_cast<int>(r.type), key_paths});
        if (it == available.end()) return false;
        bool matched = false;
        for (size_t k = 0; k < it->second.size(); ++k) {
            const Relation& cand = p2.relations[it->second[k]];
            if (coefficients_compatible(r, cand, mapped)) {
                it->second.erase(it->second.begin() + k);
                if (it->second.empty()) available.erase(it);
                matched = true;
                break;
            }
        }
        if (!matched) return false;
    }
    return true;
}

struct IsoSearch {
    const Presentation& p1;
    const Presentation& p2;
    QuiverView q1, q2;
    std::vector<std::vector<long long>> sig1, sig2;
    std::vector<int> vmap, vused;
    std::vector<int> order;  // p1 vertices in adjacency-driven order

    IsoSearch(const Presentation& a, const Presentation& b)
        : p1(a), p2(b), q1(a.quiver), q2(b.quiver) {
        sig1 = vertex_signatures(p1, q1);
        sig2 = vertex_signatures(p2, q2);
    }

    bool adjacency_consistent(int v, int w) const {
        // arrows between v and already-mapped vertices must match in count
        for (int a : q1.out_arrows[v]) {
            int t = p1.quiver.arrows[a].target;
            if (t == v || vmap[t] == -1) continue;
            auto it1 = q1.parallel.find({v, t});
            auto it2 = q2.parallel.find({w, vmap[t]});
            if (it2 == q2.parallel.end() || it1->second.size() != it2->second.size()) return false;
        }
        for (int a : q1.in_arrows[v]) {
            int s = p1.quiver.arrows[a].source;
            if (s == v || vmap[s] == -1) continue;
            auto it1 = q1.parallel.find({s, v});
            auto it2 = q2.parallel.find({vmap[s], w});
            if (it2 == q2.parallel.end() || it1->second.size() != it2->second.size()) return false;
        }
        return true;
    }

    std::vector<int> found_arrow_map;

    bool assign_arrows() {
        std::vector<int> arrow_map(p1.quiver.arrows.size(), -1);
        std::vector<std::pair<std::vector<int>, std::vector<int>>> groups;
        for (const auto& [key, arrows1] : q1.parallel) {
            auto it = q2.parallel.find({vmap[key.first], vmap[key.second]});
            if (it == q2.parallel.end() || it->second.size() != arrows1.size()) return false;
            groups.push_back({arrows1, it->second});
        }
        // try all pairings inside each parallel group (groups are tiny)
        return assign_group(groups, 0, arrow_map);
    }

    bool assign_group(std::vector<std::pair<std::vector<int>, std::vector<int>>>& groups,
                      size_t gi, std::vector<int>& arrow_map) {
        if (gi == groups.size()) {
            if (relations_match(p1, p2, arrow_map)) {
                found_arrow_map = arrow_map;
                return true;
            }
            return false;
        }
        auto& [from, to] = groups[gi];
        std::vector<int> perm = to;
        std::sort(perm.begin(), perm.end());
        do {
            for (size_t i = 0; i < from.size(); ++i) arrow_map[from[i]] = perm[i];
            if (assign_group(groups, gi + 1, arrow_map)) return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        for (int a : from) arrow_map[a] = -1;
        return false;
    }

    bool extend(size_t oi) {
        if (oi == order.size()) return assign_arrows();
        int v = order[oi];
        for (int w = 0; w < q2.nv; ++w) {
            if (vused[w] || sig1[v] != sig2[w]) continue;
            if (!adjacency_consistent(v, w)) continue;
            vmap[v] = w;
            vused[w] = 1;
            if (extend(oi + 1)) return true;
            vmap[v] = -1;
            vused[w] = 0;
        }
        return false;
    }

    std::optional<PresIso> run() {
        // adjacency-driven ordering: each new vertex touches the mapped region
        std::vector<int> seen(q1.nv, 0);
        for (int root = 0; root < q1.nv; ++root) {
            if (seen[root]) continue;
            std::vector<int> bfs{root};
            seen[root] = 1;
            for (size_t i = 0; i < bfs.size(); ++i) {
                int v = bfs[i];
                order.push_back(v);
                for (int a : q1.out_arrows[v]) {
                    int t = p1.quiver.arrows[a].target;
                    if (!seen[t]) { seen[t] = 1; bfs.push_back(t); }
                }
                for (int a : q1.in_arrows[v]) {
                    int s = p1.quiver.arrows[a].source;
                    if (!seen[s]) { seen[s] = 1; bfs.push_back(s); }
                }
            }
        }
        vmap.assign(q1.nv, -1);
        vused.assign(q2.nv, 0);
        if (!extend(0)) return std::nullopt;
        PresIso iso;
        iso.vertex_map = vmap;
        iso.arrow_map = found_arrow_map;
        return iso;
    }
};

} // namespace

std::optional<PresIso> presentation_iso(const Presentation& p1, const Presentation& p2,
                                        const PresIsoOptions& opts) {
    if (static_cast<int>(p1.quiver.vertex_names.size()) > opts.max_vertices ||
        static_cast<int>(p2.quiver.vertex_names.size()) > opts.max_vertices)
        throw std::length_error("presentation too large for the isomorphism search");
    if (p1.quiver.vertex_names.size() != p2.quiver.vertex_names.size()) return std::nullopt;
    if (p1.quiver.arrows.size() != p2.quiver.arrows.size()) return std::nullopt;
    if (p1.relations.size() != p2.relations.size()) return std::nullopt;
    {
        std::vector<std::pair<int, std::vector<size_t>>> sh1, sh2;
        for (const Relation& r : p1.relations) {
            std::vector<size_t> lens;
            for (const auto& t : r.terms) lens.push_back(t.arrows.size());
            std::sort(lens.begin(), lens.end());
            sh1.push_back({static_cast<int>(r.type), lens});
        }
        for (const Relation& r : p2.relations) {
            std::vector<size_t> lens;
            for (const auto& t : r.terms) lens.push_back(t.arrows.size());
            std::sort(lens.begin(), lens.end());
            sh2.push_back({static_cast<int>(r.type), lens});
        }
        std::sort(sh1.begin(), sh1.end());
        std::sort(sh2.begin(), sh2.end());
        if (sh1 != sh2) return std::nullopt;
    }
    IsoSearch search(p1, p2);
    return search.run();
}

ArrowWeighting arrow_weights(const Presentation& pres, const AbelianGroup& group,
                             const std::vector<GroupElement>& dart_weights) {
    ArrowWeighting out;
    out.group = group;
    size_t expected = 2 * pres.quiver.vertex_names.size();
    if (dart_weights.size() != expected)
        throw std::invalid_argument("weighting does not match the presentation's graph");
    for (const Arrow& a : pres.quiver.arrows) {
        if (a.dart < 0) {
            out.arrow_weight.push_back(group.identity());
        } else {
            if (static_cast<size_t>(a.dart) >= dart_weights.size())
                throw std::invalid_argument("weighting does not cover arrow dart");
            out.arrow_weight.push_back(dart_weights[a.dart]);
        }
    }
    for (const Relation& r : pres.relations) {
        RelationWeightInfo info;
        bool first = true;
        GroupElement ref;
        info.homogeneous = true;
        for (const auto& term : r.terms) {
            GroupElement deg = group.identity();
            for (int a : term.arrows) deg = group.compose(deg, out.arrow_weight[a]);
            if (first) {
                ref = deg;
                first = false;
            } else if (!(deg == ref)) {
                info.homogeneous = false;
            }
        }
        info.degree = ref;
        out.relations.push_back(info);
    }
    return out;
}

std::string render_relation(const Presentation& pres, const Relation& rel) {
    std::string s;
    for (size_t i = 0; i < rel.terms.size(); ++i) {
        const PathTerm& t = rel.terms[i];
        Rational c = t.coeff;
        if (i == 0) {
            if (c < Rational(0)) { s += "-"; c = -c; }
        } else {
            s += (c < Rational(0)) ? " - " : " + ";
            if (c < Rational(0)) c = -c;
        }
        if (!(c == Rational(1))) s += c.to_string() + " ";
        for (size_t k = 0; k < t.arrows.size(); ++k) {
            if (k) s += " ";
            s += pres.quiver.arrows[t.arrows[k]].name;
        }
    }
    return s;
}

std::string render_presentation(const Presentation& pres) {
    std::string s;
    s += "vertices (" + std::to_string(pres.quiver.vertex_names.size()) + "):";
    for (const auto& v : pres.quiver.vertex_names) s += " " + v;
    s += "\narrows (" + std::to_string(pres.quiver.arrows.size()) + "):\n";
    for (const Arrow& a : pres.quiver.arrows) {
        s += "  " + a.name + ": " + pres.quiver.vertex_names[a.source] + " -> " +
             pres.quiver.vertex_names[a.target] + "\n";
    }
    s += "relations (" + std::to_string(pres.relations.size()) + "):\n";
    for (const Relation& r : pres.relations) {
        s += "  [" + relation_type_name(r.type) + "] " + render_relation(pres, r) + "\n";
    }
    return s;
}

} // namespace brauer
