#include "brauer/action.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "brauer/quiver_cover.hpp"

namespace brauer {

namespace {

bool is_permutation(const std::vector<int>& p, int n) {
    if (static_cast<int>(p.size()) != n) return false;
    std::vector<int> hit(n, 0);
    for (int x : p) {
        if (x < 0 || x >= n || hit[x]) return false;
        hit[x] = 1;
    }
    return true;
}

std::vector<DartId> compose_perm(const std::vector<DartId>& a, const std::vector<DartId>& b) {
    std::vector<DartId> out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = b[a[i]];
    return out;
}

// Orbits of darts with the translating group element from each orbit's
// representative. Freeness makes translators well-defined.
struct DartOrbits {
    std::vector<int> orbit_of;                  // dart -> orbit index
    std::vector<GroupElement> translator;       // rep^translator = dart
    std::vector<std::vector<DartId>> members;   // per orbit
};

DartOrbits dart_orbits(const RibbonBrauerGraph& g, const FreeBrauerAction& act) {
    DartOrbits out;
    out.orbit_of.assign(g.num_darts(), -1);
    out.translator.assign(g.num_darts(), act.group.identity());
    for (DartId d = 0; d < g.num_darts(); ++d) {
        if (out.orbit_of[d] != -1) continue;
        int orbit = static_cast<int>(out.members.size());
        out.members.push_back({});
        std::vector<DartId> stack{d};
        out.orbit_of[d] = orbit;
        out.members[orbit].push_back(d);
        while (!stack.empty()) {
            DartId cur = stack.back();
            stack.pop_back();
            for (int k = 0; k < act.group.rank(); ++k) {
                DartId next = act.generator_perm[k][cur];
                GroupElement t = act.group.compose(out.translator[cur], act.group.generator(k));
                if (out.orbit_of[next] == -1) {
                    out.orbit_of[next] = orbit;
                    out.translator[next] = t;
                    out.members[orbit].push_back(next);
                    stack.push_back(next);
                } else if (!(out.translator[next] == t)) {
                    throw std::logic_error("internal: inconsistent translators on a free action");
                }
            }
        }
    }
    return out;
}

} // namespace

std::vector<DartId> action_permutation(const RibbonBrauerGraph& g, const FreeBrauerAction& act,
                                       const GroupElement& e) {
    std::vector<DartId> perm(g.num_darts());
    for (DartId d = 0; d < g.num_darts(); ++d) perm[d] = d;
    for (int k = 0; k < act.group.rank(); ++k) {
        for (int rep = 0; rep < e.residues[k]; ++rep) {
            perm = compose_perm(perm, act.generator_perm[k]);
        }
    }
    return perm;
}

std::vector<std::string> validate_action(const RibbonBrauerGraph& g, const FreeBrauerAction& act) {
    std::vector<std::string> issues;
    if (static_cast<int>(act.generator_perm.size()) != act.group.rank()) {
        issues.push_back("expected one dart permutation per cyclic factor");
        return issues;
    }
    for (int k = 0; k < act.group.rank(); ++k) {
        if (!is_permutation(act.generator_perm[k], g.num_darts())) {
            issues.push_back("generator " + std::to_string(k) + " is not a dart permutation");
            return issues;
        }
    }
    // homomorphism: generator orders divide the cyclic orders, generators commute
    for (int k = 0; k < act.group.rank(); ++k) {
        std::vector<DartId> pow(g.num_darts());
        for (DartId d = 0; d < g.num_darts(); ++d) pow[d] = d;
        for (int i = 0; i < act.group.cyclic_orders()[k]; ++i)
            pow = compose_perm(pow, act.generator_perm[k]);
        for (DartId d = 0; d < g.num_darts(); ++d) {
            if (pow[d] != d) {
                issues.push_back("generator " + std::to_string(k) +
                                 " does not have order dividing its cyclic order (witness dart " +
                                 g.dart_name(d) + ")");
                break;
            }
        }
    }
    for (int k = 0; k < act.group.rank(); ++k) {
        for (int l = k + 1; l < act.group.rank(); ++l) {
            auto kl = compose_perm(act.generator_perm[k], act.generator_perm[l]);
            auto lk = compose_perm(act.generator_perm[l], act.generator_perm[k]);
            if (kl != lk) {
                issues.push_back("generators " + std::to_string(k) + " and " + std::to_string(l) +
                                 " do not commute");
            }
        }
    }
    // commutes with rotation and pairing; preserves multiplicities
    for (int k = 0; k < act.group.rank(); ++k) {
        const auto& perm = act.generator_perm[k];
        for (DartId d = 0; d < g.num_darts(); ++d) {
            if (perm[g.sigma[d]] != g.sigma[perm[d]]) {
                issues.push_back("generator " + std::to_string(k) +
                                 " breaks the rotation at dart " + g.dart_name(d));
                break;
            }
        }
        for (DartId d = 0; d < g.num_darts(); ++d) {
            if (perm[g.alpha(d)] != g.alpha(perm[d])) {
                issues.push_back("generator " + std::to_string(k) +
                                 " does not map edges to edges (dart " + g.dart_name(d) + ")");
                break;
            }
        }
        for (DartId d = 0; d < g.num_darts(); ++d) {
            if (g.multiplicity[g.vertex_of(d)] != g.multiplicity[g.vertex_of(perm[d])]) {
                issues.push_back("generator " + std::to_string(k) +
                                 " changes the multiplicity at vertex " +
                                 g.vertex_labels[g.vertex_of(d)]);
                break;
            }
        }
    }
    if (!issues.empty()) return issues;

    // freeness on edges: every edge orbit must have size |G|. A violation is
    // witnessed by a nontrivial stabilizer element.
    {
        std::vector<int> orbit_of(g.num_edges(), -1);
        std::vector<GroupElement> translator(g.num_edges(), act.group.identity());
        for (int e = 0; e < g.num_edges(); ++e) {
            if (orbit_of[e] != -1) continue;
            std::vector<int> stack{e};
            orbit_of[e] = e;
            long long orbit_size = 1;
            while (!stack.empty()) {
                int cur = stack.back();
                stack.pop_back();
                for (int k = 0; k < act.group.rank(); ++k) {
                    int next = g.edge_of(act.generator_perm[k][2 * cur]);
                    GroupElement t = act.group.compose(translator[cur], act.group.generator(k));
                    if (orbit_of[next] == -1) {
                        orbit_of[next] = e;
                        translator[next] = t;
                        ++orbit_size;
                        stack.push_back(next);
                    } else if (!(translator[next] == t)) {
                        GroupElement stab =
                            act.group.compose(t, act.group.inverse(translator[next]));
                        // distinguish a kernel element from a mere stabilizer
                        auto perm = action_permutation(g, act, stab);
                        bool kernel = true;
                        for (DartId d = 0; d < g.num_darts(); ++d) {
                            if (perm[d] != d) { kernel = false; break; }
                        }
                        if (kernel) {
                            issues.push_back("action is not faithful: " +
                                             act.group.to_string(stab) +
                                             " acts trivially (quotient by the kernel instead)");
                        } else {
                            issues.push_back("action is not free on edges: " +
                                             act.group.to_string(stab) + " fixes edge " +
                                             g.edge_labels[next]);
                        }
                        return issues;
                    }
                }
            }
            if (orbit_size != act.group.order()) {
                issues.push_back("edge orbit of " + g.edge_labels[e] +
                                 " has size " + std::to_string(orbit_size) +
                                 " instead of |G|");
                return issues;
            }
        }
    }

    // quantized ratio condition per generator, per Y-edge
    if (g.quantized) {
        for (int k = 0; k < act.group.rank(); ++k) {
            const auto& perm = act.generator_perm[k];
            for (int e = 0; e < g.num_edges(); ++e) {
                auto it0 = g.quantizer.find(2 * e);
                auto it1 = g.quantizer.find(2 * e + 1);
                if (it0 == g.quantizer.end() || it1 == g.quantizer.end()) continue;
                DartId d0 = perm[2 * e], d1 = perm[2 * e + 1];
                auto j0 = g.quantizer.find(d0);
                auto j1 = g.quantizer.find(d1);
                if (j0 == g.quantizer.end() || j1 == g.quantizer.end()) {
                    issues.push_back("quantizer domain is not stable under generator " +
                                     std::to_string(k));
                    return issues;
                }
                if (it0->second * j1->second != it1->second * j0->second) {
                    issues.push_back("quantizer ratios not preserved on edge " +
                                     g.edge_labels[e] + " under generator " + std::to_string(k));
                }
            }
        }
    }
    return issues;
}

void require_valid_action(const RibbonBrauerGraph& g, const FreeBrauerAction& act) {
    auto issues = validate_action(g, act);
    if (issues.empty()) return;
    std::string msg = "not a free Brauer action:";
    for (const auto& s : issues) msg += "\n  " + s;
    throw std::invalid_argument(msg);
}

namespace {

struct OrbitAssembly {
    DartOrbits darts;
    std::vector<int> edge_orbit_of;            // base edge -> orbit-edge index
    std::vector<int> vertex_orbit_of;          // base vertex -> orbit-vertex index
    std::vector<std::string> orbit_edge_label;
    std::vector<std::string> orbit_vertex_label;
    std::vector<int> min_edge_of_orbit;        // representative base edge (min label)
};

OrbitAssembly assemble_orbits(const RibbonBrauerGraph& g, const FreeBrauerAction& act) {
    OrbitAssembly a;
    a.darts = dart_orbits(g, act);

    // edge orbits: generators may map a dart to either dart of the image
    // edge, so group by edges directly rather than by dart orbits
    std::vector<int> eparent(g.num_edges());
    for (int e = 0; e < g.num_edges(); ++e) eparent[e] = e;
    std::function<int(int)> efind = [&](int e) {
        while (eparent[e] != e) e = eparent[e] = eparent[eparent[e]];
        return e;
    };
    for (int e = 0; e < g.num_edges(); ++e) {
        for (int k = 0; k < act.group.rank(); ++k) {
            int u = efind(e);
            int w = efind(g.edge_of(act.generator_perm[k][2 * e]));
            if (u != w) eparent[u] = w;
        }
    }
    std::map<int, std::vector<int>> edges_by_root;
    for (int e = 0; e < g.num_edges(); ++e) edges_by_root[efind(e)].push_back(e);
    // deterministic order: sort orbit groups by minimal edge label
    std::vector<std::pair<std::string, std::vector<int>>> groups;
    for (auto& [root, edges] : edges_by_root) {
        std::string min_label = g.edge_labels[edges.front()];
        for (int e : edges) min_label = std::min(min_label, g.edge_labels[e]);
        groups.push_back({min_label, edges});
    }
    std::sort(groups.begin(), groups.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    a.edge_orbit_of.assign(g.num_edges(), -1);
    for (size_t i = 0; i < groups.size(); ++i) {
        a.orbit_edge_label.push_back(groups[i].first);
        int min_edge = -1;
        for (int e : groups[i].second) {
            a.edge_orbit_of[e] = static_cast<int>(i);
            if (min_edge == -1 || g.edge_labels[e] < g.edge_labels[min_edge]) min_edge = e;
        }
        a.min_edge_of_orbit.push_back(min_edge);
    }

    // vertex orbits: vertices linked by any generator image of an incident dart
    std::vector<int> parent(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) parent[v] = v;
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (DartId d = 0; d < g.num_darts(); ++d) {
        for (int k = 0; k < act.group.rank(); ++k) {
            int u = find(g.vertex_of(d));
            int w = find(g.vertex_of(act.generator_perm[k][d]));
            if (u != w) parent[u] = w;
        }
    }
    std::map<int, std::string> root_label;
    for (int v = 0; v < g.num_vertices(); ++v) {
        int r = find(v);
        auto it = root_label.find(r);
        if (it == root_label.end() || g.vertex_labels[v] < it->second)
            root_label[r] = g.vertex_labels[v];
    }
    std::vector<std::pair<std::string, int>> vgroups;
    for (auto& [root, label] : root_label) vgroups.push_back({label, root});
    std::sort(vgroups.begin(), vgroups.end());
    std::map<int, int> root_index;
    for (size_t i = 0; i < vgroups.size(); ++i) {
        root_index[vgroups[i].second] = static_cast<int>(i);
        a.orbit_vertex_label.push_back(vgroups[i].first);
    }
    a.vertex_orbit_of.assign(g.num_vertices(), -1);
    for (int v = 0; v < g.num_vertices(); ++v) a.vertex_orbit_of[v] = root_index[find(v)];
    return a;
}

} // namespace

OrbitData orbit_graph(const RibbonBrauerGraph& g, const FreeBrauerAction& act) {
    require_valid_action(g, act);
    OrbitAssembly a = assemble_orbits(g, act);

    long long group_order = act.group.order();
    if (g.num_darts() % group_order != 0 ||
        static_cast<long long>(a.darts.members.size()) != g.num_darts() / group_order)
        throw std::logic_error("internal: dart orbits do not have size |G|");

    OrbitData out;
    RibbonBrauerGraph& q = out.orbit;
    q.vertex_labels = a.orbit_vertex_label;
    q.edge_labels = a.orbit_edge_label;
    q.multiplicity.assign(q.vertex_labels.size(), -1);
    q.dart_vertex.assign(2 * q.edge_labels.size(), -1);
    q.sigma.assign(2 * q.edge_labels.size(), -1);

    // orbit dart id: the orbit of base dart 2e* (+1) of the representative edge
    if (a.darts.members.size() != 2 * q.edge_labels.size())
        throw std::logic_error("internal: dart orbits do not pair into orbit edges");
    std::vector<int> orbit_dart_of_dartorbit(a.darts.members.size(), -1);
    for (size_t oe = 0; oe < q.edge_labels.size(); ++oe) {
        int rep_edge = a.min_edge_of_orbit[oe];
        for (DartId d : {2 * rep_edge, 2 * rep_edge + 1}) {
            int dart_orbit = a.darts.orbit_of[d];
            if (orbit_dart_of_dartorbit[dart_orbit] != -1)
                throw std::logic_error("internal: dart orbit claimed by two orbit edges");
            orbit_dart_of_dartorbit[dart_orbit] =
                static_cast<int>(2 * oe) + (d == 2 * rep_edge ? 0 : 1);
        }
    }
    out.dart_orbit.assign(g.num_darts(), -1);
    for (DartId d = 0; d < g.num_darts(); ++d) {
        out.dart_orbit[d] = orbit_dart_of_dartorbit[a.darts.orbit_of[d]];
        if (out.dart_orbit[d] == -1)
            throw std::logic_error("internal: dart orbit not attached to an orbit edge");
    }
    out.vertex_orbit = a.vertex_orbit_of;

    // induced structure maps
    for (DartId d = 0; d < g.num_darts(); ++d) {
        DartId od = out.dart_orbit[d];
        DartId os = out.dart_orbit[g.sigma[d]];
        if (q.sigma[od] == -1) q.sigma[od] = os;
        else if (q.sigma[od] != os)
            throw std::logic_error("internal: induced rotation is not well-defined");
        int ov = a.vertex_orbit_of[g.vertex_of(d)];
        if (q.dart_vertex[od] == -1) q.dart_vertex[od] = ov;
        else if (q.dart_vertex[od] != ov)
            throw std::logic_error("internal: induced incidence is not well-defined");
        if (out.dart_orbit[g.alpha(d)] != q.alpha(od))
            throw std::logic_error("internal: pairing does not descend to orbits");
    }

    // multiplicities: val(mu) m(mu) / val(orbit mu)
    for (int v = 0; v < g.num_vertices(); ++v) {
        int ov = a.vertex_orbit_of[v];
        int val_base = g.valency(v);
        int val_orbit = q.valency(ov);
        long long prod = static_cast<long long>(val_base) * g.multiplicity[v];
        if (prod % val_orbit != 0)
            throw std::logic_error("internal: orbit multiplicity is not integral");
        int m = static_cast<int>(prod / val_orbit);
        if (q.multiplicity[ov] == -1) q.multiplicity[ov] = m;
        else if (q.multiplicity[ov] != m)
            throw std::logic_error("internal: orbit multiplicity is not well-defined");
    }

    // quantizer transport via the equivariant endpoint choice
    if (g.quantized) {
        // E1 dart per base edge: the dart in the orbit of the representative
        // edge's even dart
        std::vector<DartId> e1_dart(g.num_edges(), -1);
        for (int e = 0; e < g.num_edges(); ++e) {
            int rep_edge = a.min_edge_of_orbit[a.edge_orbit_of[e]];
            int target_orbit = a.darts.orbit_of[2 * rep_edge];
            e1_dart[e] = (a.darts.orbit_of[2 * e] == target_orbit) ? 2 * e : 2 * e + 1;
        }
        std::map<DartId, Rational> qbar;
        for (DartId d = 0; d < g.num_darts(); ++d) {
            auto it = g.quantizer.find(d);
            if (it == g.quantizer.end()) continue;
            auto ref = g.quantizer.find(e1_dart[g.edge_of(d)]);
            if (ref == g.quantizer.end())
                throw std::logic_error("internal: quantizer missing on endpoint representative");
            Rational value = it->second / ref->second;
            DartId od = out.dart_orbit[d];
            auto [pos, inserted] = qbar.insert({od, value});
            if (!inserted && !(pos->second == value))
                throw std::logic_error("internal: orbit quantizer is not well-defined");
        }
        q.quantizer = std::move(qbar);
        q.quantized = true;
    }

    require_valid(q);
    if (q.num_vertices() > 0) q.valency(0);

    // successor-sequence decomposition per base vertex
    for (int v = 0; v < g.num_vertices(); ++v) {
        VertexDecomposition dec;
        dec.k = q.valency(a.vertex_orbit_of[v]);
        int val = g.valency(v);
        if (val % dec.k != 0)
            throw std::logic_error("internal: orbit valency does not divide valency");
        dec.s = val / dec.k - 1;
        DartId d0 = -1;
        for (DartId d = 0; d < g.num_darts(); ++d) {
            if (g.vertex_of(d) == v) { d0 = d; break; }
        }
        DartId dk = d0;
        for (int i = 0; i < dec.k; ++i) dk = g.sigma[dk];
        if (a.darts.orbit_of[dk] != a.darts.orbit_of[d0])
            throw std::logic_error("internal: successor block is not a translate");
        dec.g = act.group.compose(a.darts.translator[dk],
                                  act.group.inverse(a.darts.translator[d0]));
        out.decomposition.push_back(dec);
    }
    return out;
}

Presentation orbit_presentation(const RibbonBrauerGraph& g, const FreeBrauerAction& act) {
    require_valid_action(g, act);
    Presentation pres = build_presentation(g);
    if (act.group.order() == 1) return pres;
    if (g.num_edges() == 1 && is_truncated(g, 0) && is_truncated(g, 1))
        return pres;  // a free action on a single edge is necessarily trivial

    // induced action on the quiver: vertices move with edges, arrows with darts
    std::vector<int> arrow_of_dart(g.num_darts(), -1);
    for (size_t i = 0; i < pres.quiver.arrows.size(); ++i) {
        arrow_of_dart[pres.quiver.arrows[i].dart] = static_cast<int>(i);
    }
    QuiverAction qa;
    qa.group = act.group;
    for (int k = 0; k < act.group.rank(); ++k) {
        std::vector<int> vperm(g.num_edges());
        for (int e = 0; e < g.num_edges(); ++e)
            vperm[e] = g.edge_of(act.generator_perm[k][2 * e]);
        std::vector<int> aperm(pres.quiver.arrows.size(), -1);
        for (const Arrow& arr : pres.quiver.arrows) {
            int image = arrow_of_dart[act.generator_perm[k][arr.dart]];
            if (image == -1)
                throw std::logic_error("internal: truncation is not preserved by the action");
            aperm[arrow_of_dart[arr.dart]] = image;
        }
        qa.vertex_perm.push_back(std::move(vperm));
        qa.arrow_perm.push_back(std::move(aperm));
    }
    return orbit_quiver(pres, qa).orbit;
}

std::pair<OrbitData, BrauerWeighting> associated_weighting(const RibbonBrauerGraph& g,
                                                           const FreeBrauerAction& act) {
    OrbitData data = orbit_graph(g, act);
    DartOrbits orbits = dart_orbits(g, act);

    const RibbonBrauerGraph& q = data.orbit;
    BrauerWeighting W;
    W.group = act.group;
    W.w.assign(q.num_darts(), act.group.identity());

    // representative dart per orbit dart: the dart lying on the minimal edge
    std::vector<DartId> rep(q.num_darts(), -1);
    for (DartId d = 0; d < g.num_darts(); ++d) {
        DartId od = data.dart_orbit[d];
        if (rep[od] == -1 || g.dart_label_less(d, rep[od])) rep[od] = d;
    }
    for (DartId od = 0; od < q.num_darts(); ++od) {
        DartId r = rep[od];
        DartId succ = g.sigma[r];                  // successor of the representative
        DartId rep_succ = rep[q.sigma[od]];        // representative of the successor orbit
        if (orbits.orbit_of[succ] != orbits.orbit_of[rep_succ])
            throw std::logic_error("internal: successor orbit mismatch");
        W.w[od] = act.group.compose(orbits.translator[succ],
                                    act.group.inverse(orbits.translator[rep_succ]));
    }
    require_valid_weighting(q, W);
    return {std::move(data), std::move(W)};
}

} // namespace brauer
