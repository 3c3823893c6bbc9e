#include "brauer/quiver_cover.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

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

struct Orbits {
    std::vector<int> orbit_of;
    std::vector<GroupElement> translator;  // rep^translator = element
    std::vector<int> rep;                  // per orbit
};

// Orbits under the generator permutations, with translators measured from a
// deterministically chosen representative (minimal name).
Orbits compute_orbits(int n, const std::vector<std::vector<int>>& perms,
                      const AbelianGroup& group, const std::vector<std::string>& names) {
    Orbits out;
    out.orbit_of.assign(n, -1);
    // union-find first so the representative can be picked before BFS
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    std::vector<int> order;
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (int i = 0; i < n; ++i) {
        for (const auto& perm : perms) {
            int a = find(i), b = find(perm[i]);
            if (a != b) parent[a] = b;
        }
    }
    std::map<int, int> best;  // root -> representative
    for (int i = 0; i < n; ++i) {
        int r = find(i);
        auto it = best.find(r);
        if (it == best.end() || names[i] < names[it->second]) best[r] = i;
    }
    std::vector<int> reps;
    for (auto& [root, rep] : best) reps.push_back(rep);
    std::sort(reps.begin(), reps.end(),
              [&](int a, int b) { return names[a] < names[b]; });

    out.translator.assign(n, group.identity());
    for (size_t oi = 0; oi < reps.size(); ++oi) {
        int rep = reps[oi];
        out.rep.push_back(rep);
        std::vector<int> stack{rep};
        out.orbit_of[rep] = static_cast<int>(oi);
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            for (size_t k = 0; k < perms.size(); ++k) {
                int next = perms[k][cur];
                GroupElement t = group.compose(out.translator[cur], group.generator(static_cast<int>(k)));
                if (out.orbit_of[next] == -1) {
                    out.orbit_of[next] = static_cast<int>(oi);
                    out.translator[next] = t;
                    stack.push_back(next);
                } else if (!(out.translator[next] == t)) {
                    throw std::logic_error("internal: non-free action reached orbit assembly");
                }
            }
        }
    }
    return out;
}

Relation map_relation(const Relation& r, const std::vector<int>& arrow_map) {
    Relation out;
    out.type = r.type;
    for (const auto& t : r.terms) {
        PathTerm nt;
        nt.coeff = t.coeff;
        for (int a : t.arrows) nt.arrows.push_back(arrow_map[a]);
        out.terms.push_back(std::move(nt));
    }
    return out;
}

bool proportional(const Relation& a, const Relation& b) {
    // assumes same_support; terms aligned
    if (a.terms.size() == 1) return true;
    return a.terms[0].coeff * b.terms[1].coeff == a.terms[1].coeff * b.terms[0].coeff;
}

void normalize_term_order(Relation& r) {
    std::sort(r.terms.begin(), r.terms.end(),
              [](const PathTerm& x, const PathTerm& y) { return x.arrows < y.arrows; });
}

using SupportKey = std::pair<int, std::vector<std::vector<int>>>;

SupportKey support_key(const Relation& r) {
    SupportKey key{static_cast<int>(r.type), {}};
    for (const auto& t : r.terms) key.second.push_back(t.arrows);
    return key;
}

} // namespace

std::vector<std::string> validate_quiver_action(const Presentation& p, const QuiverAction& act) {
    std::vector<std::string> issues;
    int nv = static_cast<int>(p.quiver.vertex_names.size());
    int na = static_cast<int>(p.quiver.arrows.size());
    if (static_cast<int>(act.vertex_perm.size()) != act.group.rank() ||
        static_cast<int>(act.arrow_perm.size()) != act.group.rank()) {
        issues.push_back("expected one vertex and one arrow permutation per cyclic factor");
        return issues;
    }
    for (int k = 0; k < act.group.rank(); ++k) {
        if (!is_permutation(act.vertex_perm[k], nv) || !is_permutation(act.arrow_perm[k], na)) {
            issues.push_back("generator " + std::to_string(k) + " is not a permutation");
            return issues;
        }
    }
    for (int k = 0; k < act.group.rank(); ++k) {
        // respects sources and targets
        for (int a = 0; a < na; ++a) {
            const Arrow& arr = p.quiver.arrows[a];
            const Arrow& img = p.quiver.arrows[act.arrow_perm[k][a]];
            if (img.source != act.vertex_perm[k][arr.source] ||
                img.target != act.vertex_perm[k][arr.target]) {
                issues.push_back("generator " + std::to_string(k) +
                                 " is not a quiver map at arrow " + arr.name);
                break;
            }
        }
        // order divides the cyclic order
        std::vector<int> vp(nv), ap(na);
        for (int i = 0; i < nv; ++i) vp[i] = i;
        for (int i = 0; i < na; ++i) ap[i] = i;
        for (int rep = 0; rep < act.group.cyclic_orders()[k]; ++rep) {
            std::vector<int> vp2(nv), ap2(na);
            for (int i = 0; i < nv; ++i) vp2[i] = act.vertex_perm[k][vp[i]];
            for (int i = 0; i < na; ++i) ap2[i] = act.arrow_perm[k][ap[i]];
            vp = vp2;
            ap = ap2;
        }
        for (int i = 0; i < nv; ++i) {
            if (vp[i] != i) {
                issues.push_back("generator " + std::to_string(k) +
                                 " does not have order dividing its cyclic order");
                break;
            }
        }
    }
    for (int k = 0; k < act.group.rank(); ++k) {
        for (int l = k + 1; l < act.group.rank(); ++l) {
            for (int i = 0; i < nv; ++i) {
                if (act.vertex_perm[k][act.vertex_perm[l][i]] !=
                    act.vertex_perm[l][act.vertex_perm[k][i]]) {
                    issues.push_back("vertex permutations do not commute");
                    break;
                }
            }
            for (int i = 0; i < na; ++i) {
                if (act.arrow_perm[k][act.arrow_perm[l][i]] !=
                    act.arrow_perm[l][act.arrow_perm[k][i]]) {
                    issues.push_back("arrow permutations do not commute");
                    break;
                }
            }
        }
    }
    if (!issues.empty()) return issues;

    // freeness on vertices and on arrows: orbit sizes must equal |G|
    {
        std::vector<int> seen(nv, 0);
        for (int v = 0; v < nv; ++v) {
            if (seen[v]) continue;
            std::vector<int> stack{v};
            seen[v] = 1;
            long long size = 1;
            while (!stack.empty()) {
                int cur = stack.back();
                stack.pop_back();
                for (int k = 0; k < act.group.rank(); ++k) {
                    int next = act.vertex_perm[k][cur];
                    if (!seen[next]) {
                        seen[next] = 1;
                        ++size;
                        stack.push_back(next);
                    }
                }
            }
            if (size != act.group.order()) {
                issues.push_back("action is not free on vertices (orbit of " +
                                 p.quiver.vertex_names[v] + " has size " + std::to_string(size) +
                                 ")");
                return issues;
            }
        }
    }

    // the relation set must map into itself up to scalars
    {
        std::map<SupportKey, std::vector<Relation>> by_support;
        for (const Relation& r : p.relations) {
            Relation n = r;
            normalize_term_order(n);
            by_support[support_key(n)].push_back(n);
        }
        for (int k = 0; k < act.group.rank(); ++k) {
            for (const Relation& r : p.relations) {
                Relation image = map_relation(r, act.arrow_perm[k]);
                normalize_term_order(image);
                bool found = false;
                auto it = by_support.find(support_key(image));
                if (it != by_support.end()) {
                    for (const Relation& cand : it->second) {
                        if (proportional(image, cand)) { found = true; break; }
                    }
                }
                if (!found) {
                    issues.push_back("relation set is not stable under generator " +
                                     std::to_string(k));
                    return issues;
                }
            }
        }
    }
    return issues;
}

void require_valid_quiver_action(const Presentation& p, const QuiverAction& act) {
    auto issues = validate_quiver_action(p, act);
    if (issues.empty()) return;
    std::string msg = "not a free quiver action:";
    for (const auto& s : issues) msg += "\n  " + s;
    throw std::invalid_argument(msg);
}

QuiverOrbitResult orbit_quiver(const Presentation& p, const QuiverAction& act) {
    require_valid_quiver_action(p, act);
    int nv = static_cast<int>(p.quiver.vertex_names.size());
    int na = static_cast<int>(p.quiver.arrows.size());

    std::vector<std::string> arrow_names;
    for (const Arrow& a : p.quiver.arrows) arrow_names.push_back(a.name);
    Orbits vo = compute_orbits(nv, act.vertex_perm, act.group, p.quiver.vertex_names);
    Orbits ao = compute_orbits(na, act.arrow_perm, act.group, arrow_names);

    QuiverOrbitResult out;
    out.vertex_orbit = vo.orbit_of;
    out.arrow_orbit = ao.orbit_of;
    for (int rep : vo.rep) out.orbit.quiver.vertex_names.push_back(p.quiver.vertex_names[rep]);
    for (int rep : ao.rep) {
        Arrow a;
        a.name = p.quiver.arrows[rep].name;
        a.source = vo.orbit_of[p.quiver.arrows[rep].source];
        a.target = vo.orbit_of[p.quiver.arrows[rep].target];
        a.dart = -1;
        out.orbit.quiver.arrows.push_back(a);
    }

    // orbit ideal: images of the generators, deduplicated up to scalar
    std::map<SupportKey, std::vector<int>> kept_by_support;
    for (const Relation& r : p.relations) {
        Relation image = map_relation(r, ao.orbit_of);
        normalize_term_order(image);
        bool duplicate = false;
        auto key = support_key(image);
        auto it = kept_by_support.find(key);
        if (it != kept_by_support.end()) {
            for (int idx : it->second) {
                if (proportional(image, out.orbit.relations[idx])) {
                    duplicate = true;
                    break;
                }
            }
        }
        if (!duplicate) {
            kept_by_support[key].push_back(static_cast<int>(out.orbit.relations.size()));
            out.orbit.relations.push_back(std::move(image));
        }
    }

    // induced weight: for each arrow orbit, the fiber offset of the unique
    // member based at the source representative
    for (size_t oi = 0; oi < ao.rep.size(); ++oi) {
        const Arrow& rep_arrow = out.orbit.quiver.arrows[oi];
        int src_rep = vo.rep[rep_arrow.source];
        GroupElement weight = act.group.identity();
        bool found = false;
        for (int a = 0; a < na; ++a) {
            if (ao.orbit_of[a] != static_cast<int>(oi)) continue;
            if (p.quiver.arrows[a].source != src_rep) continue;
            weight = vo.translator[p.quiver.arrows[a].target];
            found = true;
            break;
        }
        if (!found) throw std::logic_error("internal: no arrow based at the orbit representative");
        out.induced_weight.push_back(weight);
    }
    return out;
}

QuiverCoverResult covering_quiver(const Presentation& p, const AbelianGroup& group,
                                  const std::vector<GroupElement>& arrow_weight) {
    if (arrow_weight.size() != p.quiver.arrows.size())
        throw std::invalid_argument("weight function must cover every arrow");
    for (size_t ri = 0; ri < p.relations.size(); ++ri) {
        const Relation& r = p.relations[ri];
        GroupElement ref;
        bool first = true;
        for (const auto& term : r.terms) {
            GroupElement deg = group.identity();
            for (int a : term.arrows) deg = group.compose(deg, arrow_weight[a]);
            if (first) {
                ref = deg;
                first = false;
            } else if (!(deg == ref)) {
                throw std::invalid_argument("relation " + std::to_string(ri) +
                                            " is not weight homogeneous; cannot lift the ideal");
            }
        }
    }

    std::vector<GroupElement> elements = group.elements();
    long long n = group.order();
    int nv = static_cast<int>(p.quiver.vertex_names.size());
    int na = static_cast<int>(p.quiver.arrows.size());

    QuiverCoverResult out;
    auto vertex_index = [&](int v, long long gi) { return v * n + gi; };
    auto arrow_index = [&](int a, long long gi) { return a * n + gi; };
    for (int v = 0; v < nv; ++v) {
        for (long long gi = 0; gi < n; ++gi) {
            out.cover.quiver.vertex_names.push_back(p.quiver.vertex_names[v] + "@" +
                                                    group.to_string(elements[gi]));
            out.base_vertex.push_back(v);
            out.vertex_fiber.push_back(elements[gi]);
        }
    }
    for (int a = 0; a < na; ++a) {
        const Arrow& base = p.quiver.arrows[a];
        for (long long gi = 0; gi < n; ++gi) {
            Arrow lifted;
            lifted.name = base.name + "@" + group.to_string(elements[gi]);
            lifted.source = static_cast<int>(vertex_index(base.source, gi));
            GroupElement target_fiber = group.compose(elements[gi], arrow_weight[a]);
            lifted.target = static_cast<int>(vertex_index(base.target, group.index_of(target_fiber)));
            lifted.dart = -1;
            out.cover.quiver.arrows.push_back(lifted);
            out.base_arrow.push_back(a);
        }
    }

    // each relation lifts uniquely from every fiber element over its source
    for (const Relation& r : p.relations) {
        for (long long gi = 0; gi < n; ++gi) {
            Relation lifted;
            lifted.type = r.type;
            for (const auto& term : r.terms) {
                PathTerm lt;
                lt.coeff = term.coeff;
                GroupElement fiber = elements[gi];
                for (int a : term.arrows) {
                    lt.arrows.push_back(static_cast<int>(arrow_index(a, group.index_of(fiber))));
                    fiber = group.compose(fiber, arrow_weight[a]);
                }
                lifted.terms.push_back(std::move(lt));
            }
            out.cover.relations.push_back(std::move(lifted));
        }
    }

    out.canonical_action.group = group;
    for (int k = 0; k < group.rank(); ++k) {
        GroupElement gen = group.generator(k);
        std::vector<int> vperm(out.cover.quiver.vertex_names.size());
        std::vector<int> aperm(out.cover.quiver.arrows.size());
        for (int v = 0; v < nv; ++v) {
            for (long long gi = 0; gi < n; ++gi) {
                long long hi = group.index_of(group.compose(elements[gi], gen));
                vperm[vertex_index(v, gi)] = static_cast<int>(vertex_index(v, hi));
            }
        }
        for (int a = 0; a < na; ++a) {
            for (long long gi = 0; gi < n; ++gi) {
                long long hi = group.index_of(group.compose(elements[gi], gen));
                aperm[arrow_index(a, gi)] = static_cast<int>(arrow_index(a, hi));
            }
        }
        out.canonical_action.vertex_perm.push_back(std::move(vperm));
        out.canonical_action.arrow_perm.push_back(std::move(aperm));
    }
    return out;
}

} // namespace brauer
