#include "brauer/tower.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace brauer {

long long multiplicity_lcm(const RibbonBrauerGraph& g) {
    long long n = 1;
    for (int m : g.multiplicity) n = std::lcm<long long>(n, m);
    return n;
}

bool has_loops(const RibbonBrauerGraph& g) {
    for (int e = 0; e < g.num_edges(); ++e) {
        if (g.vertex_of(2 * e) == g.vertex_of(2 * e + 1)) return true;
    }
    return false;
}

bool has_multiple_edges(const RibbonBrauerGraph& g) {
    std::set<std::pair<int, int>> seen;
    for (int e = 0; e < g.num_edges(); ++e) {
        int u = g.vertex_of(2 * e), v = g.vertex_of(2 * e + 1);
        if (!seen.insert({std::min(u, v), std::max(u, v)}).second) return true;
    }
    return false;
}

namespace {

// Minimal dart at each vertex by (edge label, half-edge) order; the
// distinguished edge occurrence of the constructions below.
std::vector<DartId> distinguished_darts(const RibbonBrauerGraph& g) {
    std::vector<DartId> best(g.num_vertices(), -1);
    for (DartId d = 0; d < g.num_darts(); ++d) {
        int v = g.vertex_of(d);
        if (best[v] == -1 || g.dart_label_less(d, best[v])) best[v] = d;
    }
    return best;
}

void assert_trivial_products(const RibbonBrauerGraph& g, const BrauerWeighting& W,
                             const char* stage) {
    std::vector<GroupElement> omega(g.num_vertices(), W.group.identity());
    for (DartId d = 0; d < g.num_darts(); ++d) {
        int v = g.vertex_of(d);
        omega[v] = W.group.compose(omega[v], W.at(d));
    }
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (!(omega[v] == W.group.identity()))
            throw std::logic_error(std::string("internal: ") + stage +
                                   " weighting must have trivial rotation products");
    }
}

} // namespace

std::optional<BrauerWeighting> multiplicity_removal_weighting(const RibbonBrauerGraph& g) {
    require_valid(g);
    long long n = multiplicity_lcm(g);
    if (n == 1) return std::nullopt;

    BrauerWeighting W;
    W.group = AbelianGroup({static_cast<int>(n)});
    W.w.assign(g.num_darts(), W.group.identity());
    std::vector<DartId> dist = distinguished_darts(g);
    for (int v = 0; v < g.num_vertices(); ++v) {
        GroupElement value{{static_cast<int>(n / g.multiplicity[v] % n)}};
        W.w[dist[v]] = value;
    }
    require_valid_weighting(g, W);
    return W;
}

std::optional<BrauerWeighting> loop_removal_weighting(const RibbonBrauerGraph& g, int p) {
    require_valid(g);
    if (p < 2) throw std::invalid_argument("loop removal requires p >= 2");
    std::vector<int> loops;
    for (int e = 0; e < g.num_edges(); ++e) {
        if (g.vertex_of(2 * e) == g.vertex_of(2 * e + 1)) loops.push_back(e);
    }
    if (loops.empty()) return std::nullopt;

    BrauerWeighting W;
    W.group = AbelianGroup(std::vector<int>(loops.size(), p));
    W.w.assign(g.num_darts(), W.group.identity());
    std::map<int, int> loop_index;
    for (size_t k = 0; k < loops.size(); ++k) loop_index[loops[k]] = static_cast<int>(k);

    // Walk each vertex's rotation from its distinguished dart; the first
    // occurrence of loop k carries z_k, the second its inverse.
    std::vector<DartId> dist = distinguished_darts(g);
    for (int v = 0; v < g.num_vertices(); ++v) {
        std::set<int> seen;
        for (DartId d : successor_sequence(g, dist[v])) {
            auto it = loop_index.find(g.edge_of(d));
            if (it == loop_index.end()) continue;
            GroupElement z = W.group.generator(it->second);
            W.w[d] = seen.insert(it->second).second ? z : W.group.inverse(z);
        }
    }
    require_valid_weighting(g, W);
    // every rotation product collapses, so any multiplicity is admissible
    assert_trivial_products(g, W, "loop removal");
    return W;
}

std::optional<BrauerWeighting> multi_edge_removal_weighting(const RibbonBrauerGraph& g,
                                                            unsigned long long flip_mask) {
    require_valid(g);
    if (has_loops(g))
        throw std::invalid_argument("multi-edge removal requires a loop-free graph");

    // alpha-marked endpoint pairs, ordered by (vertex label, vertex label)
    std::map<std::pair<int, int>, std::vector<int>> by_pair;
    for (int e = 0; e < g.num_edges(); ++e) {
        int u = g.vertex_of(2 * e), v = g.vertex_of(2 * e + 1);
        if (g.vertex_labels[u] > g.vertex_labels[v]) std::swap(u, v);
        by_pair[{u, v}].push_back(e);
    }
    struct MarkedPair {
        int distinguished;
        std::vector<int> edges;
    };
    std::vector<std::pair<std::pair<std::string, std::string>, MarkedPair>> marked;
    for (auto& [pair, edges] : by_pair) {
        if (edges.size() < 2) continue;
        marked.push_back({{g.vertex_labels[pair.first], g.vertex_labels[pair.second]},
                          {pair.first, edges}});
    }
    if (marked.empty()) return std::nullopt;
    std::sort(marked.begin(), marked.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<int> orders;
    for (auto& [labels, mp] : marked) orders.push_back(static_cast<int>(mp.edges.size()));
    BrauerWeighting W;
    W.group = AbelianGroup(orders);
    W.w.assign(g.num_darts(), W.group.identity());
    for (size_t k = 0; k < marked.size(); ++k) {
        MarkedPair& mp = marked[k].second;
        int distinguished = mp.distinguished;
        if (flip_mask & (1ull << k)) {
            // the other endpoint of the pair
            int e0 = mp.edges.front();
            int u = g.vertex_of(2 * e0), v = g.vertex_of(2 * e0 + 1);
            distinguished = (distinguished == u) ? v : u;
        }
        GroupElement z = W.group.generator(static_cast<int>(k));
        for (int e : mp.edges) {
            for (DartId d : {2 * e, 2 * e + 1}) {
                if (g.vertex_of(d) == distinguished) W.w[d] = z;
            }
        }
    }
    require_valid_weighting(g, W);
    assert_trivial_products(g, W, "multi-edge removal");
    return W;
}

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

void check_budget(const RibbonBrauerGraph& g, const BrauerWeighting& W, long long max_edges) {
    long long out_edges = g.num_edges() * W.group.order();
    if (out_edges > max_edges)
        throw TowerBudgetExceeded("stage would produce " + std::to_string(out_edges) +
                                  " edges, over the budget of " + std::to_string(max_edges));
}

// Checks edges * product-of-factors against the budget without building
// anything; the group itself may be far too large to enumerate.
void check_predicted_budget(const RibbonBrauerGraph& g, const std::vector<long long>& factors,
                            long long max_edges) {
    long long out_edges = g.num_edges();
    for (long long f : factors) {
        if (out_edges > max_edges / f)
            throw TowerBudgetExceeded("stage group is too large for the edge budget of " +
                                      std::to_string(max_edges));
        out_edges *= f;
    }
    if (out_edges > max_edges)
        throw TowerBudgetExceeded("stage would produce " + std::to_string(out_edges) +
                                  " edges, over the budget of " + std::to_string(max_edges));
}

} // namespace

Tower build_tower(const RibbonBrauerGraph& g, const TowerOptions& opts) {
    require_valid(g);
    Tower tower;
    tower.initial = g;

    auto current = [&]() -> const RibbonBrauerGraph& { return tower.result(); };

    if (auto W = multiplicity_removal_weighting(current())) {
        check_budget(current(), *W, opts.max_edges);
        CoveringOutput cov = covering_graph(current(), *W);
        for (int m : cov.cover.multiplicity) {
            if (m != 1)
                throw std::logic_error("internal: multiplicity stage left a multiplicity > 1");
        }
        tower.stages.push_back({"multiplicity", std::move(*W), std::move(cov)});
    }

    if (has_loops(current())) {
        // The first prime whose lift is connected works; interleaved loops
        // can force the voltages of one prime into a proper subgroup.
        int p = opts.loop_p;
        std::optional<TowerStage> stage;
        for (int attempts = 0; attempts < 16; ++attempts) {
            while (!is_prime(p)) ++p;
            {
                long long loop_count = 0;
                for (int e = 0; e < current().num_edges(); ++e) {
                    if (current().vertex_of(2 * e) == current().vertex_of(2 * e + 1))
                        ++loop_count;
                }
                check_predicted_budget(current(),
                                       std::vector<long long>(loop_count, p), opts.max_edges);
            }
            auto W = loop_removal_weighting(current(), p);
            check_budget(current(), *W, opts.max_edges);
            try {
                CoveringOutput cov = covering_graph(current(), *W);
                stage = TowerStage{"loops", std::move(*W), std::move(cov)};
                break;
            } catch (const CoverDisconnected&) {
                if (!opts.auto_adjust) throw;
                ++p;
            }
        }
        if (!stage)
            throw std::runtime_error("loop removal failed: no prime up to the retry limit "
                                     "yields a connected cover");
        const RibbonBrauerGraph& prev = current();
        if (has_loops(stage->output.cover))
            throw std::logic_error("internal: loop stage left a loop");
        for (int v = 0; v < stage->output.cover.num_vertices(); ++v) {
            if (stage->output.cover.multiplicity[v] !=
                prev.multiplicity[stage->output.base_vertex[v]])
                throw std::logic_error("internal: loop stage changed a multiplicity");
        }
        tower.stages.push_back(std::move(*stage));
    }

    if (has_multiple_edges(current())) {
        {
            std::map<std::pair<int, int>, long long> pair_count;
            for (int e = 0; e < current().num_edges(); ++e) {
                int u = current().vertex_of(2 * e), v = current().vertex_of(2 * e + 1);
                ++pair_count[{std::min(u, v), std::max(u, v)}];
            }
            std::vector<long long> factors;
            for (const auto& [pair, count] : pair_count) {
                if (count >= 2) factors.push_back(count);
            }
            check_predicted_budget(current(), factors, opts.max_edges);
        }
        std::optional<TowerStage> stage;
        unsigned long long mask = 0;
        for (int attempts = 0; attempts < (1 << 12); ++attempts, ++mask) {
            auto W = multi_edge_removal_weighting(current(), mask);
            check_budget(current(), *W, opts.max_edges);
            try {
                CoveringOutput cov = covering_graph(current(), *W);
                stage = TowerStage{"multiedges", std::move(*W), std::move(cov)};
                break;
            } catch (const CoverDisconnected&) {
                if (!opts.auto_adjust) throw;
            }
        }
        if (!stage)
            throw std::runtime_error("multi-edge removal failed: no distinguished-vertex "
                                     "assignment yields a connected cover");
        const RibbonBrauerGraph& prev = current();
        if (has_loops(stage->output.cover) || has_multiple_edges(stage->output.cover))
            throw std::logic_error("internal: multi-edge stage left a loop or a multiple edge");
        for (int v = 0; v < stage->output.cover.num_vertices(); ++v) {
            if (stage->output.cover.multiplicity[v] !=
                prev.multiplicity[stage->output.base_vertex[v]])
                throw std::logic_error("internal: multi-edge stage changed a multiplicity");
        }
        tower.stages.push_back(std::move(*stage));
    }

    const RibbonBrauerGraph& final_graph = tower.result();
    if (multiplicity_lcm(final_graph) != 1 || has_loops(final_graph) ||
        has_multiple_edges(final_graph))
        throw std::logic_error("internal: tower did not normalize the graph");
    return tower;
}

} // namespace brauer
