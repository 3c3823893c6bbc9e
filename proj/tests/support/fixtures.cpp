#include "support/fixtures.hpp"

namespace fixtures {

RibbonBrauerGraph three_edges(const std::string& q30, const std::string& q31) {
    return make_graph(
        {{"mu", 1}, {"lambda", 1}, {"nu", 1}, {"xi", 2}},
        {{"1", "mu", "lambda"}, {"2", "lambda", "nu"}, {"3", "lambda", "xi"}},
        {{"mu", {"1.0"}},
         {"lambda", {"1.1", "2.0", "3.0"}},
         {"nu", {"2.1"}},
         {"xi", {"3.1"}}},
        {{"3.0", q30}, {"3.1", q31}});
}

RibbonBrauerGraph triangle_m3() {
    return make_graph(
        {{"mu", 3}, {"nu", 1}, {"xi", 1}},
        {{"1", "mu", "nu"}, {"2", "xi", "nu"}, {"3", "mu", "xi"}},
        {{"mu", {"1.0", "3.0"}}, {"nu", {"1.1", "2.1"}}, {"xi", {"2.0", "3.1"}}},
        {{"1.0", "1"}, {"1.1", "1"}, {"2.0", "1"}, {"2.1", "1"}, {"3.0", "1"}, {"3.1", "1"}});
}

RibbonBrauerGraph single_edge() {
    return make_graph({{"mu", 1}, {"nu", 1}}, {{"1", "mu", "nu"}},
                      {{"mu", {"1.0"}}, {"nu", {"1.1"}}});
}

RibbonBrauerGraph star6() {
    std::vector<GraphVertexSpec> vertices{{"mu", 1}};
    std::vector<GraphEdgeSpec> edges;
    std::map<std::string, std::vector<std::string>> rotation;
    std::vector<std::string> center;
    for (int k = 1; k <= 6; ++k) {
        std::string leaf = "l" + std::to_string(k);
        std::string edge = "i" + std::to_string(k);
        vertices.push_back({leaf, 1});
        edges.push_back({edge, "mu", leaf});
        rotation[leaf] = {edge + ".1"};
        center.push_back(edge + ".0");
    }
    rotation["mu"] = center;
    return make_graph(vertices, edges, rotation);
}

FreeBrauerAction star6_action() {
    FreeBrauerAction act;
    act.group = AbelianGroup({2});
    std::vector<DartId> perm(12);
    for (int e = 0; e < 6; ++e) {
        int image = (e + 3) % 6;
        perm[2 * e] = 2 * image;
        perm[2 * e + 1] = 2 * image + 1;
    }
    act.generator_perm.push_back(perm);
    return act;
}

RibbonBrauerGraph star3_m2() {
    return make_graph(
        {{"c", 2}, {"p1", 1}, {"p2", 1}, {"p3", 1}},
        {{"j1", "c", "p1"}, {"j2", "c", "p2"}, {"j3", "c", "p3"}},
        {{"c", {"j1.0", "j2.0", "j3.0"}}, {"p1", {"j1.1"}}, {"p2", {"j2.1"}}, {"p3", {"j3.1"}}});
}

RibbonBrauerGraph triangle39() {
    return make_graph({{"t", 3}, {"l", 1}, {"r", 1}},
                      {{"a", "t", "l"}, {"b", "t", "r"}, {"c", "l", "r"}},
                      {{"t", {"a.0", "b.0"}}, {"l", {"c.0", "a.1"}}, {"r", {"b.1", "c.1"}}});
}

BrauerWeighting triangle39_weighting() {
    RibbonBrauerGraph g = triangle39();
    BrauerWeighting W;
    W.group = AbelianGroup({3});
    W.w.assign(g.num_darts(), W.group.identity());
    W.w[g.dart_by_name("b.0")] = GroupElement{{1}};  // W(b, a) = g at the top vertex
    return W;
}

RibbonBrauerGraph triangle39_cover() {
    // the drawn nine-edge Z_3-cover: one central vertex of valency six,
    // six outer vertices of valency two
    return make_graph(
        {{"C", 1}, {"v1", 1}, {"v2", 1}, {"v3", 1}, {"v5", 1}, {"v6", 1}, {"v7", 1}},
        {{"ag", "v1", "C"},
         {"bg", "v2", "C"},
         {"cg", "v1", "v2"},
         {"aid", "v6", "C"},
         {"bid", "v3", "C"},
         {"cid", "v6", "v3"},
         {"agg", "C", "v5"},
         {"bgg", "v7", "C"},
         {"cgg", "v7", "v5"}},
        {{"C", {"ag.1", "bg.1", "agg.0", "bgg.1", "aid.1", "bid.1"}},
         {"v1", {"ag.0", "cg.0"}},
         {"v2", {"bg.0", "cg.1"}},
         {"v3", {"bid.0", "cid.1"}},
         {"v5", {"agg.1", "cgg.1"}},
         {"v6", {"aid.0", "cid.0"}},
         {"v7", {"bgg.0", "cgg.0"}}});
}

BrauerWeighting trivial_weighting(const RibbonBrauerGraph& g, const AbelianGroup& group) {
    BrauerWeighting W;
    W.group = group;
    W.w.assign(g.num_darts(), group.identity());
    return W;
}

FreeBrauerAction trivial_action(const RibbonBrauerGraph& g) {
    FreeBrauerAction act;
    act.group = AbelianGroup(std::vector<int>{});
    (void)g;
    return act;
}

} // namespace fixtures
