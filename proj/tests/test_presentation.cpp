#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "brauer/presentation.hpp"
#include "brauer/random_gen.hpp"
#include "support/fixtures.hpp"

using namespace brauer;

namespace {

Presentation make_pres(std::vector<std::string> vertices,
                       std::vector<std::tuple<std::string, int, int>> arrows,
                       std::vector<Relation> relations) {
    Presentation p;
    p.quiver.vertex_names = std::move(vertices);
    for (auto& [name, src, dst] : arrows) p.quiver.arrows.push_back({name, src, dst, -1});
    p.relations = std::move(relations);
    return p;
}

Relation rel(RelationType type, std::vector<std::pair<Rational, std::vector<int>>> terms) {
    Relation r;
    r.type = type;
    for (auto& [c, path] : terms) r.terms.push_back({c, path});
    return r;
}

int count_type(const Presentation& p, RelationType t) {
    return static_cast<int>(std::count_if(p.relations.begin(), p.relations.end(),
                                          [&](const Relation& r) { return r.type == t; }));
}

} // namespace

TEST_CASE("cycles") {
    RibbonBrauerGraph tri = fixtures::triangle_m3();
    SUBCASE("edge 1 at mu runs through edge 3") {
        auto c = cycle(tri, tri.dart_by_name("1.0"));
        REQUIRE(c.size() == 2);
        CHECK(c[0] == tri.dart_by_name("1.0"));
        CHECK(c[1] == tri.dart_by_name("3.0"));
    }
    SUBCASE("edge 1 at nu runs through edge 2") {
        auto c = cycle(tri, tri.dart_by_name("1.1"));
        REQUIRE(c.size() == 2);
        CHECK(c[1] == tri.dart_by_name("2.1"));
    }
    SUBCASE("valency-one vertex with multiplicity two gives a length-one cycle") {
        RibbonBrauerGraph g = fixtures::three_edges();
        auto c = cycle(g, g.dart_by_name("3.1"));
        CHECK(c.size() == 1);
    }
    SUBCASE("no cycle at a truncated dart") {
        RibbonBrauerGraph g = fixtures::three_edges();
        CHECK_THROWS_AS(cycle(g, g.dart_by_name("1.0")), std::domain_error);
    }
}

TEST_CASE("three-edge example presentation") {
    Presentation built = build_presentation(fixtures::three_edges());
    CHECK(built.quiver.vertex_names.size() == 3);
    CHECK(built.quiver.arrows.size() == 4);
    CHECK(built.relations.size() == 5);
    CHECK(count_type(built, RelationType::One) == 1);
    CHECK(count_type(built, RelationType::Two) == 2);
    CHECK(count_type(built, RelationType::Three) == 2);

    // expected by hand: arrows al: v1->v2, be: v2->v3, ga: v3->v1, de: v3->v3,
    // relations de^2 - ga al be, al be ga al, be ga al be, be de, de ga
    Presentation expected = make_pres(
        {"v1", "v2", "v3"}, {{"al", 0, 1}, {"be", 1, 2}, {"ga", 2, 0}, {"de", 2, 2}},
        {rel(RelationType::One, {{1, {3, 3}}, {-1, {2, 0, 1}}}),
         rel(RelationType::Two, {{1, {0, 1, 2, 0}}}),
         rel(RelationType::Two, {{1, {1, 2, 0, 1}}}),
         rel(RelationType::Three, {{1, {1, 3}}}),
         rel(RelationType::Three, {{1, {3, 2}}})});
    CHECK(presentation_iso(built, expected));

    // the ideal depends on the quantizer only through the ratio of the two
    // edge-end values
    Presentation scaled = build_presentation(fixtures::three_edges("5/2", "-1/3"));
    CHECK_FALSE(presentation_iso(scaled, expected));
    Presentation same_ratio = build_presentation(fixtures::three_edges("5", "-2/3"));
    CHECK(presentation_iso(scaled, same_ratio));
}

TEST_CASE("triangle example presentation") {
    Presentation built = build_presentation(fixtures::triangle_m3());
    CHECK(built.quiver.vertex_names.size() == 3);
    CHECK(built.quiver.arrows.size() == 6);
    CHECK(count_type(built, RelationType::One) == 3);
    CHECK(count_type(built, RelationType::Two) == 0);
    CHECK(count_type(built, RelationType::Three) == 6);

    // cycle-power exponents of the type-one relations: every cycle here has
    // length two, so the exponent pair is half the path lengths
    std::vector<std::pair<int, int>> exponents;
    for (const Relation& r : built.relations) {
        if (r.type != RelationType::One) continue;
        int e0 = static_cast<int>(r.terms[0].arrows.size()) / 2;
        int e1 = static_cast<int>(r.terms[1].arrows.size()) / 2;
        exponents.push_back({std::min(e0, e1), std::max(e0, e1)});
    }
    std::sort(exponents.begin(), exponents.end());
    CHECK(exponents == std::vector<std::pair<int, int>>{{1, 1}, {1, 3}, {1, 3}});

    // the full listed relation set; arrows a1,a2,a3 and their reverses
    Presentation expected = make_pres(
        {"v1", "v2", "v3"},
        {{"a1", 0, 1}, {"a2", 1, 2}, {"a3", 2, 0}, {"b1", 1, 0}, {"b2", 2, 1}, {"b3", 0, 2}},
        {rel(RelationType::One, {{1, {5, 2, 5, 2, 5, 2}}, {-1, {0, 3}}}),
         rel(RelationType::One, {{1, {1, 4}}, {-1, {3, 0}}}),
         rel(RelationType::One, {{1, {4, 1}}, {-1, {2, 5, 2, 5, 2, 5}}}),
         rel(RelationType::Three, {{1, {0, 1}}}),
         rel(RelationType::Three, {{1, {1, 2}}}),
         rel(RelationType::Three, {{1, {2, 0}}}),
         rel(RelationType::Three, {{1, {3, 5}}}),
         rel(RelationType::Three, {{1, {5, 4}}}),
         rel(RelationType::Three, {{1, {4, 3}}})});
    CHECK(presentation_iso(built, expected));
}

TEST_CASE("single edge truncated at one end only") {
    // m(nu) = 2, so the nu end is not truncated: one loop arrow with the
    // cycle-power-times-first-arrow relation a^3
    RibbonBrauerGraph g = make_graph({{"mu", 1}, {"nu", 2}}, {{"1", "mu", "nu"}},
                                     {{"mu", {"1.0"}}, {"nu", {"1.1"}}});
    Presentation p = build_presentation(g);
    CHECK(p.quiver.vertex_names.size() == 1);
    REQUIRE(p.quiver.arrows.size() == 1);
    REQUIRE(p.relations.size() == 1);
    CHECK(p.relations[0].type == RelationType::Two);
    CHECK(p.relations[0].terms[0].arrows == std::vector<int>{0, 0, 0});
}

TEST_CASE("degenerate single edge gives K[x]/(x^2)") {
    Presentation p = build_presentation(fixtures::single_edge());
    REQUIRE(p.quiver.vertex_names.size() == 1);
    REQUIRE(p.quiver.arrows.size() == 1);
    CHECK(p.quiver.arrows[0].source == 0);
    CHECK(p.quiver.arrows[0].target == 0);
    REQUIRE(p.relations.size() == 1);
    REQUIRE(p.relations[0].terms.size() == 1);
    CHECK(p.relations[0].terms[0].arrows == std::vector<int>{0, 0});
}

TEST_CASE("presentation_iso basics") {
    Presentation p = build_presentation(fixtures::triangle_m3());
    SUBCASE("identity on itself") {
        auto iso = presentation_iso(p, p);
        REQUIRE(iso);
        for (size_t v = 0; v < p.quiver.vertex_names.size(); ++v)
            CHECK(iso->vertex_map[v] == static_cast<int>(v));
    }
    SUBCASE("arrow count mismatch") {
        CHECK_FALSE(presentation_iso(p, build_presentation(fixtures::three_edges())));
    }
    SUBCASE("size bound") {
        PresIsoOptions opts;
        opts.max_vertices = 2;
        CHECK_THROWS_AS(presentation_iso(p, p, opts), std::length_error);
    }
    SUBCASE("coefficient ratios are compared") {
        // same supports, incompatible ratio: x^2 - 2 y^2 vs x^2 - 3 y^2
        Presentation a = make_pres({"v"}, {{"x", 0, 0}, {"y", 0, 0}},
                                   {rel(RelationType::One, {{1, {0, 0}}, {-2, {1, 1}}})});
        Presentation b = make_pres({"v"}, {{"x", 0, 0}, {"y", 0, 0}},
                                   {rel(RelationType::One, {{1, {0, 0}}, {-3, {1, 1}}})});
        CHECK_FALSE(presentation_iso(a, b));
        Presentation c = make_pres({"v"}, {{"x", 0, 0}, {"y", 0, 0}},
                                   {rel(RelationType::One, {{-2, {0, 0}}, {4, {1, 1}}})});
        CHECK(presentation_iso(a, c));  // scaled by -2
    }
}

TEST_CASE("type-three count matches the composable-pairs oracle") {
    Rng rng(11);
    for (int i = 0; i < 25; ++i) {
        RibbonBrauerGraph g = random_graph(rng, {});
        if (g.num_edges() == 1 && is_truncated(g, 0) && is_truncated(g, 1)) continue;
        Presentation p = build_presentation(g);
        // oracle: enumerate arrow pairs sharing an endpoint, subtract the
        // consecutive-in-rotation ones
        int composable = 0;
        for (const Arrow& a : p.quiver.arrows) {
            for (const Arrow& b : p.quiver.arrows) {
                if (a.target == b.source) ++composable;
            }
        }
        int consecutive = 0;
        for (const Arrow& a : p.quiver.arrows) {
            if (!is_truncated(g, g.sigma[a.dart])) ++consecutive;
        }
        CHECK(count_type(p, RelationType::Three) == composable - consecutive);
    }
}

TEST_CASE("quantizer changes coefficients but not supports") {
    Rng rng(12);
    GraphGenOptions opts;
    opts.quantized = true;
    for (int i = 0; i < 20; ++i) {
        RibbonBrauerGraph g = random_graph(rng, opts);
        RibbonBrauerGraph bare = g;
        bare.quantized = false;
        bare.quantizer.clear();
        Presentation with_q = build_presentation(g);
        Presentation without_q = build_presentation(bare);
        REQUIRE(with_q.relations.size() == without_q.relations.size());
        for (size_t r = 0; r < with_q.relations.size(); ++r) {
            REQUIRE(with_q.relations[r].terms.size() == without_q.relations[r].terms.size());
            for (size_t t = 0; t < with_q.relations[r].terms.size(); ++t) {
                CHECK(with_q.relations[r].terms[t].arrows ==
                      without_q.relations[r].terms[t].arrows);
            }
        }
    }
}

TEST_CASE("arrow weights and homogeneity") {
    RibbonBrauerGraph g = fixtures::triangle39();
    Presentation p = build_presentation(g);
    SUBCASE("a Brauer weighting makes every relation homogeneous of degree id") {
        BrauerWeighting W = fixtures::triangle39_weighting();
        REQUIRE(validate_weighting(g, W).empty());
        ArrowWeighting aw = arrow_weights(p, W.group, W.w);
        for (size_t r = 0; r < p.relations.size(); ++r) {
            CHECK(aw.relations[r].homogeneous);
            if (p.relations[r].type == RelationType::One)
                CHECK(aw.relations[r].degree == W.group.identity());
        }
    }
    SUBCASE("trivial weights grade everything by the identity") {
        AbelianGroup z5({5});
        ArrowWeighting aw =
            arrow_weights(p, z5, std::vector<GroupElement>(g.num_darts(), z5.identity()));
        for (const auto& info : aw.relations) {
            CHECK(info.homogeneous);
            CHECK(info.degree == z5.identity());
        }
    }
    SUBCASE("monomial relations are always homogeneous") {
        AbelianGroup z2({2});
        Rng rng(3);
        std::vector<GroupElement> w;
        for (int d = 0; d < g.num_darts(); ++d)
            w.push_back(GroupElement{{static_cast<int>(rng.next(2))}});
        ArrowWeighting aw = arrow_weights(p, z2, w);
        for (size_t r = 0; r < p.relations.size(); ++r) {
            if (p.relations[r].terms.size() == 1) CHECK(aw.relations[r].homogeneous);
        }
    }
    SUBCASE("mismatched weighting is rejected") {
        AbelianGroup z2({2});
        CHECK_THROWS_AS(arrow_weights(p, z2, std::vector<GroupElement>(3, z2.identity())),
                        std::invalid_argument);
    }
}

TEST_CASE("every relation is uniform") {
    Rng rng(17);
    GraphGenOptions opts;
    opts.quantized = true;
    for (int i = 0; i < 25; ++i) {
        Presentation p = build_presentation(random_graph(rng, opts));
        for (const Relation& r : p.relations) {
            int src = p.quiver.arrows[r.terms[0].arrows.front()].source;
            int dst = p.quiver.arrows[r.terms[0].arrows.back()].target;
            for (const auto& term : r.terms) {
                CHECK(p.quiver.arrows[term.arrows.front()].source == src);
                CHECK(p.quiver.arrows[term.arrows.back()].target == dst);
                for (size_t k = 0; k + 1 < term.arrows.size(); ++k) {
                    CHECK(p.quiver.arrows[term.arrows[k]].target ==
                          p.quiver.arrows[term.arrows[k + 1]].source);
                }
                CHECK_FALSE(term.coeff.is_zero());
            }
            if (r.type == RelationType::One) CHECK(r.terms.size() == 2);
            else CHECK(r.terms.size() == 1);
        }
    }
}

TEST_CASE("presentation invariant under relabeling") {
    Rng rng(13);
    for (int i = 0; i < 10; ++i) {
        RibbonBrauerGraph g = random_graph(rng, {});
        std::vector<GraphVertexSpec> vs;
        for (int v = 0; v < g.num_vertices(); ++v)
            vs.push_back({"z" + g.vertex_labels[v], g.multiplicity[v]});
        std::vector<GraphEdgeSpec> es;
        for (int e = 0; e < g.num_edges(); ++e)
            es.push_back({"y" + g.edge_labels[e], "z" + g.vertex_labels[g.vertex_of(2 * e)],
                          "z" + g.vertex_labels[g.vertex_of(2 * e + 1)]});
        std::map<std::string, std::vector<std::string>> rot;
        for (int v = 0; v < g.num_vertices(); ++v) {
            DartId base = -1;
            for (DartId d = 0; d < g.num_darts(); ++d) {
                if (g.vertex_of(d) == v && (base == -1 || g.dart_label_less(d, base))) base = d;
            }
            std::vector<std::string> names;
            for (DartId d : successor_sequence(g, base)) names.push_back("y" + g.dart_name(d));
            rot["z" + g.vertex_labels[v]] = names;
        }
        RibbonBrauerGraph h = make_graph(vs, es, rot);
        CHECK(presentation_iso(build_presentation(g), build_presentation(h)));
    }
}
