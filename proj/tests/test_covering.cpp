#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "brauer/covering.hpp"
#include "brauer/random_gen.hpp"
#include "support/fixtures.hpp"

using namespace brauer;

TEST_CASE("vertex data of the triangle weighting") {
    RibbonBrauerGraph g = fixtures::triangle39();
    BrauerWeighting W = fixtures::triangle39_weighting();
    SUBCASE("top vertex has rotation product g of order three") {
        VertexWeightData data = vertex_data(g, W, 0);
        CHECK(data.omega == GroupElement{{1}});
        CHECK(data.ord == 3);
        CHECK(data.cosets.cosets.size() == 1);
    }
    SUBCASE("the other vertices have trivial products") {
        for (int v : {1, 2}) {
            VertexWeightData data = vertex_data(g, W, v);
            CHECK(data.omega == W.group.identity());
            CHECK(data.ord == 1);
            CHECK(data.cosets.cosets.size() == 3);
        }
    }
    SUBCASE("identity weighting has identity products everywhere") {
        BrauerWeighting id = fixtures::trivial_weighting(g, AbelianGroup({4}));
        for (int v = 0; v < g.num_vertices(); ++v) {
            CHECK(vertex_data(g, id, v).omega == id.group.identity());
        }
    }
}

TEST_CASE("weighting validation needs ord(mu) | m(mu)") {
    RibbonBrauerGraph g = fixtures::triangle39();
    BrauerWeighting W = fixtures::triangle39_weighting();
    CHECK(validate_weighting(g, W).empty());

    // with m == 1 everywhere the order-three product at the top fails
    RibbonBrauerGraph flat = make_graph(
        {{"t", 1}, {"l", 1}, {"r", 1}},
        {{"a", "t", "l"}, {"b", "t", "r"}, {"c", "l", "r"}},
        {{"t", {"a.0", "b.0"}}, {"l", {"c.0", "a.1"}}, {"r", {"b.1", "c.1"}}});
    BrauerWeighting same = W;
    auto issues = validate_weighting(flat, same);
    REQUIRE(issues.size() == 1);
    CHECK(issues[0].find("ord(t) = 3 does not divide m = 1") != std::string::npos);

    CHECK(validate_weighting(flat, fixtures::trivial_weighting(flat, AbelianGroup({5}))).empty());
}

TEST_CASE("covering graph of the triangle weighting") {
    RibbonBrauerGraph g = fixtures::triangle39();
    BrauerWeighting W = fixtures::triangle39_weighting();
    CoveringOutput cov = covering_graph(g, W);

    CHECK(cov.cover.num_vertices() == 7);
    CHECK(cov.cover.num_edges() == 9);

    // one vertex above the top (|G|/ord = 1), of valency ord * val = 6
    int sixes = 0;
    for (int v = 0; v < cov.cover.num_vertices(); ++v) {
        if (cov.cover.valency(v) == 6) ++sixes;
        else CHECK(cov.cover.valency(v) == 2);
        CHECK(cov.cover.multiplicity[v] == 1);
    }
    CHECK(sixes == 1);

    // matches the drawing exactly
    CHECK(brauer_iso(cov.cover, fixtures::triangle39_cover()));
}

TEST_CASE("trivial group covers are the identity") {
    RibbonBrauerGraph g = fixtures::triangle_m3();
    BrauerWeighting W = fixtures::trivial_weighting(g, AbelianGroup(std::vector<int>{}));
    CoveringOutput cov = covering_graph(g, W);
    CHECK(brauer_iso(cov.cover, g, true));
}

TEST_CASE("identity weighting into a nontrivial group disconnects the lift") {
    RibbonBrauerGraph g = fixtures::triangle_m3();
    BrauerWeighting W = fixtures::trivial_weighting(g, AbelianGroup({2}));
    CHECK(validate_weighting(g, W).empty());
    CHECK_THROWS_AS(covering_graph(g, W), CoverDisconnected);
}

TEST_CASE("roundtrip on the triangle example") {
    RibbonBrauerGraph g = fixtures::triangle39();
    RoundtripWitness rt = roundtrip_orbit(g, fixtures::triangle39_weighting());
    CHECK(rt.orbit.orbit.num_edges() == 3);
    SUBCASE("identity witness for the trivial group") {
        BrauerWeighting id = fixtures::trivial_weighting(g, AbelianGroup(std::vector<int>{}));
        RoundtripWitness trivial = roundtrip_orbit(g, id);
        CHECK(trivial.covering.cover.num_edges() == g.num_edges());
    }
}

TEST_CASE("covering presentation matches the cover's presentation") {
    RibbonBrauerGraph g = fixtures::triangle39();
    BrauerWeighting W = fixtures::triangle39_weighting();
    Presentation lifted = covering_presentation(g, W);
    CHECK(lifted.quiver.vertex_names.size() == 9);  // 3 edges x |Z_3|
    Presentation direct = build_presentation(covering_graph(g, W).cover);
    CHECK(presentation_iso(lifted, direct));

    SUBCASE("trivial group lift is the base presentation") {
        BrauerWeighting id = fixtures::trivial_weighting(g, AbelianGroup(std::vector<int>{}));
        CHECK(presentation_iso(covering_presentation(g, id), build_presentation(g)));
    }
    SUBCASE("lifted two-term relations stay two-term cycle differences") {
        for (const Relation& r : lifted.relations) {
            if (r.terms.size() != 2) continue;
            for (const auto& term : r.terms) {
                int src = lifted.quiver.arrows[term.arrows.front()].source;
                int dst = lifted.quiver.arrows[term.arrows.back()].target;
                CHECK(src == dst);
            }
        }
    }
}

TEST_CASE("classification of weight functions") {
    RibbonBrauerGraph g = fixtures::triangle39();
    Presentation pres = build_presentation(g);

    SUBCASE("weights induced from a Brauer weighting classify as Brauer") {
        BrauerWeighting W = fixtures::triangle39_weighting();
        ArrowWeighting aw = arrow_weights(pres, W.group, W.w);
        ClassifyResult res = classify_weight_function(pres, W.group, aw.arrow_weight);
        REQUIRE(res.verdict == WeightClass::Brauer);
        REQUIRE(res.recovered);
        CHECK(res.recovered->w == W.w);  // truncated ends are forced to the identity
    }

    SUBCASE("homogeneous weights with a nontrivial cycle power are NotBrauer") {
        // m == 1 triangle; search Z_2 assignments with all type-one relations
        // homogeneous but some rotation product nontrivial
        RibbonBrauerGraph flat = make_graph(
            {{"t", 1}, {"l", 1}, {"r", 1}},
            {{"a", "t", "l"}, {"b", "t", "r"}, {"c", "l", "r"}},
            {{"t", {"a.0", "b.0"}}, {"l", {"c.0", "a.1"}}, {"r", {"b.1", "c.1"}}});
        Presentation fp = build_presentation(flat);
        AbelianGroup z2({2});
        bool found = false;
        for (int mask = 0; mask < 64 && !found; ++mask) {
            std::vector<GroupElement> w;
            for (size_t a = 0; a < fp.quiver.arrows.size(); ++a)
                w.push_back(GroupElement{{(mask >> a) & 1}});
            ClassifyResult res = classify_weight_function(fp, z2, w);
            if (res.verdict != WeightClass::NotBrauer) continue;
            found = true;
            CHECK(res.witness_vertex >= 0);

            // its covering quiver has a two-term minimal relation whose
            // terms are not cycles
            QuiverCoverResult qc = covering_quiver(fp, z2, w);
            bool non_cycle_difference = false;
            for (const Relation& r : qc.cover.relations) {
                if (r.terms.size() != 2) continue;
                for (const auto& term : r.terms) {
                    int src = qc.cover.quiver.arrows[term.arrows.front()].source;
                    int dst = qc.cover.quiver.arrows[term.arrows.back()].target;
                    if (src != dst) non_cycle_difference = true;
                }
            }
            CHECK(non_cycle_difference);
        }
        CHECK(found);
    }

    SUBCASE("perturbing one arrow weight breaks homogeneity") {
        // flat triangle, all weights trivial except one arrow: the two-term
        // relations through that arrow pick up unequal degrees
        RibbonBrauerGraph flat = make_graph(
            {{"t", 1}, {"l", 1}, {"r", 1}},
            {{"a", "t", "l"}, {"b", "t", "r"}, {"c", "l", "r"}},
            {{"t", {"a.0", "b.0"}}, {"l", {"c.0", "a.1"}}, {"r", {"b.1", "c.1"}}});
        Presentation fp = build_presentation(flat);
        AbelianGroup z2({2});
        std::vector<GroupElement> w(fp.quiver.arrows.size(), z2.identity());
        w[0] = GroupElement{{1}};
        ClassifyResult res = classify_weight_function(fp, z2, w);
        CHECK(res.verdict == WeightClass::NotHomogeneous);
        CHECK(res.witness_relation >= 0);
    }
}

TEST_CASE("generic quiver orbit and cover round trips") {
    SUBCASE("one-loop quiver: cover by Z_2 then orbit recovers it") {
        Presentation loop;
        loop.quiver.vertex_names = {"v"};
        loop.quiver.arrows.push_back({"x", 0, 0, -1});
        Relation xx;
        xx.type = RelationType::Three;
        xx.terms.push_back({Rational(1), {0, 0}});
        loop.relations.push_back(xx);

        AbelianGroup z2({2});
        QuiverCoverResult cover = covering_quiver(loop, z2, {GroupElement{{1}}});
        CHECK(cover.cover.quiver.vertex_names.size() == 2);
        CHECK(cover.cover.quiver.arrows.size() == 2);
        QuiverOrbitResult orbit = orbit_quiver(cover.cover, cover.canonical_action);
        CHECK(presentation_iso(orbit.orbit, loop));
    }
    SUBCASE("triangle quiver under any homogeneous Z_2 weight function") {
        Presentation base = build_presentation(fixtures::triangle_m3());
        AbelianGroup z2({2});
        // weights assigning the generator to both arrows of every edge pair
        // keep all relations homogeneous
        std::vector<GroupElement> w(base.quiver.arrows.size(), z2.identity());
        for (size_t a = 0; a < w.size(); ++a) w[a] = GroupElement{{1}};
        QuiverCoverResult cover = covering_quiver(base, z2, w);
        QuiverOrbitResult orbit = orbit_quiver(cover.cover, cover.canonical_action);
        CHECK(presentation_iso(orbit.orbit, base));
    }
    SUBCASE("free quiver action: orbit with induced weights covers back") {
        // the six-star quiver with its rotation-by-three action
        RibbonBrauerGraph g = fixtures::star6();
        FreeBrauerAction act = fixtures::star6_action();
        Presentation pres = build_presentation(g);
        std::vector<int> arrow_of_dart(g.num_darts(), -1);
        for (size_t i = 0; i < pres.quiver.arrows.size(); ++i)
            arrow_of_dart[pres.quiver.arrows[i].dart] = static_cast<int>(i);
        QuiverAction qa;
        qa.group = act.group;
        std::vector<int> vperm(g.num_edges());
        for (int e = 0; e < g.num_edges(); ++e)
            vperm[e] = g.edge_of(act.generator_perm[0][2 * e]);
        std::vector<int> aperm(pres.quiver.arrows.size());
        for (const Arrow& a : pres.quiver.arrows)
            aperm[arrow_of_dart[a.dart]] = arrow_of_dart[act.generator_perm[0][a.dart]];
        qa.vertex_perm = {vperm};
        qa.arrow_perm = {aperm};

        QuiverOrbitResult orbit = orbit_quiver(pres, qa);
        QuiverCoverResult back = covering_quiver(orbit.orbit, qa.group, orbit.induced_weight);
        CHECK(presentation_iso(back.cover, pres));
    }
    SUBCASE("two-cycle quiver with the swap action collapses to one loop") {
        Presentation two;
        two.quiver.vertex_names = {"u", "v"};
        two.quiver.arrows.push_back({"a", 0, 1, -1});
        two.quiver.arrows.push_back({"b", 1, 0, -1});
        QuiverAction swap;
        swap.group = AbelianGroup({2});
        swap.vertex_perm = {{1, 0}};
        swap.arrow_perm = {{1, 0}};
        QuiverOrbitResult orbit = orbit_quiver(two, swap);
        CHECK(orbit.orbit.quiver.vertex_names.size() == 1);
        CHECK(orbit.orbit.quiver.arrows.size() == 1);
    }
    SUBCASE("non-free actions are rejected") {
        Presentation two;
        two.quiver.vertex_names = {"u", "v"};
        two.quiver.arrows.push_back({"a", 0, 1, -1});
        two.quiver.arrows.push_back({"b", 1, 0, -1});
        QuiverAction fix;
        fix.group = AbelianGroup({2});
        fix.vertex_perm = {{0, 1}};
        fix.arrow_perm = {{0, 1}};
        CHECK_THROWS_WITH_AS(orbit_quiver(two, fix), doctest::Contains("not free"),
                             std::invalid_argument);
    }
    SUBCASE("inhomogeneous generators cannot be lifted") {
        Presentation p;
        p.quiver.vertex_names = {"v"};
        p.quiver.arrows.push_back({"x", 0, 0, -1});
        p.quiver.arrows.push_back({"y", 0, 0, -1});
        Relation r;
        r.type = RelationType::One;
        r.terms.push_back({Rational(1), {0}});
        r.terms.push_back({Rational(-1), {1}});
        p.relations.push_back(r);
        AbelianGroup z2({2});
        CHECK_THROWS_WITH_AS(covering_quiver(p, z2, {GroupElement{{1}}, GroupElement{{0}}}),
                             doctest::Contains("homogeneous"), std::invalid_argument);
    }
}

TEST_CASE("randomized covering and orbit round trips") {
    Rng rng(2024);
    GraphGenOptions gopts;
    gopts.max_edges = 5;
    gopts.max_multiplicity = 4;
    gopts.quantized = true;
    std::vector<AbelianGroup> groups = {AbelianGroup({2}), AbelianGroup({3}),
                                        AbelianGroup({2, 2})};
    int done = 0;
    for (int i = 0; done < 25 && i < 400; ++i) {
        RibbonBrauerGraph g = random_graph(rng, gopts);
        const AbelianGroup& G = groups[rng.next(groups.size())];
        auto W = random_brauer_weighting(rng, g, G, 40, true);
        if (!W) continue;
        ++done;
        RoundtripWitness rt = roundtrip_orbit(g, *W);
        CHECK(rt.covering.cover.num_edges() == g.num_edges() * G.order());
        Presentation direct = build_presentation(rt.covering.cover);
        Presentation lifted = covering_presentation(g, *W);
        CHECK(presentation_iso(direct, lifted));
    }
    CHECK(done == 25);
}
