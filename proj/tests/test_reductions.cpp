#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "radiolab/families.hpp"
#include "radiolab/reductions.hpp"
#include "test_util.hpp"

using namespace radiolab;
using testutil::pv;

TEST_CASE("mdst of C_4 rooted at an edge is a path") {
    Graph c4 = cycle(4);
    DistanceMatrix d = all_pairs_distances(c4);
    CenterSet c = make_center(c4, d, {0, 1});
    RootedSpanningSubgraph t = mdst(c4, d, c);
    Graph tg = to_graph(t, c4);
    CHECK(tg.edge_count() == 3);
    ObservationReport rep = check_observation(c4, d, tg, c);
    CHECK(rep.levels_equal);
    CHECK(rep.total_equal);
    CHECK(rep.distances_dominate);
    CHECK_FALSE(rep.diam_equal);  // the tree is the path 2-1-0-3, diameter 3 vs 2
}

TEST_CASE("mdst of K_3 rooted at a vertex is a star with stretched leaves") {
    Graph k3 = complete(3);
    DistanceMatrix d = all_pairs_distances(k3);
    CenterSet c = make_center(k3, d, {0});
    Graph tg = to_graph(mdst(k3, d, c), k3);
    CHECK(tg.edge_count() == 2);
    DistanceMatrix dt = all_pairs_distances(tg);
    CHECK(dt(1, 2) == 2);  // was 1 in K_3: deletion only stretches distances
    ObservationReport rep = check_observation(k3, d, tg, c);
    CHECK(rep.levels_equal);
    CHECK(rep.total_equal);
    CHECK(rep.distances_dominate);
    CHECK_FALSE(rep.diam_equal);  // 2 vs 1: diameter equality is a claim, not a law
}

TEST_CASE("diameter equality can fail even with diameter >= 2") {
    // C_4 rooted at one vertex: the level-respecting tree is a path of length 3
    Graph c4 = cycle(4);
    DistanceMatrix d = all_pairs_distances(c4);
    CenterSet c = make_center(c4, d, {0});
    Graph tg = to_graph(mdst(c4, d, c), c4);
    ObservationReport rep = check_observation(c4, d, tg, c);
    CHECK(rep.levels_equal);
    CHECK(rep.total_equal);
    CHECK(rep.distances_dominate);
    CHECK_FALSE(rep.diam_equal);
    CHECK(rep.diam_parent == 2);
    CHECK(rep.diam_subgraph == 3);
}

TEST_CASE("mdst preserves levels and total on the paper product") {
    Graph pw = cartesian_product(path(7), wheel(7));
    DistanceMatrix d = all_pairs_distances(pw);
    CenterSet c = make_center(pw, d, {pv(4, 0, 8)});
    Graph tg = to_graph(mdst(pw, d, c), pw);
    CHECK(tg.edge_count() == pw.p - 1);  // |L_0| = 1: a genuine spanning tree
    ObservationReport rep = check_observation(pw, d, tg, c);
    CHECK(rep.levels_equal);
    CHECK(rep.total_equal);
    CHECK(rep.distances_dominate);
    CHECK(rep.diam_equal);
    LayerDecomposition lt = layer_decomposition(tg, all_pairs_distances(tg),
                                                make_center(tg, all_pairs_distances(tg), {pv(4, 0, 8)}));
    CHECK(lt.total == 145);
}

TEST_CASE("identity reduction: a tree is its own mdst") {
    Graph p5 = path(5);
    DistanceMatrix d = all_pairs_distances(p5);
    CenterSet c = make_center(p5, d, {2});
    RootedSpanningSubgraph t = mdst(p5, d, c);
    CHECK(t.kept_edges == p5.edges());
    DeletionSequenceReport rep = edge_deletion_sequence(p5, t, c, {2, 4, 0, 3, 1});
    CHECK(rep.steps.empty());
    CHECK(rep.all_certified);
}

TEST_CASE("edge deletion sequence towards the mdst certifies at every step") {
    ConstructionResult r = build_family({Family::path_wheel, 5, 7});
    RootedSpanningSubgraph t = mdst(r.graph, r.dist, r.center);
    DeletionSequenceReport rep =
        edge_deletion_sequence(r.graph, t, r.center, r.ordering);
    CHECK_FALSE(rep.steps.empty());
    CHECK(rep.all_certified);
    CHECK(rep.span_constant);
    for (const auto& step : rep.steps) {
        REQUIRE(step.certified);
        REQUIRE(step.span == pw_radio_number(5, 7));
    }
}

TEST_CASE("wheel to star rim deletion keeps the span") {
    ConstructionResult r = build_family({Family::path_wheel, 4, 7});
    // target: the star product subgraph on the same vertex set
    Graph starprod = cartesian_product(path(4), star(7));
    RootedSpanningSubgraph target;
    target.p = r.graph.p;
    target.kept_edges = starprod.edges();
    target.root_set = r.center.vertices;
    DeletionSequenceReport rep =
        edge_deletion_sequence(r.graph, target, r.center, r.ordering);
    CHECK(static_cast<int>(rep.steps.size()) == 4 * 7);  // one rim edge per fiber per rim slot
    CHECK(rep.all_certified);
    CHECK(rep.span_constant);
    CHECK(rep.steps.back().span == pw_radio_number(4, 7));
}

TEST_CASE("distances never decrease under edge deletion") {
    std::mt19937 rng(13);
    for (int rep = 0; rep < 10; ++rep) {
        int p = 4 + static_cast<int>(rng() % 4);
        Graph g = testutil::random_connected_graph(p, 0.5, rng);
        DistanceMatrix d = all_pairs_distances(g);
        for (auto edge : g.edges()) {
            std::vector<std::pair<int, int>> rest;
            for (auto e : g.edges())
                if (e != edge) rest.push_back(e);
            Graph h = build_graph(p, rest, false, true);
            if (!h.connected) continue;
            DistanceMatrix dh = all_pairs_distances(h);
            for (int u = 0; u < p; ++u)
                for (int v = u + 1; v < p; ++v) REQUIRE(dh(u, v) >= d(u, v));
        }
    }
}

TEST_CASE("validation of reduction inputs") {
    Graph c4 = cycle(4);
    DistanceMatrix d = all_pairs_distances(c4);
    CenterSet disconnected = make_center(c4, d, {0, 2});
    CHECK_FALSE(disconnected.connected_induced);
    CHECK_THROWS_AS(mdst(c4, d, disconnected), std::invalid_argument);

    RootedSpanningSubgraph bogus;
    bogus.p = 4;
    bogus.kept_edges = {{0, 2}};  // not an edge of C_4
    bogus.root_set = {0};
    CHECK_THROWS_AS(edge_deletion_sequence(c4, bogus, make_center(c4, d, {0}), {0, 1, 2, 3}),
                    std::invalid_argument);
}
