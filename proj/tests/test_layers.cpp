#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "radiolab/distance.hpp"
#include "radiolab/graph.hpp"
#include "radiolab/layers.hpp"
#include "test_util.hpp"

using namespace radiolab;
using testutil::pv;

namespace {

// Independent oracle: layers via the neighborhood recursion L_{i+1} = N(L_i).
std::vector<int> levels_by_recursion(const Graph& g, const std::vector<int>& l0) {
    std::vector<int> lev(g.p, -1);
    std::vector<int> cur;
    for (int v : l0)
        if (lev[v] < 0) {
            lev[v] = 0;
            cur.push_back(v);
        }
    int i = 0;
    while (!cur.empty()) {
        std::vector<int> next;
        for (int v : cur)
            for (int w : g.adj[v])
                if (lev[w] < 0) {
                    lev[w] = i + 1;
                    next.push_back(w);
                }
        cur = std::move(next);
        ++i;
    }
    return lev;
}

}  // namespace

TEST_CASE("layer decomposition of the paper products") {
    Graph even = cartesian_product(path(8), wheel(7));
    DistanceMatrix de = all_pairs_distances(even);
    CenterSet ce = make_center(even, de, {pv(4, 0, 8), pv(5, 0, 8)});
    CHECK(ce.k == 1);
    CHECK(ce.connected_induced);
    LayerDecomposition le = layer_decomposition(even, de, ce);
    CHECK(le.total == 152);
    CHECK(le.h == 4);
    CHECK(le.delta == 0);

    Graph odd = cartesian_product(path(7), wheel(7));
    DistanceMatrix dd = all_pairs_distances(odd);
    CenterSet cd = make_center(odd, dd, {pv(4, 0, 8)});
    CHECK(cd.k == 0);
    LayerDecomposition ld = layer_decomposition(odd, dd, cd);
    CHECK(ld.total == 145);
    CHECK(ld.delta == 1);
    CHECK(ld.h == 4);

    // L_0 = V(G): everything at level zero
    std::vector<int> all(odd.p);
    for (int v = 0; v < odd.p; ++v) all[v] = v;
    LayerDecomposition whole = layer_decomposition(odd, dd, make_center(odd, dd, all));
    CHECK(whole.total == 0);
    CHECK(whole.h == 0);
}

TEST_CASE("levels agree with the neighborhood recursion") {
    std::mt19937 rng(42);
    for (int rep = 0; rep < 25; ++rep) {
        int p = 3 + static_cast<int>(rng() % 10);
        Graph g = testutil::random_connected_graph(p, 0.35, rng);
        DistanceMatrix d = all_pairs_distances(g);
        int a = static_cast<int>(rng() % p);
        int b = static_cast<int>(rng() % p);
        std::vector<int> l0 = a == b ? std::vector<int>{a} : std::vector<int>{a, b};
        std::sort(l0.begin(), l0.end());
        CenterSet c = make_center(g, d, l0);
        LayerDecomposition lay = layer_decomposition(g, d, c);
        CHECK(lay.level == levels_by_recursion(g, l0));
        for (auto [u, v] : g.edges())
            CHECK(std::abs(lay.level[u] - lay.level[v]) <= 1);
        for (int i = 0; i <= lay.h; ++i) CHECK(lay.layer_sizes[i] > 0);
    }
}

TEST_CASE("distance decomposition inequality and equality pairs") {
    // trivially: u = v in L_0 -> 0 <= 0 + 0 + k
    Graph e = build_graph(2, {{0, 1}});
    DistanceMatrix de = all_pairs_distances(e);
    CHECK(distance_decomposition_check(e, de, make_center(e, de, {0, 1})).holds);

    Graph c4 = cycle(4);
    DistanceMatrix d4 = all_pairs_distances(c4);
    DistanceDecompositionCheck chk =
        distance_decomposition_check(c4, d4, make_center(c4, d4, {0}));
    CHECK(chk.holds);
    std::set<std::pair<int, int>> eq(chk.equality_pairs.begin(), chk.equality_pairs.end());
    std::set<std::pair<int, int>> want{{0, 1}, {0, 2}, {0, 3}, {1, 3}};
    CHECK(eq == want);

    Graph pw = cartesian_product(path(7), wheel(7));
    DistanceMatrix dp = all_pairs_distances(pw);
    DistanceDecompositionCheck pchk =
        distance_decomposition_check(pw, dp, make_center(pw, dp, {pv(4, 0, 8)}));
    CHECK(pchk.holds);
    std::pair<int, int> attain{std::min(pv(4, 0, 8), pv(7, 1, 8)),
                               std::max(pv(4, 0, 8), pv(7, 1, 8))};
    CHECK(std::find(pchk.equality_pairs.begin(), pchk.equality_pairs.end(), attain) !=
          pchk.equality_pairs.end());
}

TEST_CASE("inequality holds for every pair and candidate center on random graphs") {
    std::mt19937 rng(7);
    for (int rep = 0; rep < 12; ++rep) {
        int p = 3 + static_cast<int>(rng() % 8);
        Graph g = testutil::random_connected_graph(p, 0.4, rng);
        DistanceMatrix d = all_pairs_distances(g);
        for (const CenterSet& c : enumerate_candidate_centers(g, d, std::min(3, p)))
            REQUIRE(distance_decomposition_check(g, d, c).holds);
    }
}

TEST_CASE("lower bound values from the paper") {
    Graph even = cartesian_product(path(8), wheel(7));
    DistanceMatrix de = all_pairs_distances(even);
    BoundReport be = lower_bound(even, de, make_center(even, de, {pv(4, 0, 8), pv(5, 0, 8)}));
    CHECK(be.bound == 263);
    CHECK(be.recompute() == be.bound);

    Graph odd = cartesian_product(path(7), wheel(7));
    DistanceMatrix dd = all_pairs_distances(odd);
    BoundReport bo = lower_bound(odd, dd, make_center(odd, dd, {pv(4, 0, 8)}));
    CHECK(bo.bound == 206);
    CHECK(bo.d == 8);
    CHECK(bo.k == 0);
    CHECK(bo.delta == 1);
    CHECK(bo.total == 145);

    Graph e = build_graph(2, {{0, 1}});
    DistanceMatrix d2 = all_pairs_distances(e);
    CHECK(lower_bound(e, d2, make_center(e, d2, {0, 1})).bound == 1);
}

TEST_CASE("candidate center enumeration") {
    Graph p3 = path(3);
    DistanceMatrix d3 = all_pairs_distances(p3);
    CHECK(enumerate_candidate_centers(p3, d3, 1).size() == 3);
    CHECK(enumerate_candidate_centers(p3, d3, 2).size() == 5);  // 3 singletons + 2 edges

    Graph k3 = complete(3);
    DistanceMatrix dk = all_pairs_distances(k3);
    CHECK(enumerate_candidate_centers(k3, dk, 2).size() == 6);

    CHECK_THROWS_AS(enumerate_candidate_centers(p3, d3, 0), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_candidate_centers(p3, d3, 4), std::invalid_argument);
}

TEST_CASE("best lower bound") {
    Graph e = build_graph(2, {{0, 1}});
    DistanceMatrix d2 = all_pairs_distances(e);
    CHECK(best_lower_bound(e, d2, 2).bound == 1);

    Graph p3 = path(3);
    DistanceMatrix d3 = all_pairs_distances(p3);
    BoundReport best = best_lower_bound(p3, d3, 2);
    CHECK(best.bound == 3);  // center vertex of the path, rn(P_3) = 3
    CHECK(best.center == std::vector<int>{1});
}

TEST_CASE("P_m box K_n bound experiment (reported, not forced)") {
    // Even m: L_0 = both middle fibers reproduces the closed form exactly.
    Graph g4 = cartesian_product(path(4), complete(3));
    DistanceMatrix d4 = all_pairs_distances(g4);
    CenterSet two_fibers = make_center(g4, d4, {3, 4, 5, 6, 7, 8});
    CHECK(lower_bound(g4, d4, two_fibers).bound == 21);

    // Odd m: the middle-fiber bound lands one below the published value
    // because |L_0| = n forces delta = 0. Both numbers are kept visible.
    Graph g5 = cartesian_product(path(5), complete(3));
    DistanceMatrix d5 = all_pairs_distances(g5);
    CenterSet mid_fiber = make_center(g5, d5, {6, 7, 8});
    BoundReport direct = lower_bound(g5, d5, mid_fiber);
    CHECK(direct.bound == 34);
    CHECK(direct.delta == 0);
    CHECK(direct.total == 18);
}
