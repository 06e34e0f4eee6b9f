#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "radiolab/io.hpp"

using namespace radiolab;

TEST_CASE("edge list parsing") {
    std::istringstream in(
        "# a comment\n"
        "4\n"
        "0 1\n"
        "1 2  # trailing comment\n"
        "\n"
        "2 3\n"
        "name 0 (u_1,v_0)\n");
    Graph g = read_edge_list(in);
    CHECK(g.p == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.name_of(0) == "(u_1,v_0)");
    CHECK(g.name_of(1) == "1");
}

TEST_CASE("edge list round trip") {
    Graph g = cartesian_product(path(3), wheel(7));
    std::ostringstream out;
    write_edge_list(g, out);
    std::istringstream in(out.str());
    Graph back = read_edge_list(in);
    CHECK(back.p == g.p);
    CHECK(back.edges() == g.edges());
    CHECK(back.names == g.names);
    std::ostringstream again;
    write_edge_list(back, again);
    CHECK(again.str() == out.str());
}

TEST_CASE("edge list errors") {
    std::istringstream empty("# nothing\n");
    CHECK_THROWS_AS(read_edge_list(empty), std::invalid_argument);

    std::istringstream half("3\n0\n");
    CHECK_THROWS_AS(read_edge_list(half), std::invalid_argument);

    std::istringstream badname("2\n0 1\nname 9 x\n");
    CHECK_THROWS_AS(read_edge_list(badname), std::invalid_argument);

    std::istringstream loop("2\n0 0\n");
    CHECK_THROWS_AS(read_edge_list(loop), std::invalid_argument);
}

TEST_CASE("labeling JSON round trip is bit exact") {
    Labeling phi{{0, 5, 21, 13}};
    Ordering order{0, 1, 3, 2};
    json j = labeling_to_json(phi, &order);
    std::string text = j.dump();
    json parsed = json::parse(text);
    Labeling back = labeling_from_json(parsed, 4);
    CHECK(back.label == phi.label);
    CHECK(ordering_from_json(parsed["ordering"], 4) == order);
    CHECK(labeling_to_json(back, &order).dump() == text);
    CHECK(parsed["span"] == 21);
}

TEST_CASE("labeling JSON validation") {
    json missing = {{"labels", {{"0", 0}, {"1", 3}}}};
    CHECK_THROWS_AS(labeling_from_json(missing, 3), std::invalid_argument);

    json unknown = {{"labels", {{"0", 0}, {"1", 3}, {"7", 1}}}};
    CHECK_THROWS_AS(labeling_from_json(unknown, 3), std::invalid_argument);

    json negative = {{"labels", {{"0", 0}, {"1", -3}}}};
    CHECK_THROWS_AS(labeling_from_json(negative, 2), std::invalid_argument);

    json badspan = {{"labels", {{"0", 0}, {"1", 3}}}, {"span", 9}};
    CHECK_THROWS_AS(labeling_from_json(badspan, 2), std::invalid_argument);

    json notobj = {{"labels", json::array()}};
    CHECK_THROWS_AS(labeling_from_json(notobj, 2), std::invalid_argument);
}

TEST_CASE("report serializers") {
    Graph g = path(3);
    DistanceMatrix d = all_pairs_distances(g);
    BoundReport b = lower_bound(g, d, make_center(g, d, {1}));
    json jb = bound_report_to_json(b);
    CHECK(jb["bound"] == 3);
    CHECK(jb["p"] == 3);
    CHECK(jb["delta"] == 1);
    CHECK(jb["center"] == json::array({1}));

    Certificate cert = certify_optimal(g, d, make_center(g, d, {1}), {1, 2, 0});
    json jc = certificate_to_json(cert);
    CHECK(jc["certified"] == true);
    CHECK(jc["condition_a"] == true);
    CHECK(jc["condition_b"] == true);
    CHECK(jc["valid_radio_labeling"] == true);
}
