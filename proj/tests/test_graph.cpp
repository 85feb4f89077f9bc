#include <doctest.h>

#include "fgc/instance.hpp"
#include "test_util.hpp"

using namespace fgc;

namespace {

LabeledMultigraph triangle(Safety s = Safety::Unsafe) {
    LabeledMultigraph g(3);
    g.add_edge(0, 1, 1, s);
    g.add_edge(1, 2, 2, s);
    g.add_edge(0, 2, 3, s);
    return g;
}

}  // namespace

TEST_CASE("mst on a path is the whole path") {
    LabeledMultigraph g(3);
    g.add_edge(0, 1, 1, Safety::Safe);
    g.add_edge(1, 2, 1, Safety::Safe);
    CHECK(minimum_spanning_tree(g).edge_ids == EdgeSet{0, 1});
}

TEST_CASE("mst of the weighted triangle keeps the two light edges") {
    LabeledMultigraph g = triangle();
    CHECK(minimum_spanning_tree(g).edge_ids == EdgeSet{0, 1});
}

TEST_CASE("mst tiebreak prefers the smaller edge id") {
    LabeledMultigraph g(2);
    g.add_edge(0, 1, 1, Safety::Unsafe);
    g.add_edge(0, 1, 1, Safety::Unsafe);
    CHECK(minimum_spanning_tree(g).edge_ids == EdgeSet{0});
}

TEST_CASE("mst requires connectivity") {
    LabeledMultigraph g(3);
    g.add_edge(0, 1, 1, Safety::Safe);
    CHECK_THROWS_AS(minimum_spanning_tree(g), DisconnectedGraph);
}

TEST_CASE("bridges of paths, cycles and parallel pairs") {
    LabeledMultigraph path(3);
    path.add_edge(0, 1, 1, Safety::Safe);
    path.add_edge(1, 2, 1, Safety::Safe);
    CHECK(bridges(path, {0, 1}) == EdgeSet{0, 1});

    LabeledMultigraph tri = triangle();
    CHECK(bridges(tri, {0, 1, 2}).empty());

    LabeledMultigraph par(2);
    par.add_edge(0, 1, 1, Safety::Safe);
    par.add_edge(0, 1, 1, Safety::Unsafe);
    CHECK(bridges(par, {0, 1}).empty());
}

TEST_CASE("edge connectivity on small fixtures") {
    CHECK(edge_connectivity(triangle(), {0, 1, 2}) == 2);

    LabeledMultigraph k4(4);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) k4.add_edge(u, v, 1, Safety::Unsafe);
    EdgeSet all;
    for (int i = 0; i < k4.edge_count(); ++i) all.insert(i);
    CHECK(edge_connectivity(k4, all) == 3);

    // the optimal solution of the six-vertex example has a (safe) bridge
    FgcInstance fig1 = parse_instance_file(std::string(FGC_TEST_DATA) + "/fig1.fgc");
    CHECK(edge_connectivity(fig1.graph(), {0, 1, 2, 3, 6, 7, 8}) == 1);
}

TEST_CASE("contracting a spanning tree leaves a single vertex") {
    LabeledMultigraph g = triangle();
    auto [contracted, map] = contract(g, {0, 1});
    CHECK(contracted.vertex_count() == 1);
    CHECK(contracted.edge_count() == 0);
    CHECK(map.surviving_edges.empty());
}

TEST_CASE("contracting one safe edge of the gap instance keeps five edges") {
    FgcInstance fig3 = parse_instance_file(std::string(FGC_TEST_DATA) + "/fig3.fgc");
    auto [contracted, map] = contract(fig3.graph(), {0});
    CHECK(contracted.vertex_count() == 3);
    CHECK(contracted.edge_count() == 5);
    CHECK(map.surviving_edges == EdgeSet{1, 2, 3, 4, 5});
}

TEST_CASE("contracting nothing is the identity") {
    LabeledMultigraph g = triangle();
    auto [contracted, map] = contract(g, {});
    CHECK(contracted.vertex_count() == 3);
    CHECK(contracted.edge_count() == 3);
    for (int v = 0; v < 3; ++v) CHECK(map.vertex_map[static_cast<std::size_t>(v)] == v);
}

TEST_CASE("contract maps endpoints consistently") {
    testutil::Rng rng(42);
    for (int it = 0; it < 50; ++it) {
        const int n = 3 + rng.below(5);
        LabeledMultigraph g = testutil::random_connected_graph(rng, n, n + rng.below(4), 5, 50);
        EdgeSet some;
        for (int i = 0; i < g.edge_count(); ++i) {
            if (rng.coin()) some.insert(i);
        }
        auto [contracted, map] = contract(g, some);
        for (std::size_t k = 0; k < map.original_ids.size(); ++k) {
            const Edge& orig = g.edge(map.original_ids[k]);
            const Edge& now = contracted.edge(static_cast<int>(k));
            const int cu = map.vertex_map[static_cast<std::size_t>(orig.u)];
            const int cv = map.vertex_map[static_cast<std::size_t>(orig.v)];
            CHECK(((now.u == cu && now.v == cv) || (now.u == cv && now.v == cu)));
            CHECK(now.weight == orig.weight);
            CHECK(now.safety == orig.safety);
        }
    }
}

TEST_CASE("bridgeless and connected iff 2-edge connected, on random subgraphs") {
    testutil::Rng rng(7);
    for (int it = 0; it < 120; ++it) {
        const int n = 2 + rng.below(7);
        LabeledMultigraph g = testutil::random_connected_graph(rng, n, n + rng.below(5), 4, 50);
        EdgeSet sub;
        for (int i = 0; i < g.edge_count(); ++i) {
            if (rng.coin()) sub.insert(i);
        }
        const bool no_bridge = bridges(g, sub).empty();
        const bool connected = is_connected_subgraph(g, sub);
        const bool two_conn = edge_connectivity(g, sub) >= 2;
        CHECK((no_bridge && connected) == two_conn);
    }
}

TEST_CASE("mst matches the brute-force minimum") {
    testutil::Rng rng(11);
    for (int it = 0; it < 60; ++it) {
        const int n = 2 + rng.below(4);
        LabeledMultigraph g = testutil::random_connected_graph(rng, n, std::min(8, n + rng.below(4)), 6, 50);
        CHECK(g.weight_of(minimum_spanning_tree(g).edge_ids) == testutil::brute_force_mst_weight(g));
    }
}
