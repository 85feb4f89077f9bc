#include <doctest.h>

#include "fgc/subroutines.hpp"
#include "test_util.hpp"

using namespace fgc;

namespace {

LabeledMultigraph unit_cycle(int n) {
    LabeledMultigraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n, 1, Safety::Unsafe);
    return g;
}

FgcInstance load(const char* name) {
    return parse_instance_file(std::string(FGC_TEST_DATA) + "/" + name);
}

// 2-edge-connected random graph: cycle plus extra random edges.
LabeledMultigraph random_2ec(testutil::Rng& rng, int n, int m) {
    LabeledMultigraph g(n);
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(rng.below(i + 1))]);
    for (int i = 0; i < n; ++i)
        g.add_edge(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>((i + 1) % n)],
                   Rational(1 + rng.below(5)), Safety::Unsafe);
    while (g.edge_count() < m) {
        const int u = rng.below(n);
        int v = rng.below(n - 1);
        if (v >= u) ++v;
        g.add_edge(u, v, Rational(1 + rng.below(5)), Safety::Unsafe);
    }
    return g;
}

}  // namespace

TEST_CASE("2-ECSS of a triangle is the whole triangle") {
    const LabeledMultigraph g = unit_cycle(3);
    for (auto method : {TwoEcssMethod::Arborescence2x, TwoEcssMethod::MstPlusAug, TwoEcssMethod::Exact})
        CHECK(two_ecss_approx(g, method) == EdgeSet{0, 1, 2});
}

TEST_CASE("2-ECSS of a four-cycle has cost four exactly, approx within factor two") {
    const LabeledMultigraph g = unit_cycle(4);
    const auto [opt_set, opt] = exact_two_ecss(g);
    CHECK(opt == 4);
    const EdgeSet approx = two_ecss_approx(g, TwoEcssMethod::Arborescence2x);
    CHECK(g.weight_of(approx) <= 2 * opt);
    CHECK(bridges(g, approx).empty());
}

TEST_CASE("2-ECSS rejects graphs with bridges") {
    LabeledMultigraph path(3);
    path.add_edge(0, 1, 1, Safety::Unsafe);
    path.add_edge(1, 2, 1, Safety::Unsafe);
    CHECK_THROWS_AS(two_ecss_approx(path, TwoEcssMethod::Arborescence2x), NotTwoEdgeConnected);
}

TEST_CASE("arborescence union stays within twice the optimum") {
    testutil::Rng rng(5);
    for (int it = 0; it < 60; ++it) {
        const int n = 3 + rng.below(4);
        const LabeledMultigraph g = random_2ec(rng, n, std::min(12, n + 1 + rng.below(4)));
        const auto [opt_set, opt] = exact_two_ecss(g);
        for (auto method : {TwoEcssMethod::Arborescence2x, TwoEcssMethod::MstPlusAug}) {
            const EdgeSet got = two_ecss_approx(g, method);
            CHECK(is_connected_subgraph(g, got));
            CHECK(bridges(g, got).empty());
            if (method == TwoEcssMethod::Arborescence2x) CHECK(g.weight_of(got) <= 2 * opt);
        }
    }
}

TEST_CASE("WTAP on a path with one covering link") {
    LabeledMultigraph g(3);
    g.add_edge(0, 1, 1, Safety::Unsafe);
    g.add_edge(1, 2, 1, Safety::Unsafe);
    g.add_edge(0, 2, 1, Safety::Safe);
    for (auto method : {WtapMethod::PrimalDual2x, WtapMethod::Exact})
        CHECK(wtap_approx(g, {0, 1}, method) == EdgeSet{2});
}

TEST_CASE("WTAP on a star needs two of the three leaf links") {
    LabeledMultigraph g(4);
    g.add_edge(0, 1, 1, Safety::Unsafe);  // star edges
    g.add_edge(0, 2, 1, Safety::Unsafe);
    g.add_edge(0, 3, 1, Safety::Unsafe);
    g.add_edge(1, 2, 1, Safety::Safe);  // leaf-leaf links
    g.add_edge(1, 3, 1, Safety::Safe);
    g.add_edge(2, 3, 1, Safety::Safe);
    const auto [links, w] = exact_wtap(g, {0, 1, 2});
    CHECK(w == 2);
    const EdgeSet pd = wtap_approx(g, {0, 1, 2}, WtapMethod::PrimalDual2x);
    CHECK(g.weight_of(pd) <= 2 * w);
}

TEST_CASE("WTAP picks zero-cost links when available") {
    LabeledMultigraph g(3);
    g.add_edge(0, 1, 1, Safety::Unsafe);
    g.add_edge(1, 2, 1, Safety::Unsafe);
    g.add_edge(0, 2, 0, Safety::Unsafe);
    CHECK(exact_wtap(g, {0, 1}).second == 0);
    CHECK(wtap_approx(g, {0, 1}, WtapMethod::PrimalDual2x) == EdgeSet{2});
}

TEST_CASE("WTAP reports uncoverable tree edges") {
    LabeledMultigraph g(3);
    g.add_edge(0, 1, 1, Safety::Unsafe);
    g.add_edge(1, 2, 1, Safety::Unsafe);
    CHECK_THROWS_AS(wtap_approx(g, {0, 1}, WtapMethod::PrimalDual2x), NoFeasibleAugmentation);
}

TEST_CASE("primal-dual WTAP stays within twice the optimum") {
    testutil::Rng rng(17);
    for (int it = 0; it < 60; ++it) {
        const int n = 3 + rng.below(4);
        LabeledMultigraph g(n);
        // random tree plus random links
        for (int i = 1; i < n; ++i)
            g.add_edge(i, rng.below(i), Rational(1 + rng.below(4)), Safety::Unsafe);
        EdgeSet tree;
        for (int i = 0; i < n - 1; ++i) tree.insert(i);
        const int extra = 2 + rng.below(5);
        for (int i = 0; i < extra; ++i) {
            const int u = rng.below(n);
            int v = rng.below(n - 1);
            if (v >= u) ++v;
            g.add_edge(u, v, Rational(1 + rng.below(4)), Safety::Safe);
        }
        Rational opt;
        try {
            opt = exact_wtap(g, tree).second;
        } catch (const NoFeasibleAugmentation&) {
            CHECK_THROWS_AS(wtap_approx(g, tree, WtapMethod::PrimalDual2x), NoFeasibleAugmentation);
            continue;
        }
        const EdgeSet pd = wtap_approx(g, tree, WtapMethod::PrimalDual2x);
        EdgeSet all = tree;
        for (int id : pd) all.insert(id);
        const EdgeSet cut = bridges(g, all);
        for (int t : tree) CHECK_FALSE(cut.count(t));
        CHECK(g.weight_of(pd) <= 2 * opt);
    }
}

TEST_CASE("exact FGC oracle on the fixtures") {
    LabeledMultigraph g(2);
    g.add_edge(0, 1, 2, Safety::Safe);
    g.add_edge(0, 1, 1, Safety::Unsafe);
    const FgcInstance two{std::move(g)};
    const auto [sol2, w2] = exact_fgc(two);
    CHECK(w2 == 2);
    CHECK(sol2.edge_ids == EdgeSet{0});

    const auto [sol3, w3] = exact_fgc(load("fig3.fgc"));
    CHECK(w3 == 2);

    const auto [sol1, w1] = exact_fgc(load("fig1.fgc"));
    CHECK(w1 == 17);
    CHECK(sol1.edge_ids == EdgeSet{0, 1, 2, 3, 6, 7, 8});
}

TEST_CASE("oracle budget and infeasibility errors") {
    const FgcInstance big = generate_instance(InstanceKind::Random, 6, 12, 3, Rational(1, 2), 4);
    CHECK_THROWS_AS(exact_fgc(big, 5), TooLarge);
}

TEST_CASE("exact 2-ECSS oracle examples") {
    CHECK(exact_two_ecss(unit_cycle(3)).second == 3);
    LabeledMultigraph g = unit_cycle(4);
    g.add_edge(0, 2, 10, Safety::Unsafe);
    const auto [set, w] = exact_two_ecss(g);
    CHECK(w == 4);
    CHECK(set == EdgeSet{0, 1, 2, 3});
}

TEST_CASE("augmentation preserves the optimum") {
    testutil::Rng rng(31);
    for (int it = 0; it < 40; ++it) {
        const int n = 2 + rng.below(4);
        LabeledMultigraph g =
            testutil::random_connected_graph(rng, n, std::min(8, n + rng.below(4)), 4, 60);
        EdgeSet all;
        for (int i = 0; i < g.edge_count(); ++i) all.insert(i);
        if (!testutil::feasible_by_definition(g, 1, all)) continue;
        const FgcInstance raw{std::move(g)};
        const auto [aug, map] = augment_parallel_unsafe(raw);
        if (aug.edge_count() > 12) continue;
        CHECK(exact_fgc(raw).second == exact_fgc(aug).second);
    }
}

TEST_CASE("exact k-ECSS on K4 needs all six edges for k=3") {
    LabeledMultigraph k4(4);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) k4.add_edge(u, v, 1, Safety::Unsafe);
    const auto [set, size] = exact_kecss(k4, 3);
    CHECK(size == 6);
    const EdgeSet pruned = kecss_pruning_heuristic(k4, 3);
    CHECK(edge_connectivity(k4, pruned) >= 3);
}
