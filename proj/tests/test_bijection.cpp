#include <doctest.h>

#include "fgc/bijection.hpp"
#include "fgc/subroutines.hpp"
#include "test_util.hpp"

using namespace fgc;

namespace {

FgcInstance augmented(FgcInstance raw) { return augment_parallel_unsafe(raw).first; }

SpanningTree tree_of(EdgeSet ids) {
    SpanningTree t;
    t.edge_ids = std::move(ids);
    return t;
}

}  // namespace

TEST_CASE("identity bijection when source equals target") {
    LabeledMultigraph g(3);
    g.add_edge(0, 1, 1, Safety::Safe);
    g.add_edge(1, 2, 1, Safety::Safe);
    g.add_edge(0, 2, 1, Safety::Unsafe);
    const SpanningTree t = tree_of({0, 1});
    const ExchangeBijection b = exchange_bijection(g, t, t);
    CHECK(b.mapping == std::map<int, int>{{0, 0}, {1, 1}});
    CHECK(is_valid_exchange_bijection(g, b));
    CHECK(verify_alpha_monotone(g, b, Rational(1, 3)));
}

TEST_CASE("two-vertex swap is alpha-monotone at one") {
    LabeledMultigraph g(2);
    g.add_edge(0, 1, 1, Safety::Unsafe);
    g.add_edge(0, 1, 2, Safety::Safe);
    const ExchangeBijection b = exchange_bijection(g, tree_of({0}), tree_of({1}));
    CHECK(b.mapping == std::map<int, int>{{0, 1}});
    CHECK(is_valid_exchange_bijection(g, b));
    CHECK(verify_alpha_monotone(g, b, Rational(1)));  // 1 <= 1 * 2
}

TEST_CASE("four-cycle with chords: both swaps remain spanning") {
    LabeledMultigraph g(4);
    g.add_edge(0, 1, 1, Safety::Safe);   // 0
    g.add_edge(1, 2, 1, Safety::Safe);   // 1
    g.add_edge(2, 3, 1, Safety::Safe);   // 2
    g.add_edge(3, 0, 1, Safety::Safe);   // 3
    g.add_edge(0, 2, 1, Safety::Unsafe); // 4
    g.add_edge(1, 3, 1, Safety::Unsafe); // 5
    const ExchangeBijection b = exchange_bijection(g, tree_of({0, 1, 2}), tree_of({0, 4, 5}));
    CHECK(is_valid_exchange_bijection(g, b));
}

TEST_CASE("monotonicity verdicts on handmade mappings") {
    LabeledMultigraph g(2);
    g.add_edge(0, 1, 3, Safety::Unsafe);
    g.add_edge(0, 1, 2, Safety::Safe);
    ExchangeBijection bad;
    bad.source = {0};
    bad.target = {1};
    bad.mapping = {{0, 1}};
    CHECK_FALSE(verify_alpha_monotone(g, bad, Rational(1)));  // 3 > 1*2

    LabeledMultigraph h(2);
    h.add_edge(0, 1, 3, Safety::Safe);
    h.add_edge(0, 1, 2, Safety::Unsafe);
    ExchangeBijection ok;
    ok.source = {0};
    ok.target = {1};
    ok.mapping = {{0, 1}};
    CHECK(verify_alpha_monotone(h, ok, Rational(1, 2)));  // 3 <= 2/(1/2) = 4
}

TEST_CASE("divided-form rule at alpha zero") {
    LabeledMultigraph g(2);
    g.add_edge(0, 1, 5, Safety::Safe);
    g.add_edge(0, 1, 0, Safety::Unsafe);
    ExchangeBijection b;
    b.source = {0};
    b.target = {1};
    b.mapping = {{0, 1}};
    CHECK_FALSE(verify_alpha_monotone(g, b, Rational(0)));       // w(phi)=0 and w(e)>0
    CHECK(verify_alpha_monotone_scaled(g, b, Rational(0)));      // 0*5 <= 0
    LabeledMultigraph h(2);
    h.add_edge(0, 1, 5, Safety::Safe);
    h.add_edge(0, 1, 3, Safety::Unsafe);
    ExchangeBijection c;
    c.source = {0};
    c.target = {1};
    c.mapping = {{0, 1}};
    CHECK(verify_alpha_monotone(h, c, Rational(0)));  // w(phi) > 0
}

TEST_CASE("chain on the two-vertex instance follows the sweep") {
    LabeledMultigraph g(2);
    g.add_edge(0, 1, 2, Safety::Safe);
    g.add_edge(0, 1, 1, Safety::Unsafe);
    const FgcInstance inst{std::move(g)};
    const SpanningTree target = tree_of({0});
    const auto chain =
        chain_exchange_bijections(inst, {Rational(0), Rational(1)}, target);
    REQUIRE(chain.size() == 2);
    CHECK(chain[0].mapping == std::map<int, int>{{0, 0}});
    CHECK(chain[1].mapping == std::map<int, int>{{1, 0}});
}

TEST_CASE("identical alpha-MSTs give identical bijections") {
    LabeledMultigraph g(3);
    g.add_edge(0, 1, 1, Safety::Safe);
    g.add_edge(1, 2, 2, Safety::Safe);
    g.add_edge(0, 2, 5, Safety::Unsafe);
    const FgcInstance inst{std::move(g)};
    const SpanningTree target = tree_of({0, 1});
    const auto chain = chain_exchange_bijections(
        inst, {Rational(1, 10), Rational(2, 10)}, target);  // no breakpoint in between
    REQUIRE(chain.size() == 2);
    CHECK(chain[0].mapping == chain[1].mapping);
}

TEST_CASE("chains are valid, monotone and consecutive-consistent on random instances") {
    testutil::Rng rng(99);
    int built = 0;
    for (int it = 0; it < 35; ++it) {
        const int n = 2 + rng.below(5);
        LabeledMultigraph g =
            testutil::random_connected_graph(rng, n, n + rng.below(4), 4, 55);
        EdgeSet all;
        for (int i = 0; i < g.edge_count(); ++i) all.insert(i);
        if (!testutil::feasible_by_definition(g, 1, all)) continue;
        const FgcInstance inst = augmented(FgcInstance{std::move(g)});
        const auto alphas = compute_thresholds(inst).scaling_set();
        const auto [opt, w] = exact_fgc(inst);
        UnionFind uf(inst.vertex_count());
        EdgeSet tree;
        for (int id : opt.edge_ids) {
            if (uf.unite(inst.graph().edge(id).u, inst.graph().edge(id).v)) tree.insert(id);
        }
        const auto chain = chain_exchange_bijections(inst, alphas, tree_of(tree));
        REQUIRE(chain.size() == alphas.size());
        ++built;
        for (std::size_t i = 0; i < chain.size(); ++i) {
            CHECK(is_valid_exchange_bijection(inst.graph(), chain[i]));
            CHECK(verify_alpha_monotone_scaled(inst.graph(), chain[i], alphas[i]));
            if (alphas[i] > 0) CHECK(verify_alpha_monotone(inst.graph(), chain[i], alphas[i]));
            if (i > 0) {
                // agreement on shared sources, except pairs whose carried swap
                // is no longer valid in the new tree (keeping those would break
                // the exchange property)
                for (const auto& [src, dst] : chain[i - 1].mapping) {
                    if (!chain[i].source.count(src)) continue;
                    if (src != dst && !is_valid_swap(inst.graph(), chain[i].source, src, dst))
                        continue;
                    CHECK(chain[i].mapping.at(src) == dst);
                }
            }
        }
    }
    CHECK(built > 10);
}
