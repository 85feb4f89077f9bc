#pragma once

#include <map>

#include "fgc/instance.hpp"

namespace fgc {

struct NotTwoEdgeConnected : std::runtime_error {
    NotTwoEdgeConnected() : std::runtime_error("graph is not 2-edge connected") {}
};
struct NoFeasibleAugmentation : std::runtime_error {
    NoFeasibleAugmentation() : std::runtime_error("some tree edge is crossed by no link") {}
};
struct TooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct Infeasible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Documented approximation ratios of the pluggable subroutines.
struct SubroutineRatios {
    Rational lambda{1};               // 2-ECSS
    Rational tau{1};                  // WTAP
    std::map<int, Rational> theta;    // k -> k-ECSS cardinality ratio

    static SubroutineRatios certified() {
        return SubroutineRatios{Rational(2), Rational(2), {}};
    }
};

enum class TwoEcssMethod { Arborescence2x, MstPlusAug, Exact };
enum class WtapMethod { PrimalDual2x, Exact };

// Minimum-cost arborescence rooted at `root` over the given arcs (Edmonds).
// Returns indices into `arcs`. Ties break by arc cost, then label, then index.
struct Arc {
    int from;
    int to;
    Rational cost;
    int label;  // undirected edge id the arc came from
};
std::vector<int> min_cost_arborescence(int n, int root, const std::vector<Arc>& arcs);

// 2-edge-connected spanning subgraph of the whole graph.
//   Arborescence2x: out- plus in-arborescence union, bridge-repaired; lambda = 2
//   MstPlusAug:     MST plus greedy bridge cover; lambda certified empirically
//   Exact:          brute-force oracle (desk scale)
EdgeSet two_ecss_approx(const LabeledMultigraph& g, TwoEcssMethod method);

// Weighted tree augmentation: links so that every tree edge lies on a cycle.
//   PrimalDual2x: primal-dual on the uncrossable tree-cut family; tau = 2
//   Exact:        brute-force oracle
EdgeSet wtap_approx(const LabeledMultigraph& g, const EdgeSet& tree, WtapMethod method);

// Brute-force oracles; deterministic lexicographically-smallest optima.
std::pair<Solution, Rational> exact_fgc(const FgcInstance& instance, int budget = 20);
std::pair<EdgeSet, Rational> exact_two_ecss(const LabeledMultigraph& g, int budget = 20);
std::pair<EdgeSet, Rational> exact_wtap(const LabeledMultigraph& g, const EdgeSet& tree,
                                        int budget = 20);

// Minimum-cardinality k-edge-connected spanning subgraph oracle (unit weights),
// plus a degree-pruning heuristic for larger graphs.
std::pair<EdgeSet, int> exact_kecss(const LabeledMultigraph& g, int k, int budget = 20);
EdgeSet kecss_pruning_heuristic(const LabeledMultigraph& g, int k);

}  // namespace fgc
