#pragma once

#include <optional>

#include "fgc/subroutines.hpp"
#include "fgc/thresholds.hpp"

namespace fgc {

struct Methods {
    TwoEcssMethod two_ecss = TwoEcssMethod::Arborescence2x;
    WtapMethod wtap = WtapMethod::PrimalDual2x;
    bool exact_kecss = true;  // k-FGC (k+1)-ECSS oracle vs pruning heuristic

    static Methods exact() { return Methods{TwoEcssMethod::Exact, WtapMethod::Exact, true}; }
};

// One hybrid run: every variant tried, with the chosen minimum.
struct RunReport {
    struct Entry {
        std::string name;  // "A", "B", "C"
        std::optional<Rational> alpha;
        Solution solution;
    };
    std::vector<Entry> entries;
    std::size_t chosen = 0;
    double wall_seconds = 0.0;

    const Entry& best() const { return entries.at(chosen); }
};

// 2-ECSS on the augmented graph, then unsafe copies parallel to chosen safe
// edges are dropped. Expects an instance with parallel unsafe twins.
Solution algorithm_a(const FgcInstance& instance, const Methods& methods);

// alpha-MST, contract its safe edges, augment the remaining tree by WTAP.
Solution algorithm_b(const FgcInstance& instance, const Rational& alpha, const Methods& methods);

// alpha-MST, contract its safe edges, 2-ECSS the contraction; returns the safe
// tree edges plus that subgraph.
Solution algorithm_c(const FgcInstance& instance, const Rational& alpha, const Methods& methods);

// Algorithm A once, B and C at every scaling factor (computed thresholds plus
// {0,1}, or the given override), minimum-weight solution chosen.
RunReport hybrid(const FgcInstance& instance, const Methods& methods,
                 const std::optional<std::vector<Rational>>& scaling_override = std::nullopt);

// Unweighted k-FGC: maximum safe forest, then a (k+1)-ECSS of the contraction.
Solution kfgc_unweighted(const FgcInstance& instance, const Methods& methods);

}  // namespace fgc
