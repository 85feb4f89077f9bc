#pragma once

#include <map>

#include "fgc/thresholds.hpp"

namespace fgc {

struct NoBijection : std::runtime_error {
    NoBijection() : std::runtime_error("no exchange bijection (internal error)") {}
};

// A validated edge bijection between two spanning trees of the same graph:
// identity on shared edges, and every single swap source - e + phi(e) spans.
struct ExchangeBijection {
    EdgeSet source;
    EdgeSet target;
    std::map<int, int> mapping;  // source edge id -> target edge id
};

// Whether tree - out_edge + in_edge is again a spanning tree.
bool is_valid_swap(const LabeledMultigraph& g, const EdgeSet& tree, int out_edge, int in_edge);

// Builds an exchange bijection via a perfect matching in the bipartite swap
// graph on source\target x target\source.
ExchangeBijection exchange_bijection(const LabeledMultigraph& g, const SpanningTree& source,
                                     const SpanningTree& target);

// Validity check. The standalone constructor keeps the canonical identity on
// shared edges; chained bijections relax it (a target edge that enters the
// source tree may stay paired to its charged image).
bool is_valid_exchange_bijection(const LabeledMultigraph& g, const ExchangeBijection& b,
                                 bool require_identity_on_shared = true);

// The three weight cases of an alpha-monotone bijection, with the divided form
// at alpha=0 for the safe->unsafe case: satisfied there iff w(phi(e)) > 0 or
// w(e) = 0.
bool verify_alpha_monotone(const LabeledMultigraph& g, const ExchangeBijection& b,
                           const Rational& alpha);

// Same three cases in scaled form, w_alpha(e) <= w_alpha(phi(e)). Identical to
// verify_alpha_monotone for alpha > 0; at alpha = 0 the safe->unsafe case is
// vacuous, which is the inequality the matroid argument actually yields.
bool verify_alpha_monotone_scaled(const LabeledMultigraph& g, const ExchangeBijection& b,
                                  const Rational& alpha);

// phi_1..phi_N for ascending alphas, each from the deterministic alpha_i-MST to
// `target`, consecutive bijections agreeing on shared source edges. Built by a
// breakpoint sweep that replays one swap per crossed candidate ratio.
std::vector<ExchangeBijection> chain_exchange_bijections(const FgcInstance& instance,
                                                         const std::vector<Rational>& alphas,
                                                         const SpanningTree& target);

}  // namespace fgc
