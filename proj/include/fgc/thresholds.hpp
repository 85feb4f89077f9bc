#pragma once

#include <map>
#include <vector>

#include "fgc/instance.hpp"

namespace fgc {

// A scaling factor in [0,1], or the INFINITY sentinel for unsafe edges that
// enter no alpha-MST.
struct ScalingFactor {
    Rational value;
    bool infinite = false;

    static ScalingFactor inf() { return ScalingFactor{Rational(0), true}; }
    static ScalingFactor of(Rational v) { return ScalingFactor{std::move(v), false}; }

    bool operator==(const ScalingFactor& o) const {
        return infinite == o.infinite && (infinite || value == o.value);
    }
    bool operator<(const ScalingFactor& o) const {
        if (infinite != o.infinite) return !infinite;
        if (infinite) return false;
        return value < o.value;
    }
};

std::string format_scaling(const ScalingFactor& s);

// Scaled weight w_alpha: safe edges cost alpha*w, unsafe edges cost w.
Rational scaled_weight(const Edge& e, const Rational& alpha);

// Strict total order on edges under w_alpha. Ties go safe-first, then by original
// weight, then by id; the original-weight key makes the order at alpha=0 agree
// with the alpha->0+ limit, so alpha-MST membership stays monotone over [0,1].
bool scaled_less(const Edge& a, const Edge& b, const Rational& alpha);

// The deterministic alpha-MST (Kruskal under scaled_less).
SpanningTree alpha_mst(const FgcInstance& instance, const Rational& alpha);

// True iff some alpha-MST under the true scaled weights contains the edge
// (endpoints disconnected among strictly lighter edges).
bool in_some_alpha_mst(const FgcInstance& instance, const Rational& alpha, int edge_id);

struct ThresholdSet {
    // Distinct confirmed crossing values from the pairing procedure; at most
    // |V|-1 of them.
    std::vector<Rational> values;
    // Per-edge thresholds: upper for safe edges, lower for unsafe edges
    // (INFINITY when the unsafe edge is in no alpha-MST).
    std::map<int, ScalingFactor> attribution;

    // attribution values plus {0,1}, sorted: the scaling set of the hybrid.
    std::vector<Rational> scaling_set() const;

    std::string serialize() const;  // lines "edge_id p/q|inf"
};

// Exact threshold of one edge: for safe e the largest alpha with e in some
// alpha-MST; for unsafe f the smallest such alpha, or INFINITY.
ScalingFactor exact_threshold(const FgcInstance& instance, int edge_id);

// Threshold of the deterministic alpha-MST family (ties resolved by the module
// tiebreak, the symbolic perturbation). Differs from exact_threshold only on
// weight ties. Safe edges: membership is [0, value], NEVER when the edge is in
// no deterministic alpha-MST at all. Unsafe edges: membership is (value, 1]
// (the entering crossing itself keeps the safe competitor), INFINITY when the
// edge never enters; a value of 0 means membership everywhere.
struct DetThreshold {
    enum class Kind { Value, Never, Infinite } kind = Kind::Value;
    Rational value;
};
DetThreshold deterministic_threshold(const FgcInstance& instance, int edge_id);

// Thresholds for all edges. The instance should carry parallel unsafe twins so
// every safe threshold is a genuine crossing in [0,1].
ThresholdSet compute_thresholds(const FgcInstance& instance);

}  // namespace fgc
