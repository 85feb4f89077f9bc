#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fgc/graph.hpp"

namespace fgc {

struct InstanceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InfeasibleSolution : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvalidParameters : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An FGC (k=1) or k-FGC problem over a labeled multigraph. The full edge set must
// itself be a feasible solution, which is checked at construction.
class FgcInstance {
public:
    FgcInstance(LabeledMultigraph graph, int robustness_k = 1);

    const LabeledMultigraph& graph() const { return graph_; }
    int k() const { return k_; }
    int vertex_count() const { return graph_.vertex_count(); }
    int edge_count() const { return graph_.edge_count(); }

private:
    LabeledMultigraph graph_;
    int k_ = 1;
};

struct Solution {
    EdgeSet edge_ids;
    Rational weight;

    static Solution of(const FgcInstance& instance, EdgeSet ids) {
        Rational w = instance.graph().weight_of(ids);
        return Solution{std::move(ids), std::move(w)};
    }
};

struct SolutionDecomposition {
    std::vector<std::vector<int>> components;  // 2-edge-connected component vertex sets
    EdgeSet cut_safe_edges;                    // the bridges of the solution, all safe
    Rational delta;                            // w(cut_safe_edges) / w(solution), 0 if weightless
};

// Appends, for every safe edge without an unsafe parallel copy of equal weight,
// one such copy. Returns the augmented instance and the twin -> source edge map.
// Idempotent.
std::pair<FgcInstance, std::map<int, int>> augment_parallel_unsafe(const FgcInstance& instance);

// k=1: (V,S) connected and every bridge safe. k>=2: (V,S) connected and the
// contraction of S's safe edges is a single vertex or (k+1)-edge connected.
bool is_feasible(const FgcInstance& instance, const Solution& solution);

// Witness for an infeasible solution: either a disconnection or a set of at most
// k unsafe edges whose removal disconnects, together with one side of the cut.
struct InfeasibilityWitness {
    bool disconnected = false;
    EdgeSet failing_unsafe;        // empty when disconnected
    std::vector<int> cut_side;     // vertices on one side of the violated cut
};
std::optional<InfeasibilityWitness> explain_infeasible(const FgcInstance& instance,
                                                       const Solution& solution);

SolutionDecomposition decompose(const FgcInstance& instance, const Solution& solution);

enum class InstanceKind { Random, MstCase, TwoEcssCase, WtapCase };

// Deterministic per seed. RANDOM forces bridges safe so the instance is loadable.
FgcInstance generate_instance(InstanceKind kind, int n, int m, int weight_bound,
                              const Rational& safe_fraction, std::uint64_t seed);

// Text format: line `fgc <n> <m> <k>`, then m lines `u v <weight> <S|U>`;
// '#'-prefixed lines ignored. Solutions are whitespace-separated edge ids.
FgcInstance parse_instance(std::istream& in);
FgcInstance parse_instance_file(const std::string& path);
std::string serialize_instance(const FgcInstance& instance);

EdgeSet parse_solution(std::istream& in);
EdgeSet parse_solution_file(const std::string& path);
std::string serialize_solution(const EdgeSet& ids);

}  // namespace fgc
