#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fgc/rational.hpp"

namespace fgc {

enum class Safety : std::uint8_t { Safe, Unsafe };

struct Edge {
    int id = 0;
    int u = 0;
    int v = 0;
    Rational weight;
    Safety safety = Safety::Unsafe;

    bool safe() const { return safety == Safety::Safe; }
    int other(int w) const { return w == u ? v : u; }
};

using EdgeSet = std::set<int>;

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DisconnectedGraph : GraphError {
    DisconnectedGraph() : GraphError("graph is not connected") {}
};

// Loopless weighted multigraph with safe/unsafe edge labels.
// Edge ids are dense 0..m-1 and stable across every derived structure.
class LabeledMultigraph {
public:
    LabeledMultigraph() = default;
    explicit LabeledMultigraph(int vertex_count) : n_(vertex_count) {}

    int add_edge(int u, int v, Rational weight, Safety safety);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const Edge& edge(int id) const { return edges_.at(static_cast<std::size_t>(id)); }
    const std::vector<Edge>& edges() const { return edges_; }

    Rational weight_of(const EdgeSet& ids) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n), size_(n, 1), components_(n) {
        for (int i = 0; i < n; ++i) parent_[i] = i;
    }
    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        --components_;
        return true;
    }
    bool connected(int a, int b) { return find(a) == find(b); }
    int components() const { return components_; }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    int components_;
};

struct SpanningTree {
    EdgeSet edge_ids;
};

struct ContractionMap {
    std::vector<int> vertex_map;    // original vertex -> contracted vertex
    EdgeSet surviving_edges;        // original ids of non-loop edges
    std::vector<int> original_ids;  // contracted edge id -> original edge id

    EdgeSet to_original(const EdgeSet& contracted_ids) const {
        EdgeSet out;
        for (int id : contracted_ids) out.insert(original_ids.at(static_cast<std::size_t>(id)));
        return out;
    }
};

// Deterministic Kruskal over the total order induced by key_less. DisconnectedGraph
// if the edge set does not span.
template <class KeyLess>
SpanningTree minimum_spanning_tree(const LabeledMultigraph& g, KeyLess key_less) {
    std::vector<int> order(static_cast<std::size_t>(g.edge_count()));
    for (int i = 0; i < g.edge_count(); ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(), key_less);
    UnionFind uf(g.vertex_count());
    SpanningTree tree;
    for (int id : order) {
        const Edge& e = g.edge(id);
        if (uf.unite(e.u, e.v)) tree.edge_ids.insert(id);
    }
    if (uf.components() != 1) throw DisconnectedGraph();
    return tree;
}

// MST under the plain weights with the module-wide deterministic tiebreak.
SpanningTree minimum_spanning_tree(const LabeledMultigraph& g);

// Edges of `subgraph` whose removal increases the component count of (V, subgraph).
EdgeSet bridges(const LabeledMultigraph& g, const EdgeSet& subgraph);

bool is_connected_subgraph(const LabeledMultigraph& g, const EdgeSet& subgraph);

int count_components(const LabeledMultigraph& g, const EdgeSet& subgraph);

// lambda(V, subgraph): 0 if disconnected, otherwise the global min cut under unit
// edge capacities (repeated max-flow from vertex 0). Returns a large sentinel for
// graphs with fewer than two vertices.
int edge_connectivity(const LabeledMultigraph& g, const EdgeSet& subgraph);

// Contract the given edges. One contracted vertex per component of (V, edge_ids);
// loops discarded, parallel edges kept, surviving edges keep id/weight/safety.
std::pair<LabeledMultigraph, ContractionMap> contract(const LabeledMultigraph& g,
                                                      const EdgeSet& edge_ids);

}  // namespace fgc
