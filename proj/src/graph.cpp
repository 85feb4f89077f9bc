#include "fgc/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace fgc {

int LabeledMultigraph::add_edge(int u, int v, Rational weight, Safety safety) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw GraphError("edge endpoint out of range");
    if (u == v) throw GraphError("loops are not allowed");
    if (weight < 0) throw GraphError("negative edge weight");
    const int id = static_cast<int>(edges_.size());
    edges_.push_back(Edge{id, u, v, std::move(weight), safety});
    return id;
}

Rational LabeledMultigraph::weight_of(const EdgeSet& ids) const {
    Rational total = 0;
    for (int id : ids) total += edge(id).weight;
    return total;
}

SpanningTree minimum_spanning_tree(const LabeledMultigraph& g) {
    return minimum_spanning_tree(g, [&](int a, int b) {
        const Edge& ea = g.edge(a);
        const Edge& eb = g.edge(b);
        if (ea.weight != eb.weight) return ea.weight < eb.weight;
        if (ea.safety != eb.safety) return ea.safe();
        return a < b;
    });
}

int count_components(const LabeledMultigraph& g, const EdgeSet& subgraph) {
    UnionFind uf(g.vertex_count());
    for (int id : subgraph) {
        const Edge& e = g.edge(id);
        uf.unite(e.u, e.v);
    }
    return uf.components();
}

bool is_connected_subgraph(const LabeledMultigraph& g, const EdgeSet& subgraph) {
    if (g.vertex_count() <= 1) return true;
    return count_components(g, subgraph) == 1;
}

namespace {

// Tarjan lowlink bridge search; parallel edges handled by skipping the tree edge
// by id rather than by parent vertex.
struct BridgeSearch {
    const LabeledMultigraph& g;
    std::vector<std::vector<std::pair<int, int>>> adj;  // vertex -> (neighbor, edge id)
    std::vector<int> disc, low;
    int timer = 0;
    EdgeSet out;

    explicit BridgeSearch(const LabeledMultigraph& graph, const EdgeSet& subgraph)
        : g(graph),
          adj(static_cast<std::size_t>(graph.vertex_count())),
          disc(static_cast<std::size_t>(graph.vertex_count()), -1),
          low(static_cast<std::size_t>(graph.vertex_count()), -1) {
        for (int id : subgraph) {
            const Edge& e = g.edge(id);
            adj[static_cast<std::size_t>(e.u)].push_back({e.v, id});
            adj[static_cast<std::size_t>(e.v)].push_back({e.u, id});
        }
    }

    void run(int root) {
        // Iterative DFS to avoid recursion limits on path-like graphs.
        struct Frame {
            int v;
            int via_edge;
            std::size_t next = 0;
            bool skipped_tree_edge = false;
        };
        std::vector<Frame> stack;
        stack.push_back({root, -1});
        disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            auto& nb = adj[static_cast<std::size_t>(f.v)];
            if (f.next < nb.size()) {
                auto [to, id] = nb[f.next++];
                if (id == f.via_edge && !f.skipped_tree_edge) {
                    f.skipped_tree_edge = true;  // skip the tree edge exactly once
                    continue;
                }
                if (disc[static_cast<std::size_t>(to)] == -1) {
                    disc[static_cast<std::size_t>(to)] = low[static_cast<std::size_t>(to)] = timer++;
                    stack.push_back({to, id});
                } else {
                    low[static_cast<std::size_t>(f.v)] =
                        std::min(low[static_cast<std::size_t>(f.v)], disc[static_cast<std::size_t>(to)]);
                }
            } else {
                const int v = f.v;
                const int via = stack.back().via_edge;
                stack.pop_back();
                if (!stack.empty()) {
                    const int p = stack.back().v;
                    low[static_cast<std::size_t>(p)] =
                        std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(v)]);
                    if (via >= 0 && low[static_cast<std::size_t>(v)] > disc[static_cast<std::size_t>(p)])
                        out.insert(via);
                }
            }
        }
    }
};

}  // namespace

EdgeSet bridges(const LabeledMultigraph& g, const EdgeSet& subgraph) {
    BridgeSearch search(g, subgraph);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (search.disc[static_cast<std::size_t>(v)] == -1) search.run(v);
    }
    return search.out;
}

namespace {

// Dinic max-flow with unit capacities; arcs stored as antiparallel pairs.
struct UnitFlow {
    struct Arc {
        int to;
        int cap;
    };
    std::vector<Arc> arcs;
    std::vector<std::vector<int>> head;
    std::vector<int> level, it;
    int n;

    explicit UnitFlow(int vertices) : head(static_cast<std::size_t>(vertices)), n(vertices) {}

    void add_undirected(int u, int v) {
        head[static_cast<std::size_t>(u)].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({v, 1});
        head[static_cast<std::size_t>(v)].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({u, 1});
    }

    bool bfs(int s, int t) {
        level.assign(static_cast<std::size_t>(n), -1);
        std::queue<int> q;
        q.push(s);
        level[static_cast<std::size_t>(s)] = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int a : head[static_cast<std::size_t>(v)]) {
                if (arcs[static_cast<std::size_t>(a)].cap > 0 &&
                    level[static_cast<std::size_t>(arcs[static_cast<std::size_t>(a)].to)] == -1) {
                    level[static_cast<std::size_t>(arcs[static_cast<std::size_t>(a)].to)] =
                        level[static_cast<std::size_t>(v)] + 1;
                    q.push(arcs[static_cast<std::size_t>(a)].to);
                }
            }
        }
        return level[static_cast<std::size_t>(t)] >= 0;
    }

    int dfs(int v, int t, int pushed) {
        if (v == t || pushed == 0) return pushed;
        for (int& i = it[static_cast<std::size_t>(v)];
             i < static_cast<int>(head[static_cast<std::size_t>(v)].size()); ++i) {
            const int a = head[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)];
            Arc& arc = arcs[static_cast<std::size_t>(a)];
            if (arc.cap <= 0 || level[static_cast<std::size_t>(arc.to)] != level[static_cast<std::size_t>(v)] + 1)
                continue;
            const int f = dfs(arc.to, t, std::min(pushed, arc.cap));
            if (f > 0) {
                arc.cap -= f;
                arcs[static_cast<std::size_t>(a ^ 1)].cap += f;
                return f;
            }
        }
        return 0;
    }

    int max_flow(int s, int t) {
        int flow = 0;
        while (bfs(s, t)) {
            it.assign(static_cast<std::size_t>(n), 0);
            while (int f = dfs(s, t, std::numeric_limits<int>::max())) flow += f;
        }
        return flow;
    }
};

}  // namespace

int edge_connectivity(const LabeledMultigraph& g, const EdgeSet& subgraph) {
    const int n = g.vertex_count();
    if (n <= 1) return std::numeric_limits<int>::max();
    if (!is_connected_subgraph(g, subgraph)) return 0;
    int best = std::numeric_limits<int>::max();
    for (int t = 1; t < n; ++t) {
        UnitFlow flow(n);
        for (int id : subgraph) {
            const Edge& e = g.edge(id);
            flow.add_undirected(e.u, e.v);
        }
        best = std::min(best, flow.max_flow(0, t));
    }
    return best;
}

std::pair<LabeledMultigraph, ContractionMap> contract(const LabeledMultigraph& g,
                                                      const EdgeSet& edge_ids) {
    UnionFind uf(g.vertex_count());
    for (int id : edge_ids) {
        const Edge& e = g.edge(id);
        uf.unite(e.u, e.v);
    }
    ContractionMap map;
    map.vertex_map.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    int next = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const int r = uf.find(v);
        if (map.vertex_map[static_cast<std::size_t>(r)] == -1)
            map.vertex_map[static_cast<std::size_t>(r)] = next++;
        map.vertex_map[static_cast<std::size_t>(v)] = map.vertex_map[static_cast<std::size_t>(r)];
    }
    LabeledMultigraph contracted(next);
    // Survivors are appended in ascending original id, so contracted id k is the
    // k-th smallest surviving original id (original_ids inverts this).
    for (const Edge& e : g.edges()) {
        const int cu = map.vertex_map[static_cast<std::size_t>(e.u)];
        const int cv = map.vertex_map[static_cast<std::size_t>(e.v)];
        if (cu != cv) {
            map.surviving_edges.insert(e.id);
            map.original_ids.push_back(e.id);
            contracted.add_edge(cu, cv, e.weight, e.safety);
        }
    }
    return {std::move(contracted), std::move(map)};
}

}  // namespace fgc
