#include "fgc/algorithms.hpp"

#include <chrono>

namespace fgc {

namespace {

Solution checked(const FgcInstance& instance, EdgeSet ids, const char* what) {
    Solution sol = Solution::of(instance, std::move(ids));
    // The constructions are proven feasible; verify anyway since unsafe tree
    // edges are discarded along the way.
    if (!is_feasible(instance, sol))
        throw std::logic_error(std::string(what) + " produced an infeasible solution");
    return sol;
}

}  // namespace

Solution algorithm_a(const FgcInstance& instance, const Methods& methods) {
    const LabeledMultigraph& g = instance.graph();
    EdgeSet chosen = two_ecss_approx(g, methods.two_ecss);
    // Drop unsafe edges parallel to a chosen safe edge.
    EdgeSet out = chosen;
    for (int id : chosen) {
        const Edge& f = g.edge(id);
        if (f.safe()) continue;
        for (int sid : chosen) {
            const Edge& e = g.edge(sid);
            if (e.safe() && ((e.u == f.u && e.v == f.v) || (e.u == f.v && e.v == f.u))) {
                out.erase(id);
                break;
            }
        }
    }
    return checked(instance, std::move(out), "algorithm A");
}

Solution algorithm_b(const FgcInstance& instance, const Rational& alpha, const Methods& methods) {
    const LabeledMultigraph& g = instance.graph();
    const SpanningTree tree = alpha_mst(instance, alpha);
    EdgeSet safe_tree;
    for (int id : tree.edge_ids) {
        if (g.edge(id).safe()) safe_tree.insert(id);
    }
    auto [contracted, map] = contract(g, safe_tree);
    EdgeSet out = tree.edge_ids;
    if (contracted.vertex_count() > 1) {
        EdgeSet contracted_tree;
        for (int i = 0; i < contracted.edge_count(); ++i) {
            if (tree.edge_ids.count(map.original_ids[static_cast<std::size_t>(i)]))
                contracted_tree.insert(i);
        }
        const EdgeSet links = wtap_approx(contracted, contracted_tree, methods.wtap);
        for (int id : map.to_original(links)) out.insert(id);
    }
    return checked(instance, std::move(out), "algorithm B");
}

Solution algorithm_c(const FgcInstance& instance, const Rational& alpha, const Methods& methods) {
    const LabeledMultigraph& g = instance.graph();
    const SpanningTree tree = alpha_mst(instance, alpha);
    EdgeSet safe_tree;
    for (int id : tree.edge_ids) {
        if (g.edge(id).safe()) safe_tree.insert(id);
    }
    auto [contracted, map] = contract(g, safe_tree);
    EdgeSet out = safe_tree;
    if (contracted.vertex_count() > 1) {
        const EdgeSet sub = two_ecss_approx(contracted, methods.two_ecss);
        for (int id : map.to_original(sub)) out.insert(id);
    }
    return checked(instance, std::move(out), "algorithm C");
}

RunReport hybrid(const FgcInstance& instance, const Methods& methods,
                 const std::optional<std::vector<Rational>>& scaling_override) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<Rational> alphas;
    if (scaling_override) {
        alphas = *scaling_override;
        std::sort(alphas.begin(), alphas.end());
        alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());
    } else {
        alphas = compute_thresholds(instance).scaling_set();
    }
    RunReport report;
    report.entries.push_back({"A", std::nullopt, algorithm_a(instance, methods)});
    for (const Rational& a : alphas) {
        report.entries.push_back({"B", a, algorithm_b(instance, a, methods)});
        report.entries.push_back({"C", a, algorithm_c(instance, a, methods)});
    }
    report.chosen = 0;
    for (std::size_t i = 1; i < report.entries.size(); ++i) {
        if (report.entries[i].solution.weight < report.entries[report.chosen].solution.weight)
            report.chosen = i;
    }
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

Solution kfgc_unweighted(const FgcInstance& instance, const Methods& methods) {
    const LabeledMultigraph& g = instance.graph();
    for (const Edge& e : g.edges()) {
        if (e.weight != 1) throw InvalidParameters("k-FGC algorithm expects unit weights");
    }
    // Maximum safe forest by union-find in input order.
    EdgeSet forest;
    UnionFind uf(g.vertex_count());
    for (const Edge& e : g.edges()) {
        if (e.safe() && uf.unite(e.u, e.v)) forest.insert(e.id);
    }
    auto [contracted, map] = contract(g, forest);
    EdgeSet out = forest;
    if (contracted.vertex_count() > 1) {
        EdgeSet all;
        for (int i = 0; i < contracted.edge_count(); ++i) all.insert(i);
        if (edge_connectivity(contracted, all) < instance.k() + 1)
            throw Infeasible("contracted graph is not (k+1)-edge connectable");
        const EdgeSet sub = methods.exact_kecss
                                ? exact_kecss(contracted, instance.k() + 1).first
                                : kecss_pruning_heuristic(contracted, instance.k() + 1);
        for (int id : map.to_original(sub)) out.insert(id);
    }
    Solution sol = Solution::of(instance, std::move(out));
    if (!is_feasible(instance, sol))
        throw std::logic_error("k-FGC algorithm produced an infeasible solution");
    return sol;
}

}  // namespace fgc
