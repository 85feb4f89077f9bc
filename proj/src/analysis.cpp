#include "fgc/analysis.hpp"

#include <algorithm>
#include <map>

namespace fgc {

namespace {

// Spanning tree of the optimum preferring edges with a genuine threshold value
// (bridges are in every spanning tree regardless).
EdgeSet tree_inside(const FgcInstance& instance, const EdgeSet& solution,
                    const std::map<int, DetThreshold>& thresholds) {
    const LabeledMultigraph& g = instance.graph();
    std::vector<int> order(solution.begin(), solution.end());
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const bool ia = thresholds.at(a).kind != DetThreshold::Kind::Value;
        const bool ib = thresholds.at(b).kind != DetThreshold::Kind::Value;
        if (ia != ib) return !ia;
        if (g.edge(a).weight != g.edge(b).weight) return g.edge(a).weight < g.edge(b).weight;
        return a < b;
    });
    UnionFind uf(g.vertex_count());
    EdgeSet tree;
    for (int id : order) {
        if (uf.unite(g.edge(id).u, g.edge(id).v)) tree.insert(id);
    }
    return tree;
}

int bucket_of(const std::vector<Rational>& alphas, const Rational& threshold, int cap) {
    int best = -1;
    for (std::size_t j = 0; j < alphas.size(); ++j) {
        if (alphas[j] <= threshold) best = static_cast<int>(j);
    }
    if (best < 0) throw ParametersUndefined("threshold below the smallest alpha");
    return std::min(best, cap);
}

}  // namespace

AnalysisParameters extract_parameters(const FgcInstance& instance, const Solution& optimal,
                                      const std::vector<Rational>& alphas) {
    const LabeledMultigraph& g = instance.graph();
    if (!is_feasible(instance, optimal)) throw InfeasibleSolution("optimal solution infeasible");
    if (optimal.weight == 0) throw ParametersUndefined("zero-weight optimum");
    // Bucketing uses the deterministic-family thresholds: the charging argument
    // tracks the trees the tiebreak actually produces, and the two attributions
    // differ exactly on weight ties.
    std::map<int, DetThreshold> thresholds;
    for (int id = 0; id < g.edge_count(); ++id)
        thresholds[id] = deterministic_threshold(instance, id);

    AnalysisParameters out;
    out.alphas = alphas;
    std::sort(out.alphas.begin(), out.alphas.end());
    out.alphas.erase(std::unique(out.alphas.begin(), out.alphas.end()), out.alphas.end());
    out.cut_edges = bridges(g, optimal.edge_ids);
    out.tree = tree_inside(instance, optimal.edge_ids, thresholds);
    for (int id : out.tree) {
        if (thresholds.at(id).kind != DetThreshold::Kind::Value)
            throw ParametersUndefined(
                "a tree edge of the optimum has no threshold value; the charging "
                "parameters are undefined for this instance");
    }
    const Rational opt = optimal.weight;
    const int nb = static_cast<int>(out.alphas.size());
    out.beta.assign(static_cast<std::size_t>(nb), Rational(0));
    out.gamma.assign(static_cast<std::size_t>(nb), Rational(0));
    out.gamma_count.assign(static_cast<std::size_t>(nb), 0);
    for (int id : out.tree) {
        const int j = bucket_of(out.alphas, thresholds.at(id).value, nb - 1);
        if (out.cut_edges.count(id)) {
            out.beta[static_cast<std::size_t>(j)] += g.edge(id).weight / opt;
        } else {
            out.gamma[static_cast<std::size_t>(j)] += g.edge(id).weight / opt;
            out.gamma_count[static_cast<std::size_t>(j)] += 1;
        }
    }
    out.xi = (opt - g.weight_of(out.tree)) / opt;
    out.delta = g.weight_of(out.cut_edges) / opt;
    Rational total = out.xi;
    for (const Rational& b : out.beta) total += b;
    for (const Rational& c : out.gamma) total += c;
    if (total != 1) throw std::logic_error("parameter identity sum(beta)+sum(gamma)+xi != 1");

    // Chained bijections and the per-alpha partitions.
    SpanningTree target;
    target.edge_ids = out.tree;
    const auto chain = chain_exchange_bijections(instance, out.alphas, target);
    for (std::size_t i = 0; i < chain.size(); ++i) {
        AlphaPartition part;
        part.alpha = out.alphas[i];
        for (const auto& [src, dst] : chain[i].mapping) {
            const bool src_safe = g.edge(src).safe();
            const bool to_cut = out.cut_edges.count(dst) > 0;
            if (src_safe && to_cut)
                part.o_safe_to_cut.insert(src);
            else if (src_safe)
                part.s_safe_to_tree.insert(src);
            else if (to_cut)
                part.d_unsafe_to_cut.insert(src);
            else
                part.f_unsafe_to_tree.insert(src);
        }
        out.partitions.push_back(std::move(part));
    }
    // Two-factor scalars from the partition at the largest alpha.
    const AlphaPartition& last = out.partitions.back();
    const ExchangeBijection& phi = chain.back();
    Rational w_o_images = 0, w_s_images = 0;
    for (int src : last.o_safe_to_cut) w_o_images += g.edge(phi.mapping.at(src)).weight;
    for (int src : last.s_safe_to_tree) w_s_images += g.edge(phi.mapping.at(src)).weight;
    out.b_alpha = w_o_images / opt;
    out.c_alpha = w_s_images / opt;
    out.b0 = out.delta - out.b_alpha;
    out.c0 = (g.weight_of(out.tree) - g.weight_of(out.cut_edges)) / opt - out.c_alpha;
    return out;
}

namespace {

struct AlgoCache {
    const FgcInstance& instance;
    const Methods& methods;
    std::map<Rational, Rational> b, c;
    std::optional<Rational> a;

    Rational weight_a() {
        if (!a) a = algorithm_a(instance, methods).weight;
        return *a;
    }
    Rational weight_b(const Rational& alpha) {
        auto it = b.find(alpha);
        if (it == b.end()) it = b.emplace(alpha, algorithm_b(instance, alpha, methods).weight).first;
        return it->second;
    }
    Rational weight_c(const Rational& alpha) {
        auto it = c.find(alpha);
        if (it == c.end()) it = c.emplace(alpha, algorithm_c(instance, alpha, methods).weight).first;
        return it->second;
    }
};

LemmaCheck make_check(std::string name, Rational actual, bool finite, Rational bound) {
    LemmaCheck c;
    c.name = std::move(name);
    c.actual = std::move(actual);
    c.bound_finite = finite;
    if (finite) {
        c.bound = bound;
        c.slack = bound - c.actual;
        c.holds = c.actual <= bound;
    }
    return c;
}

}  // namespace

LemmaReport verify_lemma_bounds(const FgcInstance& instance, const Solution& optimal,
                                const Methods& methods, const Rational& lambda,
                                const Rational& tau,
                                const std::optional<std::vector<Rational>>& alphas) {
    const LabeledMultigraph& g = instance.graph();
    LemmaReport report;
    if (optimal.weight == 0) {
        report.applicable = false;
        return report;
    }
    const Rational opt = optimal.weight;
    const EdgeSet cut_edges = bridges(g, optimal.edge_ids);
    EdgeSet component_edges = optimal.edge_ids;
    for (int id : cut_edges) component_edges.erase(id);

    std::map<int, DetThreshold> thresholds;
    for (int id = 0; id < g.edge_count(); ++id)
        thresholds[id] = deterministic_threshold(instance, id);
    std::set<Rational> distinct;
    for (const auto& [id, t] : thresholds) {
        if (t.kind == DetThreshold::Kind::Value) distinct.insert(t.value);
    }
    std::vector<Rational> stages(distinct.begin(), distinct.end());
    if (alphas) {
        stages = *alphas;
        std::sort(stages.begin(), stages.end());
        stages.erase(std::unique(stages.begin(), stages.end()), stages.end());
    }
    if (stages.empty()) stages.push_back(Rational(1));

    SpanningTree target;
    target.edge_ids = tree_inside(instance, optimal.edge_ids, thresholds);
    const auto chain = chain_exchange_bijections(instance, stages, target);
    AlgoCache cache{instance, methods, {}, {}, {}};

    // Constructive bounds: exactly the inequalities the charging proofs set up,
    // with the witness sets built from the actual chain. A cut edge whose chain
    // preimage is itself (or fails to cross its bridge cut) is covered by its
    // unsafe parallel twin instead, the same device the degenerate case of the
    // charging argument uses.
    auto cut_cover = [&](int cut_edge, int pre) -> int {
        UnionFind uf(g.vertex_count());
        for (int id : optimal.edge_ids) {
            if (id != cut_edge) uf.unite(g.edge(id).u, g.edge(id).v);
        }
        auto crosses = [&](int cand) {
            return !uf.connected(g.edge(cand).u, g.edge(cand).v);
        };
        if (pre != cut_edge && crosses(pre)) return pre;
        const Edge& ce = g.edge(cut_edge);
        int best = -1;
        for (const Edge& f : g.edges()) {
            if (f.safe() || f.id == cut_edge) continue;
            const bool parallel = (f.u == ce.u && f.v == ce.v) || (f.u == ce.v && f.v == ce.u);
            if (parallel && f.weight == ce.weight) return f.id;
            if (crosses(f.id) && (best < 0 || f.weight < g.edge(best).weight)) best = f.id;
        }
        if (best < 0) throw std::logic_error("no unsafe edge covers a cut edge of the optimum");
        return best;
    };
    const int N = static_cast<int>(stages.size());
    for (int i = 0; i < N; ++i) {
        const ExchangeBijection& phi = chain[static_cast<std::size_t>(i)];
        EdgeSet safe_sources;
        EdgeSet hit_cut;  // E' edges that are images of safe sources
        std::map<int, int> preimage;
        for (const auto& [src, dst] : phi.mapping) {
            preimage[dst] = src;
            if (g.edge(src).safe()) {
                safe_sources.insert(src);
                if (cut_edges.count(dst)) hit_cut.insert(dst);
            }
        }
        Rational w_safe_tree = g.weight_of(safe_sources);
        EdgeSet y_c = component_edges;
        EdgeSet y_b = component_edges;
        for (int e : cut_edges) {
            if (hit_cut.count(e)) continue;
            y_c.insert(e);
            y_c.insert(cut_cover(e, preimage.at(e)));
            y_b.insert(e);
        }
        report.checks.push_back(make_check("C" + std::to_string(i + 1),
                                           cache.weight_c(stages[static_cast<std::size_t>(i)]), true,
                                           w_safe_tree + lambda * g.weight_of(y_c)));
        report.checks.push_back(make_check("B" + std::to_string(i + 1),
                                           cache.weight_b(stages[static_cast<std::size_t>(i)]), true,
                                           g.weight_of(phi.source) + tau * g.weight_of(y_b)));
    }
    {
        const ExchangeBijection& last = chain.back();
        std::map<int, int> preimage;
        for (const auto& [src, dst] : last.mapping) preimage[dst] = src;
        EdgeSet y_a = optimal.edge_ids;
        for (int e : cut_edges) y_a.insert(cut_cover(e, preimage.at(e)));
        report.checks.push_back(make_check("A", cache.weight_a(), true, lambda * g.weight_of(y_a)));
    }

    // Printed parametrized forms, on instances where their bucket premise holds:
    // every tree edge has a threshold value, every chained safe source matches
    // the bucket window, and every unhit cut edge sits strictly below its stage.
    bool premise = true;
    for (int id : target.edge_ids) {
        if (thresholds.at(id).kind != DetThreshold::Kind::Value) premise = false;
    }
    auto stage_index = [&](const Rational& v) {
        int idx = -1;
        for (std::size_t j = 0; j < stages.size(); ++j) {
            if (stages[j] <= v) idx = static_cast<int>(j);
        }
        return idx;
    };
    if (premise) {
        for (int i = 0; i < N && premise; ++i) {
            const ExchangeBijection& phi = chain[static_cast<std::size_t>(i)];
            std::set<int> hit;
            for (const auto& [src, dst] : phi.mapping) {
                if (!g.edge(src).safe()) continue;
                hit.insert(dst);
                if (!cut_edges.count(dst)) {
                    // gamma window: the image bucket must not fall below the stage
                    if (stage_index(thresholds.at(dst).value) < i) premise = false;
                }
            }
            for (int e : cut_edges) {
                if (!hit.count(e) && stage_index(thresholds.at(e).value) >= i && i > 0)
                    premise = false;  // beta window of the printed form
            }
        }
    }
    report.parametrized_applicable = premise;
    if (premise) {
        AnalysisParameters point = extract_parameters(instance, optimal, stages);
        const int n_point = static_cast<int>(point.alphas.size());
        Rational gamma_sum = 0;
        for (const Rational& gj : point.gamma) gamma_sum += gj;
        {
            Rational rhs = lambda;
            for (int j = 0; j < n_point; ++j)
                rhs += lambda * point.alphas[static_cast<std::size_t>(j)] *
                       point.beta[static_cast<std::size_t>(j)];
            report.checks.push_back(make_check("A*", cache.weight_a(), true, rhs * opt));
        }
        for (int i = 0; i < n_point; ++i) {
            const Rational actual = cache.weight_c(point.alphas[static_cast<std::size_t>(i)]);
            bool finite = true;
            Rational rhs = 1;
            for (int j = 0; j < i; ++j)
                rhs += (lambda - 1 + lambda * point.alphas[static_cast<std::size_t>(j)]) *
                       point.beta[static_cast<std::size_t>(j)];
            rhs += (lambda - 1) * gamma_sum + (lambda - 1) * point.xi;
            for (int j = i; j < n_point; ++j) {
                if (point.alphas[static_cast<std::size_t>(j)] == 0) {
                    if (point.gamma_count[static_cast<std::size_t>(j)] > 0) finite = false;
                } else {
                    rhs += point.gamma[static_cast<std::size_t>(j)] /
                           point.alphas[static_cast<std::size_t>(j)];
                }
            }
            report.checks.push_back(
                make_check("C*" + std::to_string(i + 1), actual, finite, rhs * opt));
        }
    }
    return report;
}

}  // namespace fgc
