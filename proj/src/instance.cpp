#include "fgc/instance.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

namespace fgc {

namespace {

EdgeSet all_edges(const LabeledMultigraph& g) {
    EdgeSet ids;
    for (int i = 0; i < g.edge_count(); ++i) ids.insert(i);
    return ids;
}

bool feasible_edge_set(const LabeledMultigraph& g, int k, const EdgeSet& ids) {
    if (!is_connected_subgraph(g, ids)) return false;
    if (k == 1) {
        for (int b : bridges(g, ids)) {
            if (!g.edge(b).safe()) return false;
        }
        return true;
    }
    EdgeSet safe_ids;
    for (int id : ids) {
        if (g.edge(id).safe()) safe_ids.insert(id);
    }
    auto [contracted, map] = contract(g, safe_ids);
    if (contracted.vertex_count() <= 1) return true;
    EdgeSet surv;
    for (int i = 0; i < contracted.edge_count(); ++i) {
        if (ids.count(map.original_ids[static_cast<std::size_t>(i)])) surv.insert(i);
    }
    return edge_connectivity(contracted, surv) >= k + 1;
}

}  // namespace

FgcInstance::FgcInstance(LabeledMultigraph graph, int robustness_k)
    : graph_(std::move(graph)), k_(robustness_k) {
    if (k_ < 1) throw InvalidParameters("robustness k must be positive");
    if (graph_.vertex_count() < 1) throw InstanceError("empty vertex set");
    const EdgeSet everything = all_edges(graph_);
    if (!is_connected_subgraph(graph_, everything)) throw InstanceError("graph is not connected");
    if (!feasible_edge_set(graph_, k_, everything)) {
        std::ostringstream msg;
        msg << "instance is infeasible even with all edges";
        if (k_ == 1) {
            for (int b : bridges(graph_, everything)) {
                if (!graph_.edge(b).safe()) {
                    msg << ": unsafe bridge " << b << " (" << graph_.edge(b).u << "-"
                        << graph_.edge(b).v << ")";
                    break;
                }
            }
        }
        throw InstanceError(msg.str());
    }
}

std::pair<FgcInstance, std::map<int, int>> augment_parallel_unsafe(const FgcInstance& instance) {
    const LabeledMultigraph& g = instance.graph();
    LabeledMultigraph out(g.vertex_count());
    for (const Edge& e : g.edges()) out.add_edge(e.u, e.v, e.weight, e.safety);
    std::map<int, int> twin_to_source;
    for (const Edge& e : g.edges()) {
        if (!e.safe()) continue;
        bool has_twin = false;
        for (const Edge& f : g.edges()) {
            if (!f.safe() && f.weight == e.weight &&
                ((f.u == e.u && f.v == e.v) || (f.u == e.v && f.v == e.u))) {
                has_twin = true;
                break;
            }
        }
        if (!has_twin) {
            const int id = out.add_edge(e.u, e.v, e.weight, Safety::Unsafe);
            twin_to_source[id] = e.id;
        }
    }
    return {FgcInstance(std::move(out), instance.k()), std::move(twin_to_source)};
}

bool is_feasible(const FgcInstance& instance, const Solution& solution) {
    return feasible_edge_set(instance.graph(), instance.k(), solution.edge_ids);
}

std::optional<InfeasibilityWitness> explain_infeasible(const FgcInstance& instance,
                                                       const Solution& solution) {
    const LabeledMultigraph& g = instance.graph();
    const EdgeSet& ids = solution.edge_ids;
    InfeasibilityWitness w;
    if (!is_connected_subgraph(g, ids)) {
        w.disconnected = true;
        UnionFind uf(g.vertex_count());
        for (int id : ids) uf.unite(g.edge(id).u, g.edge(id).v);
        const int root = uf.find(0);
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (uf.find(v) == root) w.cut_side.push_back(v);
        }
        return w;
    }
    // Search unsafe failure sets of size <= k. Desk scale keeps this cheap for the
    // k values in scope (1 or 2).
    std::vector<int> unsafe_ids;
    for (int id : ids) {
        if (!g.edge(id).safe()) unsafe_ids.push_back(id);
    }
    std::vector<int> pick;
    std::optional<InfeasibilityWitness> found;
    auto record = [&](const std::vector<int>& removed) {
        EdgeSet rest = ids;
        for (int id : removed) rest.erase(id);
        if (is_connected_subgraph(g, rest)) return false;
        InfeasibilityWitness got;
        got.failing_unsafe.insert(removed.begin(), removed.end());
        UnionFind uf(g.vertex_count());
        for (int id : rest) uf.unite(g.edge(id).u, g.edge(id).v);
        const int root = uf.find(0);
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (uf.find(v) == root) got.cut_side.push_back(v);
        }
        found = got;
        return true;
    };
    std::function<bool(std::size_t, int)> rec = [&](std::size_t start, int left) {
        if (!pick.empty() && record(pick)) return true;
        if (left == 0) return false;
        for (std::size_t i = start; i < unsafe_ids.size(); ++i) {
            pick.push_back(unsafe_ids[i]);
            if (rec(i + 1, left - 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    rec(0, instance.k());
    return found;
}

SolutionDecomposition decompose(const FgcInstance& instance, const Solution& solution) {
    if (!is_feasible(instance, solution)) throw InfeasibleSolution("solution is not feasible");
    const LabeledMultigraph& g = instance.graph();
    SolutionDecomposition d;
    d.cut_safe_edges = bridges(g, solution.edge_ids);
    EdgeSet rest = solution.edge_ids;
    for (int b : d.cut_safe_edges) rest.erase(b);
    UnionFind uf(g.vertex_count());
    for (int id : rest) uf.unite(g.edge(id).u, g.edge(id).v);
    std::map<int, int> comp_index;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const int r = uf.find(v);
        auto [it, fresh] = comp_index.insert({r, static_cast<int>(d.components.size())});
        if (fresh) d.components.push_back({});
        d.components[static_cast<std::size_t>(it->second)].push_back(v);
    }
    const Rational total = solution.weight;
    d.delta = 0;
    if (total > 0) d.delta = g.weight_of(d.cut_safe_edges) / total;
    return d;
}

// ---------------------------------------------------------------------------
// Generators. splitmix64 with rejection sampling keeps output pinned per seed
// across platforms.
namespace {

struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // Uniform integer in [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = ~0ULL - (~0ULL % bound);
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }
    int int_in(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
    // Bernoulli with exact rational probability p.
    bool chance(const Rational& p) {
        if (p <= 0) return false;
        if (p >= 1) return true;
        const BigInt num = numerator(p), den = denominator(p);
        // den fits in u64 for the fractions used by generators.
        const std::uint64_t d = den.convert_to<std::uint64_t>();
        const std::uint64_t n = num.convert_to<std::uint64_t>();
        return below(d) < n;
    }
};

std::vector<std::pair<int, int>> random_tree(SplitMix64& rng, int n) {
    std::vector<int> verts(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) verts[static_cast<std::size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i) std::swap(verts[static_cast<std::size_t>(i)],
                                              verts[static_cast<std::size_t>(rng.int_in(0, i))]);
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i < n; ++i) {
        const int u = verts[static_cast<std::size_t>(i)];
        const int v = verts[static_cast<std::size_t>(rng.int_in(0, i - 1))];
        out.push_back({u, v});
    }
    return out;
}

std::pair<int, int> random_non_loop_pair(SplitMix64& rng, int n) {
    int u = rng.int_in(0, n - 1);
    int v = rng.int_in(0, n - 2);
    if (v >= u) ++v;
    return {u, v};
}

}  // namespace

FgcInstance generate_instance(InstanceKind kind, int n, int m, int weight_bound,
                              const Rational& safe_fraction, std::uint64_t seed) {
    if (n < 2 || m < n - 1 || weight_bound < 1 || safe_fraction < 0 || safe_fraction > 1)
        throw InvalidParameters("generate_instance: bad parameters");
    SplitMix64 rng(seed);
    LabeledMultigraph g(n);
    auto rand_weight = [&]() { return Rational(rng.int_in(1, weight_bound)); };

    switch (kind) {
        case InstanceKind::Random:
        case InstanceKind::MstCase: {
            const bool all_safe = kind == InstanceKind::MstCase;
            for (auto [u, v] : random_tree(rng, n)) {
                const Safety s = (all_safe || rng.chance(safe_fraction)) ? Safety::Safe : Safety::Unsafe;
                g.add_edge(u, v, rand_weight(), s);
            }
            while (g.edge_count() < m) {
                auto [u, v] = random_non_loop_pair(rng, n);
                const Safety s = (all_safe || rng.chance(safe_fraction)) ? Safety::Safe : Safety::Unsafe;
                g.add_edge(u, v, rand_weight(), s);
            }
            if (!all_safe) {
                // Unsafe bridges would make the instance unloadable; relabel them safe.
                EdgeSet everything;
                for (int i = 0; i < g.edge_count(); ++i) everything.insert(i);
                LabeledMultigraph fixed(n);
                const EdgeSet cut = bridges(g, everything);
                for (const Edge& e : g.edges()) {
                    const Safety s = cut.count(e.id) ? Safety::Safe : e.safety;
                    fixed.add_edge(e.u, e.v, e.weight, s);
                }
                g = std::move(fixed);
            }
            break;
        }
        case InstanceKind::TwoEcssCase: {
            if (m < n) throw InvalidParameters("2-ECSS case needs m >= n");
            std::vector<int> cycle(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) cycle[static_cast<std::size_t>(i)] = i;
            for (int i = n - 1; i > 0; --i) std::swap(cycle[static_cast<std::size_t>(i)],
                                                      cycle[static_cast<std::size_t>(rng.int_in(0, i))]);
            for (int i = 0; i < n; ++i)
                g.add_edge(cycle[static_cast<std::size_t>(i)],
                           cycle[static_cast<std::size_t>((i + 1) % n)], rand_weight(), Safety::Unsafe);
            while (g.edge_count() < m) {
                auto [u, v] = random_non_loop_pair(rng, n);
                g.add_edge(u, v, rand_weight(), Safety::Unsafe);
            }
            break;
        }
        case InstanceKind::WtapCase: {
            const auto tree = random_tree(rng, n);
            for (auto [u, v] : tree) g.add_edge(u, v, Rational(0), Safety::Unsafe);
            // Cover every tree edge by a random crossing link so no unsafe bridge
            // remains, then fill with fully random links up to m.
            EdgeSet tree_ids;
            for (int i = 0; i < n - 1; ++i) tree_ids.insert(i);
            for (int t = 0; t < n - 1; ++t) {
                EdgeSet current;
                for (int i = 0; i < g.edge_count(); ++i) current.insert(i);
                if (!bridges(g, current).count(t)) continue;
                EdgeSet rest = tree_ids;
                rest.erase(t);
                UnionFind uf(n);
                for (int id : rest) uf.unite(g.edge(id).u, g.edge(id).v);
                std::vector<int> side_a, side_b;
                const int ra = uf.find(g.edge(t).u);
                for (int v = 0; v < n; ++v) (uf.find(v) == ra ? side_a : side_b).push_back(v);
                const int u = side_a[static_cast<std::size_t>(rng.int_in(0, static_cast<int>(side_a.size()) - 1))];
                const int v = side_b[static_cast<std::size_t>(rng.int_in(0, static_cast<int>(side_b.size()) - 1))];
                const Safety s = rng.chance(safe_fraction) ? Safety::Safe : Safety::Unsafe;
                g.add_edge(u, v, rand_weight(), s);
            }
            while (g.edge_count() < m) {
                auto [u, v] = random_non_loop_pair(rng, n);
                const Safety s = rng.chance(safe_fraction) ? Safety::Safe : Safety::Unsafe;
                g.add_edge(u, v, rand_weight(), s);
            }
            break;
        }
    }
    return FgcInstance(std::move(g), 1);
}

// ---------------------------------------------------------------------------
// Text format.

FgcInstance parse_instance(std::istream& in) {
    std::string line;
    int n = -1, m = -1, k = -1;
    LabeledMultigraph g;
    int seen = 0;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream row(line);
        if (n < 0) {
            std::string tag;
            row >> tag >> n >> m >> k;
            if (!row || tag != "fgc" || n < 1 || m < 0 || k < 1)
                throw ParseError("malformed header line: " + line);
            g = LabeledMultigraph(n);
            continue;
        }
        int u, v;
        std::string w_text, s_text;
        row >> u >> v >> w_text >> s_text;
        if (!row || (s_text != "S" && s_text != "U"))
            throw ParseError("malformed edge line: " + line);
        const auto w = parse_rational(w_text);
        if (!w || *w < 0) throw ParseError("bad weight: " + w_text);
        g.add_edge(u, v, *w, s_text == "S" ? Safety::Safe : Safety::Unsafe);
        ++seen;
    }
    if (n < 0) throw ParseError("missing header line");
    if (seen != m) throw ParseError("edge count mismatch with header");
    return FgcInstance(std::move(g), k);
}

FgcInstance parse_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open instance file: " + path);
    return parse_instance(in);
}

std::string serialize_instance(const FgcInstance& instance) {
    const LabeledMultigraph& g = instance.graph();
    std::ostringstream out;
    out << "fgc " << g.vertex_count() << ' ' << g.edge_count() << ' ' << instance.k() << '\n';
    for (const Edge& e : g.edges()) {
        out << e.u << ' ' << e.v << ' ' << format_rational(e.weight) << ' '
            << (e.safe() ? 'S' : 'U') << '\n';
    }
    return out.str();
}

EdgeSet parse_solution(std::istream& in) {
    EdgeSet ids;
    int id;
    while (in >> id) {
        if (id < 0) throw ParseError("negative edge id in solution");
        ids.insert(id);
    }
    return ids;
}

EdgeSet parse_solution_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open solution file: " + path);
    return parse_solution(in);
}

std::string serialize_solution(const EdgeSet& ids) {
    std::ostringstream out;
    bool first = true;
    for (int id : ids) {
        if (!first) out << ' ';
        out << id;
        first = false;
    }
    out << '\n';
    return out.str();
}

}  // namespace fgc
