#include "fgc/subroutines.hpp"

#include <algorithm>

namespace fgc {

// ---------------------------------------------------------------------------
// Edmonds' algorithm, recursive contraction form.

namespace {

struct LocalArc {
    int from;
    int to;
    Rational cost;
    int label;
    int parent;  // index into the caller's arc list (identity at the top level)
};

bool better_in(const LocalArc& a, const LocalArc& b) {
    if (a.cost != b.cost) return a.cost < b.cost;
    if (a.label != b.label) return a.label < b.label;
    return false;
}

std::vector<int> solve_arborescence(int n, int root, const std::vector<LocalArc>& arcs) {
    std::vector<int> best_in(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        const LocalArc& a = arcs[i];
        if (a.to == root || a.from == a.to) continue;
        int& cur = best_in[static_cast<std::size_t>(a.to)];
        if (cur < 0 || better_in(a, arcs[static_cast<std::size_t>(cur)])) cur = static_cast<int>(i);
    }
    for (int v = 0; v < n; ++v) {
        if (v != root && best_in[static_cast<std::size_t>(v)] < 0)
            throw GraphError("no arborescence: vertex unreachable");
    }
    // Cycle detection in the functional graph v -> from(best_in[v]).
    std::vector<int> color(static_cast<std::size_t>(n), 0), cycle_id(static_cast<std::size_t>(n), -1);
    int cycles = 0;
    for (int v = 0; v < n; ++v) {
        if (color[static_cast<std::size_t>(v)] != 0) continue;
        std::vector<int> path;
        int x = v;
        while (x != root && color[static_cast<std::size_t>(x)] == 0) {
            color[static_cast<std::size_t>(x)] = 1;
            path.push_back(x);
            x = arcs[static_cast<std::size_t>(best_in[static_cast<std::size_t>(x)])].from;
        }
        if (x != root && color[static_cast<std::size_t>(x)] == 1) {
            // walked into a fresh cycle
            const int entry = x;
            int y = entry;
            do {
                cycle_id[static_cast<std::size_t>(y)] = cycles;
                y = arcs[static_cast<std::size_t>(best_in[static_cast<std::size_t>(y)])].from;
            } while (y != entry);
            ++cycles;
        }
        for (int p : path) color[static_cast<std::size_t>(p)] = 2;
    }
    if (cycles == 0) {
        std::vector<int> chosen;
        for (int v = 0; v < n; ++v) {
            if (v != root) chosen.push_back(best_in[static_cast<std::size_t>(v)]);
        }
        return chosen;
    }
    // Contract cycles.
    std::vector<int> node_id(static_cast<std::size_t>(n), -1);
    int next = cycles;  // cycle c -> id c, everything else after
    for (int v = 0; v < n; ++v) {
        if (cycle_id[static_cast<std::size_t>(v)] >= 0)
            node_id[static_cast<std::size_t>(v)] = cycle_id[static_cast<std::size_t>(v)];
        else
            node_id[static_cast<std::size_t>(v)] = next++;
    }
    std::vector<LocalArc> sub;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        const LocalArc& a = arcs[i];
        const int nu = node_id[static_cast<std::size_t>(a.from)];
        const int nv = node_id[static_cast<std::size_t>(a.to)];
        if (nu == nv) continue;
        Rational cost = a.cost;
        if (cycle_id[static_cast<std::size_t>(a.to)] >= 0)
            cost -= arcs[static_cast<std::size_t>(best_in[static_cast<std::size_t>(a.to)])].cost;
        sub.push_back(LocalArc{nu, nv, std::move(cost), a.label, static_cast<int>(i)});
    }
    const std::vector<int> sub_res =
        solve_arborescence(next, node_id[static_cast<std::size_t>(root)], sub);
    std::vector<int> chosen;
    std::vector<int> cycle_entry_head(static_cast<std::size_t>(cycles), -1);
    for (int si : sub_res) {
        const int ai = sub[static_cast<std::size_t>(si)].parent;
        chosen.push_back(ai);
        const int head = arcs[static_cast<std::size_t>(ai)].to;
        if (cycle_id[static_cast<std::size_t>(head)] >= 0)
            cycle_entry_head[static_cast<std::size_t>(cycle_id[static_cast<std::size_t>(head)])] = head;
    }
    for (int v = 0; v < n; ++v) {
        const int c = cycle_id[static_cast<std::size_t>(v)];
        if (c >= 0 && cycle_entry_head[static_cast<std::size_t>(c)] != v)
            chosen.push_back(best_in[static_cast<std::size_t>(v)]);
    }
    return chosen;
}

}  // namespace

std::vector<int> min_cost_arborescence(int n, int root, const std::vector<Arc>& arcs) {
    std::vector<LocalArc> local;
    local.reserve(arcs.size());
    for (std::size_t i = 0; i < arcs.size(); ++i)
        local.push_back(LocalArc{arcs[i].from, arcs[i].to, arcs[i].cost, arcs[i].label,
                                 static_cast<int>(i)});
    return solve_arborescence(n, root, local);
}

// ---------------------------------------------------------------------------
// 2-ECSS methods.

namespace {

EdgeSet full_edge_set(const LabeledMultigraph& g) {
    EdgeSet ids;
    for (int i = 0; i < g.edge_count(); ++i) ids.insert(i);
    return ids;
}

// Primal-dual cover of the given cut sides (an uncrossable family): uniform
// dual raises on inclusion-minimal violated sides, one tight link added per
// round, reverse delete at the end. Factor 2 against the optimal cover.
std::vector<int> primal_dual_cover(const LabeledMultigraph& g,
                                   const std::vector<std::vector<char>>& sides,
                                   const std::vector<int>& links) {
    auto crosses = [&](int link, const std::vector<char>& side) {
        return side[static_cast<std::size_t>(g.edge(link).u)] !=
               side[static_cast<std::size_t>(g.edge(link).v)];
    };
    std::map<int, Rational> slack;
    for (int l : links) slack[l] = g.edge(l).weight;
    std::vector<int> chosen;
    auto uncovered = [&]() {
        std::vector<std::size_t> out;
        for (std::size_t s = 0; s < sides.size(); ++s) {
            bool cov = false;
            for (int l : chosen) {
                if (crosses(l, sides[s])) { cov = true; break; }
            }
            if (!cov) out.push_back(s);
        }
        return out;
    };
    while (true) {
        const auto open = uncovered();
        if (open.empty()) break;
        // minimal violated sets among both sides of each uncovered cut
        std::vector<std::vector<int>> candidates;
        for (std::size_t s : open) {
            for (char which : {char(0), char(1)}) {
                std::vector<int> set;
                for (int v = 0; v < g.vertex_count(); ++v) {
                    if (sides[s][static_cast<std::size_t>(v)] == which) set.push_back(v);
                }
                candidates.push_back(std::move(set));
            }
        }
        std::vector<std::vector<int>> active;
        for (const auto& c : candidates) {
            bool minimal = true;
            for (const auto& o : candidates) {
                if (o.size() < c.size() && std::includes(c.begin(), c.end(), o.begin(), o.end())) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) active.push_back(c);
        }
        int tight = -1;
        Rational best_delta;
        std::map<int, int> crossing_count;
        for (int l : links) {
            if (std::find(chosen.begin(), chosen.end(), l) != chosen.end()) continue;
            int cnt = 0;
            for (const auto& set : active) {
                const bool iu = std::binary_search(set.begin(), set.end(), g.edge(l).u);
                const bool iv = std::binary_search(set.begin(), set.end(), g.edge(l).v);
                if (iu != iv) ++cnt;
            }
            if (cnt == 0) continue;
            crossing_count[l] = cnt;
            const Rational delta = slack[l] / cnt;
            if (tight < 0 || delta < best_delta || (delta == best_delta && l < tight)) {
                tight = l;
                best_delta = delta;
            }
        }
        if (tight < 0) throw NoFeasibleAugmentation();
        for (auto& [l, cnt] : crossing_count) slack[l] -= best_delta * cnt;
        chosen.push_back(tight);
    }
    // reverse delete, one pass in reverse addition order
    for (int pos = static_cast<int>(chosen.size()) - 1; pos >= 0; --pos) {
        bool still_ok = true;
        for (const auto& side : sides) {
            bool cov = false;
            for (std::size_t q = 0; q < chosen.size() && !cov; ++q) {
                if (static_cast<int>(q) != pos && crosses(chosen[q], side)) cov = true;
            }
            if (!cov) { still_ok = false; break; }
        }
        if (still_ok) chosen.erase(chosen.begin() + pos);
    }
    return chosen;
}

std::vector<char> cut_sides_of(const LabeledMultigraph& g, const EdgeSet& subgraph, int cut_edge) {
    UnionFind uf(g.vertex_count());
    for (int id : subgraph) {
        if (id != cut_edge) uf.unite(g.edge(id).u, g.edge(id).v);
    }
    std::vector<char> side(static_cast<std::size_t>(g.vertex_count()), 0);
    const int ra = uf.find(g.edge(cut_edge).u);
    for (int v = 0; v < g.vertex_count(); ++v)
        side[static_cast<std::size_t>(v)] = uf.find(v) == ra ? 0 : 1;
    return side;
}

// Kill every bridge of `chosen` by a primal-dual cover of the bridge cuts.
void repair_bridges(const LabeledMultigraph& g, EdgeSet& chosen) {
    const EdgeSet cut = bridges(g, chosen);
    if (cut.empty()) return;
    std::vector<std::vector<char>> sides;
    for (int b : cut) sides.push_back(cut_sides_of(g, chosen, b));
    std::vector<int> links;
    for (int i = 0; i < g.edge_count(); ++i) {
        if (!chosen.count(i)) links.push_back(i);
    }
    for (int l : primal_dual_cover(g, sides, links)) chosen.insert(l);
    if (!bridges(g, chosen).empty()) throw NotTwoEdgeConnected();
}

bool two_edge_connected(const LabeledMultigraph& g, const EdgeSet& ids) {
    return is_connected_subgraph(g, ids) && bridges(g, ids).empty();
}

}  // namespace

EdgeSet two_ecss_approx(const LabeledMultigraph& g, TwoEcssMethod method) {
    if (g.vertex_count() <= 1) return {};
    if (!two_edge_connected(g, full_edge_set(g))) throw NotTwoEdgeConnected();
    switch (method) {
        case TwoEcssMethod::Exact:
            return exact_two_ecss(g).first;
        case TwoEcssMethod::MstPlusAug: {
            EdgeSet chosen = minimum_spanning_tree(g).edge_ids;
            repair_bridges(g, chosen);
            return chosen;
        }
        case TwoEcssMethod::Arborescence2x: {
            std::vector<Arc> fwd, rev;
            for (const Edge& e : g.edges()) {
                fwd.push_back(Arc{e.u, e.v, e.weight, e.id});
                fwd.push_back(Arc{e.v, e.u, e.weight, e.id});
                rev.push_back(Arc{e.v, e.u, e.weight, e.id});
                rev.push_back(Arc{e.u, e.v, e.weight, e.id});
            }
            EdgeSet chosen;
            for (int ai : min_cost_arborescence(g.vertex_count(), 0, fwd))
                chosen.insert(fwd[static_cast<std::size_t>(ai)].label);
            for (int ai : min_cost_arborescence(g.vertex_count(), 0, rev))
                chosen.insert(rev[static_cast<std::size_t>(ai)].label);
            // An edge used by both passes in opposite directions can survive as a
            // bridge of the union; cover the remaining bridge cuts.
            repair_bridges(g, chosen);
            return chosen;
        }
    }
    throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// WTAP primal-dual on the tree-cut family.

EdgeSet wtap_approx(const LabeledMultigraph& g, const EdgeSet& tree, WtapMethod method) {
    if (method == WtapMethod::Exact) return exact_wtap(g, tree).first;
    std::vector<std::vector<char>> sides;
    for (int t : tree) sides.push_back(cut_sides_of(g, tree, t));
    std::vector<int> links;
    for (int i = 0; i < g.edge_count(); ++i) {
        if (!tree.count(i)) links.push_back(i);
    }
    const auto chosen = primal_dual_cover(g, sides, links);
    return EdgeSet(chosen.begin(), chosen.end());
}

// ---------------------------------------------------------------------------
// Brute-force oracles: subset enumeration in increasing popcount order with
// weight pruning and lexicographically-smallest tie resolution.

namespace {

template <class Feasible>
std::pair<EdgeSet, Rational> enumerate_min(const LabeledMultigraph& g, int budget,
                                           int min_size, Feasible feasible,
                                           const char* what) {
    const int m = g.edge_count();
    if (m > budget || m > 25) throw TooLarge(std::string(what) + ": edge count exceeds budget");
    std::optional<Rational> best;
    EdgeSet best_set;
    std::vector<int> ids;
    auto consider = [&](std::uint32_t mask) {
        Rational w = 0;
        ids.clear();
        for (int i = 0; i < m; ++i) {
            if (mask >> i & 1u) {
                w += g.edge(i).weight;
                ids.push_back(i);
            }
        }
        if (best && w > *best) return;
        EdgeSet s(ids.begin(), ids.end());
        if (best && w == *best && !std::lexicographical_compare(ids.begin(), ids.end(),
                                                                best_set.begin(), best_set.end()))
            return;
        if (!feasible(s)) return;
        best = w;
        best_set = std::move(s);
    };
    if (min_size == 0) consider(0);
    for (int size = std::max(1, min_size); size <= m; ++size) {
        std::uint32_t mask = (1u << size) - 1u;
        const std::uint32_t limit = 1u << m;
        while (mask < limit) {
            consider(mask);
            const std::uint32_t c = mask & (~mask + 1u);
            const std::uint32_t r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }
    if (!best) throw Infeasible(std::string(what) + ": no feasible subset");
    return {best_set, *best};
}

}  // namespace

std::pair<Solution, Rational> exact_fgc(const FgcInstance& instance, int budget) {
    const LabeledMultigraph& g = instance.graph();
    auto [set, w] = enumerate_min(
        g, budget, g.vertex_count() - 1,
        [&](const EdgeSet& s) {
            return is_feasible(instance, Solution{s, Rational(0)});
        },
        "exact_fgc");
    Solution sol{set, w};
    return {std::move(sol), std::move(w)};
}

std::pair<EdgeSet, Rational> exact_two_ecss(const LabeledMultigraph& g, int budget) {
    const int need = g.vertex_count() <= 1 ? 0 : g.vertex_count();
    return enumerate_min(
        g, budget, need, [&](const EdgeSet& s) { return two_edge_connected(g, s); },
        "exact_two_ecss");
}

std::pair<EdgeSet, Rational> exact_wtap(const LabeledMultigraph& g, const EdgeSet& tree,
                                        int budget) {
    std::vector<int> links;
    for (int i = 0; i < g.edge_count(); ++i) {
        if (!tree.count(i)) links.push_back(i);
    }
    const int L = static_cast<int>(links.size());
    if (L > budget || L > 25) throw TooLarge("exact_wtap: link count exceeds budget");
    std::optional<Rational> best;
    EdgeSet best_set;
    for (std::uint32_t mask = 0; mask < (1u << L); ++mask) {
        Rational w = 0;
        EdgeSet s = tree;
        for (int i = 0; i < L; ++i) {
            if (mask >> i & 1u) {
                s.insert(links[static_cast<std::size_t>(i)]);
                w += g.edge(links[static_cast<std::size_t>(i)]).weight;
            }
        }
        if (best && (w > *best)) continue;
        const EdgeSet cut = bridges(g, s);
        bool ok = is_connected_subgraph(g, s);
        for (int t : tree) {
            if (!ok) break;
            if (cut.count(t)) ok = false;
        }
        if (!ok) continue;
        EdgeSet chosen;
        for (int i = 0; i < L; ++i) {
            if (mask >> i & 1u) chosen.insert(links[static_cast<std::size_t>(i)]);
        }
        if (!best || w < *best ||
            (w == *best && std::lexicographical_compare(chosen.begin(), chosen.end(),
                                                        best_set.begin(), best_set.end()))) {
            best = w;
            best_set = std::move(chosen);
        }
    }
    if (!best) throw NoFeasibleAugmentation();
    return {best_set, *best};
}

std::pair<EdgeSet, int> exact_kecss(const LabeledMultigraph& g, int k, int budget) {
    auto k_connected = [&](const EdgeSet& s) {
        if (g.vertex_count() <= 1) return true;
        return edge_connectivity(g, s) >= k;
    };
    const int m = g.edge_count();
    if (m > budget || m > 25) throw TooLarge("exact_kecss: edge count exceeds budget");
    for (int size = 0; size <= m; ++size) {
        std::optional<EdgeSet> best;
        std::uint32_t mask = size == 0 ? 0u : (1u << size) - 1u;
        const std::uint32_t limit = (1u << m);
        while (true) {
            if (size == 0) {
                if (k_connected({})) return {{}, 0};
                break;
            }
            if (mask >= limit) break;
            EdgeSet s;
            for (int i = 0; i < m; ++i) {
                if (mask >> i & 1u) s.insert(i);
            }
            if (k_connected(s) && (!best || s < *best)) best = s;
            const std::uint32_t c = mask & (~mask + 1u);
            const std::uint32_t r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
        if (best) return {*best, size};
    }
    throw Infeasible("exact_kecss: graph is not k-edge connectable");
}

EdgeSet kecss_pruning_heuristic(const LabeledMultigraph& g, int k) {
    EdgeSet chosen = full_edge_set(g);
    if (g.vertex_count() <= 1) return {};
    if (edge_connectivity(g, chosen) < k) throw Infeasible("graph is not k-edge connected");
    // Drop edges greedily (heaviest first, then largest id) while staying k-connected.
    std::vector<int> order(chosen.begin(), chosen.end());
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.edge(a).weight != g.edge(b).weight) return g.edge(a).weight > g.edge(b).weight;
        return a > b;
    });
    for (int id : order) {
        chosen.erase(id);
        if (edge_connectivity(g, chosen) < k) chosen.insert(id);
    }
    return chosen;
}

}  // namespace fgc
