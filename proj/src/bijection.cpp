#include "fgc/bijection.hpp"

#include <algorithm>
#include <functional>

namespace fgc {

bool is_valid_swap(const LabeledMultigraph& g, const EdgeSet& tree, int out_edge, int in_edge) {
    if (out_edge != in_edge && tree.count(in_edge)) return false;
    UnionFind uf(g.vertex_count());
    for (int id : tree) {
        if (id != out_edge) uf.unite(g.edge(id).u, g.edge(id).v);
    }
    const Edge& in = g.edge(in_edge);
    return !uf.connected(in.u, in.v);
}

ExchangeBijection exchange_bijection(const LabeledMultigraph& g, const SpanningTree& source,
                                     const SpanningTree& target) {
    ExchangeBijection out;
    out.source = source.edge_ids;
    out.target = target.edge_ids;
    for (int id : source.edge_ids) {
        if (target.edge_ids.count(id)) out.mapping[id] = id;
    }
    std::vector<int> left, right;
    for (int id : source.edge_ids) {
        if (!target.edge_ids.count(id)) left.push_back(id);
    }
    for (int id : target.edge_ids) {
        if (!source.edge_ids.count(id)) right.push_back(id);
    }
    // Admissible pairs: the target edge reconnects source - e; equivalently its
    // endpoints straddle the fundamental cut of e.
    std::map<int, std::vector<int>> adm;
    for (int e : left) {
        UnionFind uf(g.vertex_count());
        for (int id : source.edge_ids) {
            if (id != e) uf.unite(g.edge(id).u, g.edge(id).v);
        }
        for (int f : right) {
            if (!uf.connected(g.edge(f).u, g.edge(f).v)) adm[e].push_back(f);
        }
    }
    std::map<int, int> match_right;  // target -> source
    std::function<bool(int, std::set<int>&)> try_augment = [&](int e, std::set<int>& seen) {
        for (int f : adm[e]) {
            if (seen.count(f)) continue;
            seen.insert(f);
            auto it = match_right.find(f);
            if (it == match_right.end() || try_augment(it->second, seen)) {
                match_right[f] = e;
                return true;
            }
        }
        return false;
    };
    for (int e : left) {
        std::set<int> seen;
        if (!try_augment(e, seen)) throw NoBijection();
    }
    for (const auto& [f, e] : match_right) out.mapping[e] = f;
    return out;
}

bool is_valid_exchange_bijection(const LabeledMultigraph& g, const ExchangeBijection& b,
                                 bool require_identity_on_shared) {
    if (b.mapping.size() != b.source.size() || b.source.size() != b.target.size()) return false;
    std::set<int> image;
    for (const auto& [e, f] : b.mapping) {
        if (!b.source.count(e) || !b.target.count(f)) return false;
        if (!image.insert(f).second) return false;
    }
    if (require_identity_on_shared) {
        for (int shared : b.source) {
            if (b.target.count(shared)) {
                auto it = b.mapping.find(shared);
                if (it == b.mapping.end() || it->second != shared) return false;
            }
        }
    }
    for (const auto& [e, f] : b.mapping) {
        if (e != f && !is_valid_swap(g, b.source, e, f)) return false;
    }
    return true;
}

namespace {

bool monotone_cases(const LabeledMultigraph& g, const ExchangeBijection& b, const Rational& alpha,
                    bool divided_form_at_zero) {
    for (const auto& [eid, fid] : b.mapping) {
        const Edge& e = g.edge(eid);
        const Edge& f = g.edge(fid);
        if (e.safe() && !f.safe()) {
            if (alpha == 0) {
                if (divided_form_at_zero) {
                    if (!(f.weight > 0 || e.weight == 0)) return false;
                }
                // scaled form: 0*w(e) <= w(f) always holds
            } else if (!(alpha * e.weight <= f.weight)) {
                return false;
            }
        } else if (e.safe() == f.safe()) {
            if (!(e.weight <= f.weight)) return false;
        } else {  // unsafe -> safe
            if (!(e.weight <= alpha * f.weight)) return false;
        }
    }
    return true;
}

}  // namespace

bool verify_alpha_monotone(const LabeledMultigraph& g, const ExchangeBijection& b,
                           const Rational& alpha) {
    return monotone_cases(g, b, alpha, /*divided_form_at_zero=*/true);
}

bool verify_alpha_monotone_scaled(const LabeledMultigraph& g, const ExchangeBijection& b,
                                  const Rational& alpha) {
    return monotone_cases(g, b, alpha, /*divided_form_at_zero=*/false);
}

namespace {

// Exchange bijection that honors as many `preferred` source->target pairs as a
// perfect matching allows (preferred pairs are forced when they are valid swaps
// and their images are free; the rest is matched by augmenting paths).
ExchangeBijection matching_with_preferences(const LabeledMultigraph& g, const EdgeSet& source,
                                            const EdgeSet& target,
                                            const std::map<int, int>& preferred) {
    ExchangeBijection out;
    out.source = source;
    out.target = target;
    std::set<int> used_targets;
    for (const auto& [e, f] : preferred) {
        if (!source.count(e) || !target.count(f) || used_targets.count(f)) continue;
        if (e != f && !is_valid_swap(g, source, e, f)) continue;
        out.mapping[e] = f;
        used_targets.insert(f);
    }
    std::vector<int> left;
    for (int e : source) {
        if (!out.mapping.count(e)) left.push_back(e);
    }
    std::map<int, std::vector<int>> adm;
    for (int e : left) {
        UnionFind uf(g.vertex_count());
        for (int id : source) {
            if (id != e) uf.unite(g.edge(id).u, g.edge(id).v);
        }
        for (int f : target) {
            if (used_targets.count(f)) continue;
            if (e == f || !uf.connected(g.edge(f).u, g.edge(f).v)) adm[e].push_back(f);
        }
    }
    std::map<int, int> match_right;
    std::function<bool(int, std::set<int>&)> try_augment = [&](int e, std::set<int>& seen) {
        for (int f : adm[e]) {
            if (seen.count(f)) continue;
            seen.insert(f);
            auto it = match_right.find(f);
            if (it == match_right.end() || try_augment(it->second, seen)) {
                match_right[f] = e;
                return true;
            }
        }
        return false;
    };
    bool complete = true;
    for (int e : left) {
        std::set<int> seen;
        if (!try_augment(e, seen)) {
            complete = false;
            break;
        }
    }
    if (!complete) {
        // Preferences blocked a perfect matching; fall back to the canonical
        // construction for this step.
        SpanningTree s, t;
        s.edge_ids = source;
        t.edge_ids = target;
        return exchange_bijection(g, s, t);
    }
    for (const auto& [f, e] : match_right) out.mapping[e] = f;
    return out;
}

}  // namespace

std::vector<ExchangeBijection> chain_exchange_bijections(const FgcInstance& instance,
                                                         const std::vector<Rational>& alphas,
                                                         const SpanningTree& target) {
    const LabeledMultigraph& g = instance.graph();
    for (std::size_t i = 1; i < alphas.size(); ++i) {
        if (alphas[i] < alphas[i - 1]) throw std::invalid_argument("alphas must be sorted");
    }
    // All ratios where the deterministic alpha-MST can change.
    std::set<Rational> crossings;
    for (const Edge& f : g.edges()) {
        if (f.safe()) continue;
        for (const Edge& e : g.edges()) {
            if (!e.safe() || e.weight == 0) continue;
            Rational r = f.weight / e.weight;
            if (r >= 0 && r <= 1) crossings.insert(std::move(r));
        }
    }
    std::vector<ExchangeBijection> out;
    EdgeSet cur;
    std::map<int, int> phi;
    Rational prev;
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        const Rational& a = alphas[i];
        if (i == 0) {
            SpanningTree t = alpha_mst(instance, a);
            ExchangeBijection b = exchange_bijection(g, t, target);
            cur = t.edge_ids;
            phi = b.mapping;
        } else {
            // Walk through every candidate in (prev, a] plus midpoints so each
            // evaluated tree differs from the last by the swaps of one breakpoint.
            std::vector<Rational> stops;
            Rational lo = prev;
            for (const Rational& c : crossings) {
                if (c > prev && c <= a) {
                    stops.push_back((lo + c) / 2);
                    stops.push_back(c);
                    lo = c;
                }
            }
            stops.push_back(a);
            for (const Rational& p : stops) {
                const SpanningTree tp = alpha_mst(instance, p);
                if (tp.edge_ids == cur) continue;
                std::vector<int> departed, arrived;
                for (int id : cur) {
                    if (!tp.edge_ids.count(id)) departed.push_back(id);
                }
                for (int id : tp.edge_ids) {
                    if (!cur.count(id)) arrived.push_back(id);
                }
                // Degenerate crossings can move several pairs at once; peel them
                // off one valid swap at a time, carrying the image along.
                while (!departed.empty()) {
                    bool done = false;
                    for (std::size_t di = 0; di < departed.size() && !done; ++di) {
                        for (std::size_t ai = 0; ai < arrived.size() && !done; ++ai) {
                            const int e = departed[di];
                            const int f = arrived[ai];
                            if (is_valid_swap(g, cur, e, f)) {
                                phi[f] = phi.at(e);
                                phi.erase(e);
                                cur.erase(e);
                                cur.insert(f);
                                departed.erase(departed.begin() + static_cast<std::ptrdiff_t>(di));
                                arrived.erase(arrived.begin() + static_cast<std::ptrdiff_t>(ai));
                                done = true;
                            }
                        }
                    }
                    if (!done) throw NoBijection();
                }
            }
        }
        ExchangeBijection b;
        b.source = cur;
        b.target = target.edge_ids;
        b.mapping = phi;
        // Degenerate multi-crossings can invalidate a carried swap; rebuild by a
        // matching that keeps as much of the previous assignment as possible.
        if (!is_valid_exchange_bijection(g, b, false) || !verify_alpha_monotone_scaled(g, b, a)) {
            // Keep the previous images on shared sources wherever the swap is
            // still valid, and the swept charges everywhere else. A shared pair
            // whose image just entered the source tree cannot be kept: the swap
            // source - e + phi(e) no longer spans.
            std::map<int, int> wanted = phi;
            if (!out.empty()) {
                for (const auto& [x, y] : out.back().mapping) {
                    if (cur.count(x)) wanted[x] = y;
                }
            }
            b = matching_with_preferences(g, cur, target.edge_ids, wanted);
            phi = b.mapping;
        }
        out.push_back(std::move(b));
        prev = a;
    }
    return out;
}

}  // namespace fgc
