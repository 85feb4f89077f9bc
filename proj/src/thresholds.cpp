#include "fgc/thresholds.hpp"

#include <algorithm>
#include <sstream>

namespace fgc {

std::string format_scaling(const ScalingFactor& s) {
    return s.infinite ? "inf" : format_rational(s.value);
}

Rational scaled_weight(const Edge& e, const Rational& alpha) {
    return e.safe() ? Rational(alpha * e.weight) : e.weight;
}

bool scaled_less(const Edge& a, const Edge& b, const Rational& alpha) {
    const Rational wa = scaled_weight(a, alpha);
    const Rational wb = scaled_weight(b, alpha);
    if (wa != wb) return wa < wb;
    if (a.safety != b.safety) return a.safe();
    if (a.weight != b.weight) return a.weight < b.weight;
    return a.id < b.id;
}

SpanningTree alpha_mst(const FgcInstance& instance, const Rational& alpha) {
    const LabeledMultigraph& g = instance.graph();
    return minimum_spanning_tree(
        g, [&](int x, int y) { return scaled_less(g.edge(x), g.edge(y), alpha); });
}

bool in_some_alpha_mst(const FgcInstance& instance, const Rational& alpha, int edge_id) {
    const LabeledMultigraph& g = instance.graph();
    const Edge& e = g.edge(edge_id);
    const Rational we = scaled_weight(e, alpha);
    UnionFind uf(g.vertex_count());
    for (const Edge& f : g.edges()) {
        if (f.id != edge_id && scaled_weight(f, alpha) < we) uf.unite(f.u, f.v);
    }
    return !uf.connected(e.u, e.v);
}

ScalingFactor exact_threshold(const FgcInstance& instance, int edge_id) {
    const LabeledMultigraph& g = instance.graph();
    const Edge& e = g.edge(edge_id);
    if (e.safe()) {
        // alpha_e = min(1, t*/w(e)): t* is the bottleneck unsafe weight connecting
        // the endpoints once strictly lighter safe edges are free.
        if (e.weight == 0) return ScalingFactor::of(Rational(1));
        UnionFind uf(g.vertex_count());
        for (const Edge& f : g.edges()) {
            if (f.id != e.id && f.safe() && f.weight < e.weight) uf.unite(f.u, f.v);
        }
        if (uf.connected(e.u, e.v)) return ScalingFactor::of(Rational(0));
        std::vector<int> unsafe_ids;
        for (const Edge& f : g.edges()) {
            if (!f.safe()) unsafe_ids.push_back(f.id);
        }
        std::sort(unsafe_ids.begin(), unsafe_ids.end(), [&](int a, int b) {
            if (g.edge(a).weight != g.edge(b).weight) return g.edge(a).weight < g.edge(b).weight;
            return a < b;
        });
        for (int id : unsafe_ids) {
            uf.unite(g.edge(id).u, g.edge(id).v);
            if (uf.connected(e.u, e.v))
                return ScalingFactor::of(std::min(Rational(1), Rational(g.edge(id).weight / e.weight)));
        }
        return ScalingFactor::of(Rational(1));
    }
    // Unsafe: alpha_f = w(f)/s*: s* is the bottleneck safe weight connecting the
    // endpoints once strictly lighter unsafe edges (and weightless safe edges)
    // are free. INFINITY when the free part already connects or w(f)/s* > 1.
    if (e.weight == 0) return ScalingFactor::of(Rational(0));
    UnionFind uf(g.vertex_count());
    for (const Edge& f : g.edges()) {
        if (f.id == e.id) continue;
        if ((!f.safe() && f.weight < e.weight) || (f.safe() && f.weight == 0)) uf.unite(f.u, f.v);
    }
    if (uf.connected(e.u, e.v)) return ScalingFactor::inf();
    std::vector<int> safe_ids;
    for (const Edge& f : g.edges()) {
        if (f.safe() && f.weight > 0) safe_ids.push_back(f.id);
    }
    std::sort(safe_ids.begin(), safe_ids.end(), [&](int a, int b) {
        if (g.edge(a).weight != g.edge(b).weight) return g.edge(a).weight < g.edge(b).weight;
        return a < b;
    });
    for (int id : safe_ids) {
        uf.unite(g.edge(id).u, g.edge(id).v);
        if (uf.connected(e.u, e.v)) {
            const Rational ratio = e.weight / g.edge(id).weight;
            if (ratio > 1) return ScalingFactor::inf();
            return ScalingFactor::of(ratio);
        }
    }
    return ScalingFactor::of(Rational(0));
}

DetThreshold deterministic_threshold(const FgcInstance& instance, int edge_id) {
    const LabeledMultigraph& g = instance.graph();
    const Edge& e = g.edge(edge_id);
    auto lex_less = [&](const Edge& a, const Edge& b) {
        if (a.weight != b.weight) return a.weight < b.weight;
        return a.id < b.id;
    };
    if (e.safe()) {
        UnionFind uf(g.vertex_count());
        for (const Edge& f : g.edges()) {
            if (f.id != e.id && f.safe() && lex_less(f, e)) uf.unite(f.u, f.v);
        }
        if (uf.connected(e.u, e.v)) return DetThreshold{DetThreshold::Kind::Never, Rational(0)};
        if (e.weight == 0) return DetThreshold{DetThreshold::Kind::Value, Rational(1)};
        std::vector<int> unsafe_ids;
        for (const Edge& f : g.edges()) {
            if (!f.safe()) unsafe_ids.push_back(f.id);
        }
        std::sort(unsafe_ids.begin(), unsafe_ids.end(), [&](int a, int b) {
            return lex_less(g.edge(a), g.edge(b));
        });
        for (int id : unsafe_ids) {
            uf.unite(g.edge(id).u, g.edge(id).v);
            if (uf.connected(e.u, e.v))
                return DetThreshold{DetThreshold::Kind::Value,
                                    std::min(Rational(1), Rational(g.edge(id).weight / e.weight))};
        }
        return DetThreshold{DetThreshold::Kind::Value, Rational(1)};
    }
    if (e.weight == 0) {
        // competitors strictly below: lighter/earlier unsafe and nothing else
        UnionFind uf(g.vertex_count());
        for (const Edge& f : g.edges()) {
            if (f.id == e.id) continue;
            if ((!f.safe() && lex_less(f, e)) || (f.safe() && f.weight == 0)) uf.unite(f.u, f.v);
        }
        return uf.connected(e.u, e.v) ? DetThreshold{DetThreshold::Kind::Infinite, Rational(0)}
                                      : DetThreshold{DetThreshold::Kind::Value, Rational(0)};
    }
    UnionFind uf(g.vertex_count());
    for (const Edge& f : g.edges()) {
        if (f.id == e.id) continue;
        if ((!f.safe() && lex_less(f, e)) || (f.safe() && f.weight == 0)) uf.unite(f.u, f.v);
    }
    if (uf.connected(e.u, e.v)) return DetThreshold{DetThreshold::Kind::Infinite, Rational(0)};
    std::vector<int> safe_ids;
    for (const Edge& f : g.edges()) {
        if (f.safe() && f.weight > 0) safe_ids.push_back(f.id);
    }
    std::sort(safe_ids.begin(), safe_ids.end(),
              [&](int a, int b) { return lex_less(g.edge(a), g.edge(b)); });
    for (int id : safe_ids) {
        uf.unite(g.edge(id).u, g.edge(id).v);
        if (uf.connected(e.u, e.v)) {
            const Rational ratio = e.weight / g.edge(id).weight;
            if (ratio >= 1) return DetThreshold{DetThreshold::Kind::Infinite, Rational(0)};
            return DetThreshold{DetThreshold::Kind::Value, ratio};
        }
    }
    return DetThreshold{DetThreshold::Kind::Value, Rational(0)};
}

ThresholdSet compute_thresholds(const FgcInstance& instance) {
    const LabeledMultigraph& g = instance.graph();
    ThresholdSet out;
    for (int i = 0; i < g.edge_count(); ++i) out.attribution[i] = exact_threshold(instance, i);

    // Pairing procedure for the <= |V|-1 guarantee: candidates w(f)/w(e) over
    // unsafe 1-MST edges f and safe non-tree edges e, confirmed largest-first by
    // an alpha-MST membership test; confirming a pair retires both edges.
    const SpanningTree t1 = alpha_mst(instance, Rational(1));
    std::vector<int> f1;
    for (int id : t1.edge_ids) {
        if (!g.edge(id).safe()) f1.push_back(id);
    }
    struct Candidate {
        Rational ratio;
        int safe_id;
        int unsafe_id;
    };
    std::vector<Candidate> cands;
    for (int f : f1) {
        for (const Edge& e : g.edges()) {
            if (!e.safe() || t1.edge_ids.count(e.id) || e.weight == 0) continue;
            Rational r = g.edge(f).weight / e.weight;
            if (r >= 0 && r <= 1) cands.push_back({std::move(r), e.id, f});
        }
    }
    std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
        if (a.ratio != b.ratio) return a.ratio > b.ratio;
        if (a.safe_id != b.safe_id) return a.safe_id < b.safe_id;
        return a.unsafe_id < b.unsafe_id;
    });
    std::set<int> used;
    std::set<Rational> confirmed;
    for (const Candidate& c : cands) {
        if (used.count(c.safe_id) || used.count(c.unsafe_id)) continue;
        if (in_some_alpha_mst(instance, c.ratio, c.safe_id)) {
            used.insert(c.safe_id);
            used.insert(c.unsafe_id);
            confirmed.insert(c.ratio);
        }
    }
    out.values.assign(confirmed.begin(), confirmed.end());
    return out;
}

std::vector<Rational> ThresholdSet::scaling_set() const {
    std::set<Rational> vals{Rational(0), Rational(1)};
    for (const auto& [id, s] : attribution) {
        if (!s.infinite) vals.insert(s.value);
    }
    return {vals.begin(), vals.end()};
}

std::string ThresholdSet::serialize() const {
    std::ostringstream out;
    for (const auto& [id, s] : attribution) out << id << ' ' << format_scaling(s) << '\n';
    return out.str();
}

}  // namespace fgc
