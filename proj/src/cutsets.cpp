#include "hollow/cutsets.hpp"

#include <algorithm>

namespace hollow {

bool is_valid_separation(const Graph& g, const Separation& s) {
    if ((s.a | s.c | s.b) != g.vertices()) return false;
    if (s.a.intersects(s.c) || s.a.intersects(s.b) || s.c.intersects(s.b)) return false;
    if (s.a.empty() || s.b.empty()) return true;  // anticomplete trivially checkable below
    return is_anticomplete(g, s.a, s.b);
}

std::optional<Separation> find_clique_cutset(const Graph& g) {
    if (!is_connected(g)) throw DisconnectedInputError("find_clique_cutset: input disconnected");
    const int n = g.n();
    if (n <= 2) return std::nullopt;
    // A complete graph has no cutset at all; skip the exponential scan.
    if (g.m() == n * (n - 1) / 2) return std::nullopt;
    for (const VertexSet& c : enumerate_cliques(g, n - 2)) {
        if (n - c.size() < 2) continue;
        auto comps = components(g, g.vertices() - c);
        if (comps.size() >= 2) {
            Separation s;
            s.c = c;
            s.a = comps[0];
            for (std::size_t i = 1; i < comps.size(); ++i) s.b |= comps[i];
            return s;
        }
    }
    return std::nullopt;
}

std::optional<StarCutset> find_star_cutset(const Graph& g) {
    if (!is_connected(g)) throw DisconnectedInputError("find_star_cutset: input disconnected");
    const int n = g.n();
    for (int v = 0; v < n; ++v) {
        const VertexSet closed = g.closed_neighbors(v);
        const VertexSet w = g.vertices() - closed;
        if (w.empty()) {
            // C = N[v] minus a non-adjacent pair of neighbors, if any.
            auto nb = g.neighbors(v).to_vector();
            for (std::size_t i = 0; i < nb.size(); ++i)
                for (std::size_t j = i + 1; j < nb.size(); ++j)
                    if (!g.adjacent(nb[i], nb[j])) {
                        Separation s;
                        s.a = VertexSet::single(nb[i]);
                        s.b = VertexSet::single(nb[j]);
                        s.c = g.vertices() - s.a - s.b;
                        return StarCutset{s, v};
                    }
            continue;
        }
        auto comps = components(g, w);
        if (comps.size() >= 2) {
            Separation s;
            s.c = closed;
            s.a = comps[0];
            for (std::size_t i = 1; i < comps.size(); ++i) s.b |= comps[i];
            return StarCutset{s, v};
        }
        const VertexSet attach = g.neighbors_of(comps[0]);  // subset of N(v)
        if (attach != g.neighbors(v)) {
            Separation s;
            s.c = VertexSet::single(v) | attach;
            s.a = comps[0];
            s.b = g.vertices() - s.c - s.a;
            return StarCutset{s, v};
        }
    }
    return std::nullopt;
}

std::vector<VertexSet> star_to_cliques(const Graph& g, const Separation& sep,
                                       const std::vector<int>& centers, VertexSet d1,
                                       VertexSet d2) {
    if (!is_valid_separation(g, sep) || sep.a.empty() || sep.b.empty())
        throw InvalidArgumentError("star_to_cliques: invalid separation");
    VertexSet center_set;
    VertexSet covered;
    for (int v : centers) {
        if (!sep.c.contains(v))
            throw InvalidArgumentError("star_to_cliques: center not in C");
        center_set.add(v);
        covered |= g.closed_neighbors(v);
    }
    if (!sep.c.subset_of(covered))
        throw InvalidArgumentError("star_to_cliques: C not covered by the centers");
    if (!d1.subset_of(sep.a) || d1.empty() || component_of(g, sep.a, d1.min()) != d1)
        throw InvalidArgumentError("star_to_cliques: D1 is not a component of A");
    if (!d2.subset_of(sep.b) || d2.empty() || component_of(g, sep.b, d2.min()) != d2)
        throw InvalidArgumentError("star_to_cliques: D2 is not a component of B");

    const VertexSet n1 = g.neighbors_of(d1);
    const VertexSet allowed = g.vertices() - n1 - center_set;
    const VertexSet d2prime = component_of(g, allowed, d2.min());
    const VertexSet x = g.neighbors_of(d2prime) | center_set;

    std::vector<VertexSet> cliques;
    for (int v : centers) {
        VertexSet xi = x & g.closed_neighbors(v);
        if (!is_clique(g, xi))
            throw NotSparseError("star_to_cliques: X_i not a clique; sparseness violated");
        cliques.push_back(xi);
    }
    return cliques;
}

CliquePair CliquePair::make(const Graph& g, VertexSet k1, VertexSet k2, int max_size) {
    if (k1.empty() || k2.empty())
        throw InvalidArgumentError("clique pair: both cliques must be non-empty");
    if (k1 == k2) throw InvalidArgumentError("clique pair: cliques must be distinct");
    if (k1.size() > max_size || k2.size() > max_size)
        throw InvalidArgumentError("clique pair: clique exceeds size bound");
    if (!is_clique(g, k1) || !is_clique(g, k2))
        throw InvalidArgumentError("clique pair: sets must be cliques");
    if (VertexSet::seq_less(k2, k1)) std::swap(k1, k2);
    return CliquePair{k1, k2};
}

CanonicalSeparation canonical_separation(const Graph& g, const WeightFunction& w,
                                         const CliquePair& pair) {
    const VertexSet cut = pair.cut();
    if (cut == g.vertices())
        throw InvalidArgumentError("canonical_separation: K1 ∪ K2 covers the graph");
    auto comps = components(g, g.vertices() - cut);
    int best = -1;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (!w.heavier_than_half(comps[i])) continue;
        best = static_cast<int>(i);  // weights > 1/2 cannot tie
        break;
    }
    if (best < 0)
        throw NotUnbalancedError("canonical_separation: no component of weight > 1/2");
    CanonicalSeparation cs;
    cs.pair = pair;
    cs.b = comps[static_cast<std::size_t>(best)];
    cs.a = g.vertices() - cs.b - cut;
    cs.weight_of_b = w.weight_of(cs.b);
    return cs;
}

namespace {

bool is_path_between(const Graph& g, VertexSet s, int x, int y) {
    if (component_of(g, s, x) != s) return false;
    bool ok = true;
    s.for_each([&](int v) {
        const int deg = (g.neighbors(v) & s).size();
        if (v == x || v == y) {
            if (deg != 1) ok = false;
        } else if (deg != 2) {
            ok = false;
        }
    });
    return ok && s.size() >= 2;
}

bool proper_from_canonical(const Graph& g, const CanonicalSeparation& cs) {
    const VertexSet cut = cs.pair.cut();
    bool attaches = false;
    for (const VertexSet& d : components(g, cs.a)) {
        if (cut.subset_of(g.neighbors_of(d))) {
            attaches = true;
            break;
        }
    }
    if (!attaches) return false;
    if (cs.pair.k1.size() == 1 && cs.pair.k2.size() == 1) {
        const int x = cs.pair.k1.min(), y = cs.pair.k2.min();
        if (is_path_between(g, cs.a | cut, x, y)) return false;
    }
    return true;
}

}  // namespace

bool is_proper(const Graph& g, const WeightFunction& w, const CliquePair& pair) {
    return proper_from_canonical(g, canonical_separation(g, w, pair));
}

PairEvaluation evaluate_clique_pair(const Graph& g, const WeightFunction& w,
                                    const CliquePair& p) {
    PairEvaluation e;
    e.cut = p.cut();
    try {
        CanonicalSeparation cs = canonical_separation(g, w, p);
        e.proper = proper_from_canonical(g, cs);
        e.closure = cs.closure();
        e.b = cs.b;
    } catch (const NotUnbalancedError&) {
        e.proper = false;  // no canonical separation, hence not proper
    } catch (const InvalidArgumentError&) {
        e.proper = false;  // K1 ∪ K2 = V(G)
    }
    return e;
}

bool active_among(const PairEvaluation& self, const std::vector<PairEvaluation>& pool) {
    for (const PairEvaluation& other : pool) {
        if (!other.proper || other.cut == self.cut) continue;
        if (other.closure.proper_subset_of(self.closure)) return false;
        if (other.closure == self.closure && !other.b.proper_subset_of(self.b)) return false;
    }
    return true;
}

bool is_active(const Graph& g, const WeightFunction& w, const CliquePair& pair,
               const std::vector<CliquePair>& pool) {
    PairEvaluation self = evaluate_clique_pair(g, w, pair);
    if (!self.proper) throw InvalidArgumentError("is_active: pair is not proper");
    std::vector<PairEvaluation> entries;
    entries.reserve(pool.size());
    for (const auto& p : pool) entries.push_back(evaluate_clique_pair(g, w, p));
    return active_among(self, entries);
}

bool loosely_noncrossing(const CanonicalSeparation& s1, const CanonicalSeparation& s2) {
    return !s1.a.intersects(s2.c()) && !s2.a.intersects(s1.c());
}

bool noncrossing(const CanonicalSeparation& s1, const CanonicalSeparation& s2) {
    return (s1.a | s1.c()).subset_of(s2.b | s2.c()) &&
           (s2.a | s2.c()).subset_of(s1.b | s1.c());
}

std::vector<CliquePair> all_clique_pairs(const Graph& g, int max_size) {
    auto cliques = enumerate_cliques(g, max_size);
    std::vector<CliquePair> out;
    for (std::size_t i = 0; i < cliques.size(); ++i)
        for (std::size_t j = i + 1; j < cliques.size(); ++j)
            out.push_back(CliquePair{cliques[i], cliques[j]});
    return out;
}

std::vector<CliquePair> active_pairs(const Graph& g, const WeightFunction& w, int max_size) {
    auto pool = all_clique_pairs(g, max_size);
    std::vector<PairEvaluation> entries;
    entries.reserve(pool.size());
    for (const auto& p : pool) entries.push_back(evaluate_clique_pair(g, w, p));
    std::vector<CliquePair> out;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        if (!entries[i].proper) continue;
        if (active_among(entries[i], entries)) out.push_back(pool[i]);
    }
    return out;
}

}  // namespace hollow
