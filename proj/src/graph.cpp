#include "hollow/graph.hpp"

#include <algorithm>

namespace hollow {

bool is_induced_path(const Graph& g, const std::vector<int>& vertices) {
    const int k = static_cast<int>(vertices.size());
    if (k == 0) return false;
    VertexSet seen;
    for (int v : vertices) {
        if (v < 0 || v >= g.n() || seen.contains(v)) return false;
        seen.add(v);
    }
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            const bool want = (j == i + 1);
            if (g.adjacent(vertices[i], vertices[j]) != want) return false;
        }
    }
    return true;
}

VertexSet component_of(const Graph& g, VertexSet x, int v) {
    VertexSet comp = VertexSet::single(v);
    VertexSet frontier = comp;
    while (!frontier.empty()) {
        VertexSet next;
        frontier.for_each([&](int u) { next |= g.neighbors(u); });
        next &= x;
        next -= comp;
        comp |= next;
        frontier = next;
    }
    return comp;
}

std::vector<VertexSet> components(const Graph& g, VertexSet x) {
    std::vector<VertexSet> out;
    VertexSet rest = x;
    while (!rest.empty()) {
        VertexSet comp = component_of(g, rest, rest.min());
        out.push_back(comp);
        rest -= comp;
    }
    return out;  // seeds taken in ascending id order, so sorted by min
}

bool is_connected(const Graph& g) {
    if (g.n() == 0) return true;
    return component_of(g, g.vertices(), 0).size() == g.n();
}

bool is_anticomplete(const Graph& g, VertexSet x, VertexSet y) {
    if (x.intersects(y)) throw OverlappingSetsError("is_anticomplete: sets overlap");
    bool clean = true;
    x.for_each([&](int v) {
        if (g.neighbors(v).intersects(y)) clean = false;
    });
    return clean;
}

std::optional<Path> induced_path(const Graph& g, int s, int t, VertexSet allowed) {
    if (!allowed.contains(s) || !allowed.contains(t))
        throw InvalidArgumentError("induced_path: endpoints must be allowed");
    if (s == t) return Path{{s}};
    // BFS distances from t within G[allowed]; then walk greedily from s
    // picking the smallest-id neighbor one step closer.  A shortest path
    // is automatically induced, and the greedy walk yields the
    // lexicographically smallest vertex sequence among shortest paths.
    std::vector<int> dist(static_cast<std::size_t>(g.n()), -1);
    dist[t] = 0;
    VertexSet frontier = VertexSet::single(t);
    int d = 0;
    while (!frontier.empty() && dist[s] == -1) {
        VertexSet next;
        frontier.for_each([&](int u) { next |= g.neighbors(u); });
        next &= allowed;
        ++d;
        VertexSet fresh;
        next.for_each([&](int u) {
            if (dist[u] == -1) {
                dist[u] = d;
                fresh.add(u);
            }
        });
        frontier = fresh;
    }
    if (dist[s] == -1) return std::nullopt;
    Path p;
    p.vertices.push_back(s);
    int cur = s;
    while (cur != t) {
        int best = -1;
        (g.neighbors(cur) & allowed).for_each([&](int u) {
            if (dist[u] == dist[cur] - 1 && best == -1) best = u;
        });
        p.vertices.push_back(best);
        cur = best;
    }
    return p;
}

namespace {

void extend_clique(const Graph& g, std::vector<int>& cur, VertexSet common,
                   int max_size, std::vector<VertexSet>& out) {
    out.push_back(VertexSet::from(cur));
    if (static_cast<int>(cur.size()) == max_size) return;
    const int last = cur.back();
    common.for_each([&](int v) {
        if (v <= last) return;
        cur.push_back(v);
        extend_clique(g, cur, common & g.neighbors(v), max_size, out);
        cur.pop_back();
    });
}

}  // namespace

std::vector<VertexSet> enumerate_cliques(const Graph& g, int max_size) {
    if (max_size < 1) throw InvalidArgumentError("enumerate_cliques: max_size >= 1");
    std::vector<VertexSet> out;
    std::vector<int> cur;
    for (int v = 0; v < g.n(); ++v) {
        cur.assign(1, v);
        extend_clique(g, cur, g.neighbors(v), max_size, out);
    }
    return out;
}

namespace {

bool has_clique_of_size(const Graph& g, VertexSet candidates, int need) {
    if (need == 0) return true;
    if (candidates.size() < need) return false;
    bool found = false;
    candidates.for_each([&](int v) {
        if (found) return;
        VertexSet rest = candidates & g.neighbors(v);
        // only extend upward to avoid duplicates
        VertexSet upper;
        rest.for_each([&](int u) {
            if (u > v) upper.add(u);
        });
        if (has_clique_of_size(g, upper, need - 1)) found = true;
    });
    return found;
}

}  // namespace

bool clique_number_at_most(const Graph& g, int t) {
    if (t < 1) throw InvalidArgumentError("clique_number_at_most: t >= 1");
    if (g.n() == 0) return true;
    return !has_clique_of_size(g, g.vertices(), t + 1);
}

bool is_clique(const Graph& g, VertexSet x) {
    bool ok = true;
    x.for_each([&](int v) {
        VertexSet others = x;
        others.remove(v);
        if (!others.subset_of(g.neighbors(v))) ok = false;
    });
    return ok;
}

}  // namespace hollow
