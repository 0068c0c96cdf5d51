#ifndef HOLLOW_GRAPH_HPP
#define HOLLOW_GRAPH_HPP

#include <optional>
#include <utility>
#include <vector>

#include "hollow/errors.hpp"
#include "hollow/vertex_set.hpp"

namespace hollow {

// Immutable simple undirected graph.  Vertex identifiers are dense
// integers 0..n-1; adjacency is stored as one bitset row per vertex.
class Graph {
public:
    Graph() : n_(0) {}

    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {
        check_order(n);
    }

    Graph(int n, const std::vector<std::pair<int, int>>& edges)
        : n_(n), adj_(static_cast<std::size_t>(n)) {
        check_order(n);
        for (auto [u, v] : edges) add_edge_internal(u, v);
    }

    int n() const { return n_; }

    int m() const {
        int total = 0;
        for (int v = 0; v < n_; ++v) total += adj_[v].size();
        return total / 2;
    }

    bool adjacent(int u, int v) const { return adj_[u].contains(v); }
    const VertexSet& neighbors(int v) const { return adj_[v]; }
    VertexSet closed_neighbors(int v) const { return adj_[v] | VertexSet::single(v); }
    int degree(int v) const { return adj_[v].size(); }
    VertexSet vertices() const { return VertexSet::full(n_); }

    // N(X): vertices outside X with a neighbor in X.
    VertexSet neighbors_of(VertexSet x) const {
        VertexSet out;
        x.for_each([&](int v) { out |= adj_[v]; });
        return out - x;
    }

    std::vector<std::pair<int, int>> edge_list() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u) {
            adj_[u].for_each([&](int v) {
                if (u < v) out.emplace_back(u, v);
            });
        }
        return out;
    }

    // Subgraph induced on X, with vertices relabelled 0..|X|-1 in
    // ascending order of their old ids.  The map old->new is returned
    // through `old_ids` (new id i corresponds to old_ids[i]).
    Graph induced(VertexSet x, std::vector<int>* old_ids = nullptr) const {
        std::vector<int> ids = x.to_vector();
        std::vector<int> pos(static_cast<std::size_t>(n_), -1);
        for (std::size_t i = 0; i < ids.size(); ++i) pos[ids[i]] = static_cast<int>(i);
        Graph h(static_cast<int>(ids.size()));
        for (std::size_t i = 0; i < ids.size(); ++i) {
            VertexSet nb = adj_[ids[i]] & x;
            nb.for_each([&](int v) {
                if (pos[v] > static_cast<int>(i)) h.add_edge_internal(static_cast<int>(i), pos[v]);
            });
        }
        if (old_ids) *old_ids = std::move(ids);
        return h;
    }

private:
    static void check_order(int n) {
        if (n < 0 || n > VertexSet::kCapacity)
            throw InvalidArgumentError("graph order must be in 0..128");
    }
    void add_edge_internal(int u, int v) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw InvalidArgumentError("edge endpoint out of range");
        if (u == v) throw InvalidArgumentError("self-loop rejected");
        adj_[u].add(v);
        adj_[v].add(u);
    }

    int n_;
    std::vector<VertexSet> adj_;
};

// Ordered vertex list p_1..p_k; valid paths are induced: consecutive
// vertices adjacent, everything else non-adjacent, all distinct.
struct Path {
    std::vector<int> vertices;

    int length() const { return static_cast<int>(vertices.size()) - 1; }
    VertexSet as_set() const { return VertexSet::from(vertices); }
    VertexSet interior() const {
        VertexSet s = as_set();
        if (!vertices.empty()) {
            s.remove(vertices.front());
            s.remove(vertices.back());
        }
        return s;
    }
};

bool is_induced_path(const Graph& g, const std::vector<int>& vertices);

// Connected components of G[X], ordered by minimum vertex id.
std::vector<VertexSet> components(const Graph& g, VertexSet x);

// Component of G[X] containing v (v must be in X).
VertexSet component_of(const Graph& g, VertexSet x, int v);

bool is_connected(const Graph& g);

// True iff no edge joins X and Y; throws OverlappingSetsError if they meet.
bool is_anticomplete(const Graph& g, VertexSet x, VertexSet y);

// Shortest induced path from s to t inside G[allowed], ties broken by
// lexicographically smallest vertex sequence; nullopt if none.
std::optional<Path> induced_path(const Graph& g, int s, int t, VertexSet allowed);

// All cliques of size 1..max_size, in lexicographic order of their
// ascending vertex lists.
std::vector<VertexSet> enumerate_cliques(const Graph& g, int max_size);

// True iff the clique number is at most t.
bool clique_number_at_most(const Graph& g, int t);

bool is_clique(const Graph& g, VertexSet x);

}  // namespace hollow

#endif
