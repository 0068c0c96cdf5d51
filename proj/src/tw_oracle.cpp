#include "hollow/tw_oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace hollow {

namespace {

using Mask = std::uint32_t;

std::vector<Mask> adjacency_masks(const Graph& g) {
    std::vector<Mask> adj(static_cast<std::size_t>(g.n()), 0);
    for (int v = 0; v < g.n(); ++v)
        adj[v] = static_cast<Mask>(g.neighbors(v).word(0));
    return adj;
}

// Number of vertices outside S reachable from v through S \ {v}.
// This is the degree v would have if the vertices of S \ {v} were
// eliminated before it.
int q_value(const std::vector<Mask>& adj, Mask s, int v) {
    const Mask inside = s & ~(Mask(1) << v);
    Mask comp = Mask(1) << v;
    Mask frontier = comp;
    Mask reach_out = 0;
    while (frontier) {
        Mask nb = 0;
        Mask f = frontier;
        while (f) {
            int u = std::countr_zero(f);
            f &= f - 1;
            nb |= adj[u];
        }
        reach_out |= nb & ~s;
        frontier = (nb & inside) & ~comp;
        comp |= frontier;
    }
    return std::popcount(reach_out);
}

void check_cap(const Graph& g, int size_cap) {
    if (size_cap > 25) throw InvalidArgumentError("tw oracle cap too large");
    if (g.n() > size_cap)
        throw SizeCapError("graph exceeds tw oracle size cap of " +
                           std::to_string(size_cap));
}

std::vector<std::uint8_t> run_dp(const std::vector<Mask>& adj, int n) {
    const std::size_t total = std::size_t(1) << n;
    std::vector<std::uint8_t> dp(total, 0);
    for (std::size_t s = 1; s < total; ++s) {
        int best = 255;
        Mask bits = static_cast<Mask>(s);
        while (bits) {
            int v = std::countr_zero(bits);
            bits &= bits - 1;
            const std::size_t prev = s & ~(std::size_t(1) << v);
            int cand = std::max<int>(dp[prev], q_value(adj, static_cast<Mask>(s), v));
            best = std::min(best, cand);
        }
        dp[s] = static_cast<std::uint8_t>(best);
    }
    return dp;
}

}  // namespace

int treewidth_exact(const Graph& g, int size_cap) {
    check_cap(g, size_cap);
    const int n = g.n();
    if (n == 0) return -1;  // width of the empty decomposition
    auto dp = run_dp(adjacency_masks(g), n);
    return dp[(std::size_t(1) << n) - 1];
}

TreeDecomposition tree_decomposition(const Graph& g, int size_cap) {
    check_cap(g, size_cap);
    const int n = g.n();
    TreeDecomposition td;
    if (n == 0) {
        td.bags.push_back(VertexSet());
        return td;
    }
    auto adj = adjacency_masks(g);
    auto dp = run_dp(adj, n);

    // Recover an elimination order achieving dp[full]: walk down from the
    // full set, always taking the smallest vertex that attains the min.
    std::vector<int> order(static_cast<std::size_t>(n));
    std::size_t s = (std::size_t(1) << n) - 1;
    for (int pos = n - 1; pos >= 0; --pos) {
        int chosen = -1;
        Mask bits = static_cast<Mask>(s);
        while (bits) {
            int v = std::countr_zero(bits);
            bits &= bits - 1;
            const std::size_t prev = s & ~(std::size_t(1) << v);
            if (std::max<int>(dp[prev], q_value(adj, static_cast<Mask>(s), v)) == dp[s]) {
                chosen = v;
                break;
            }
        }
        order[pos] = chosen;
        s &= ~(std::size_t(1) << chosen);
    }

    // Eliminate in order with fill-in; bag(v) = {v} + its higher neighbors
    // at elimination time.  Attach bag(v) to the bag of the first-eliminated
    // higher neighbor.
    std::vector<Mask> fill = adj;
    std::vector<int> position(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) position[order[i]] = i;
    std::vector<Mask> madj(static_cast<std::size_t>(n), 0);
    Mask remaining = (n == 32) ? ~Mask(0) : ((Mask(1) << n) - 1);
    for (int i = 0; i < n; ++i) {
        const int v = order[i];
        remaining &= ~(Mask(1) << v);
        madj[v] = fill[v] & remaining;
        Mask a = madj[v];
        while (a) {
            int x = std::countr_zero(a);
            a &= a - 1;
            fill[x] |= madj[v] & ~(Mask(1) << x);
        }
    }

    td.bags.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const int v = order[i];
        VertexSet bag = VertexSet::single(v);
        Mask a = madj[v];
        while (a) {
            int x = std::countr_zero(a);
            a &= a - 1;
            bag.add(x);
        }
        td.bags[static_cast<std::size_t>(i)] = bag;
        if (madj[v]) {
            int parent = n;
            Mask b = madj[v];
            while (b) {
                int x = std::countr_zero(b);
                b &= b - 1;
                parent = std::min(parent, position[x]);
            }
            td.tree_edges.emplace_back(i, parent);
        } else if (i + 1 < n) {
            // v's component is finished; chain to the next node to keep
            // the decomposition a single tree.
            td.tree_edges.emplace_back(i, i + 1);
        }
    }
    return td;
}

TdValidation validate_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
    const int k = static_cast<int>(td.bags.size());
    TdValidation res;

    // Tree check: k nodes, k-1 edges, connected.
    if (k == 0 || static_cast<int>(td.tree_edges.size()) != k - 1) {
        res.ok = false;
        res.violation = TdViolation{"not-a-tree", -1, {-1, -1}};
        return res;
    }
    std::vector<std::vector<int>> tadj(static_cast<std::size_t>(k));
    for (auto [a, b] : td.tree_edges) {
        if (a < 0 || b < 0 || a >= k || b >= k) {
            res.ok = false;
            res.violation = TdViolation{"not-a-tree", -1, {a, b}};
            return res;
        }
        tadj[a].push_back(b);
        tadj[b].push_back(a);
    }
    std::vector<char> seen(static_cast<std::size_t>(k), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 0;
    while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        ++reached;
        for (int u : tadj[t])
            if (!seen[u]) {
                seen[u] = 1;
                stack.push_back(u);
            }
    }
    if (reached != k) {
        res.ok = false;
        res.violation = TdViolation{"not-a-tree", -1, {-1, -1}};
        return res;
    }

    // (i) vertex coverage and (iii) connectivity of each vertex's node set.
    for (int v = 0; v < g.n(); ++v) {
        std::vector<int> holding;
        for (int t = 0; t < k; ++t)
            if (td.bags[static_cast<std::size_t>(t)].contains(v)) holding.push_back(t);
        if (holding.empty()) {
            res.ok = false;
            res.violation = TdViolation{"vertex-uncovered", v, {-1, -1}};
            return res;
        }
        std::vector<char> inset(static_cast<std::size_t>(k), 0);
        for (int t : holding) inset[t] = 1;
        std::vector<int> st{holding[0]};
        std::vector<char> vis(static_cast<std::size_t>(k), 0);
        vis[holding[0]] = 1;
        int cnt = 0;
        while (!st.empty()) {
            int t = st.back();
            st.pop_back();
            ++cnt;
            for (int u : tadj[t])
                if (inset[u] && !vis[u]) {
                    vis[u] = 1;
                    st.push_back(u);
                }
        }
        if (cnt != static_cast<int>(holding.size())) {
            res.ok = false;
            res.violation = TdViolation{"bags-disconnected", v, {-1, -1}};
            return res;
        }
    }

    // (ii) edge coverage.
    for (auto [u, v] : g.edge_list()) {
        bool covered = false;
        for (const auto& bag : td.bags)
            if (bag.contains(u) && bag.contains(v)) {
                covered = true;
                break;
            }
        if (!covered) {
            res.ok = false;
            res.violation = TdViolation{"edge-uncovered", -1, {u, v}};
            return res;
        }
    }
    return res;
}

}  // namespace hollow
