#include "hollow/corpus.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace hollow {

Graph gen_wall(int k) {
    if (k < 2) throw InvalidArgumentError("gen_wall: k >= 2");
    // present columns per row
    auto row_cols = [&](int r) {
        std::vector<int> cols;
        if (r == 0) {
            for (int c = 0; c < 2 * k; c += 2) cols.push_back(c);
        } else if (r == k - 1) {
            for (int c = k % 2 == 0 ? 0 : 1; c < 2 * k; c += 2) cols.push_back(c);
        } else {
            for (int c = 0; c < 2 * k; ++c) cols.push_back(c);
        }
        return cols;
    };
    std::vector<std::vector<int>> id(static_cast<std::size_t>(k),
                                     std::vector<int>(static_cast<std::size_t>(2 * k), -1));
    int n = 0;
    for (int r = 0; r < k; ++r)
        for (int c : row_cols(r)) id[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = n++;

    std::vector<std::pair<int, int>> edges;
    for (int r = 0; r < k; ++r) {
        auto cols = row_cols(r);
        for (std::size_t i = 0; i + 1 < cols.size(); ++i)
            edges.emplace_back(id[static_cast<std::size_t>(r)][static_cast<std::size_t>(cols[i])],
                               id[static_cast<std::size_t>(r)][static_cast<std::size_t>(cols[i + 1])]);
    }
    for (int r = 0; r + 1 < k; ++r) {
        for (int c = r % 2; c < 2 * k; c += 2) {
            int a = id[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            int b = id[static_cast<std::size_t>(r + 1)][static_cast<std::size_t>(c)];
            if (a >= 0 && b >= 0) edges.emplace_back(a, b);
        }
    }
    return Graph(n, edges);
}

Graph subdivide_edges(const Graph& g, const std::vector<int>& lengths) {
    auto edges = g.edge_list();
    if (lengths.size() != edges.size())
        throw InvalidArgumentError("subdivide_edges: one length per edge required");
    int n = g.n();
    for (int len : lengths) {
        if (len < 1) throw InvalidArgumentError("subdivide_edges: lengths >= 1");
        n += len - 1;
    }
    std::vector<std::pair<int, int>> out;
    int next = g.n();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        int prev = u;
        for (int j = 1; j < lengths[i]; ++j) {
            out.emplace_back(prev, next);
            prev = next++;
        }
        out.emplace_back(prev, v);
    }
    return Graph(n, out);
}

Graph gen_wall_subdivision(int k, const std::vector<int>& lengths) {
    return subdivide_edges(gen_wall(k), lengths);
}

Graph gen_wall_subdivision(int k, std::uint64_t seed, int min_len, int max_len) {
    if (min_len < 1 || max_len < min_len)
        throw InvalidArgumentError("gen_wall_subdivision: bad length range");
    Graph wall = gen_wall(k);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(min_len, max_len);
    std::vector<int> lengths(static_cast<std::size_t>(wall.m()));
    for (auto& l : lengths) l = dist(rng);
    return subdivide_edges(wall, lengths);
}

Graph gen_line_graph(const Graph& g) {
    auto edges = g.edge_list();
    const int n = static_cast<int>(edges.size());
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            auto [a, b] = edges[static_cast<std::size_t>(i)];
            auto [c, d] = edges[static_cast<std::size_t>(j)];
            if (a == c || a == d || b == c || b == d) out.emplace_back(i, j);
        }
    return Graph(n, out);
}

namespace {

// Append a path of `len` edges from `from` to `to`, interior freshly numbered.
void add_path(std::vector<std::pair<int, int>>& edges, int& next, int from, int to, int len) {
    int prev = from;
    for (int i = 1; i < len; ++i) {
        edges.emplace_back(prev, next);
        prev = next++;
    }
    edges.emplace_back(prev, to);
}

}  // namespace

Graph gen_theta(int l1, int l2, int l3) {
    for (int l : {l1, l2, l3})
        if (l < 2) throw InvalidArgumentError("gen_theta: path lengths must be >= 2");
    std::vector<std::pair<int, int>> edges;
    int next = 2;
    add_path(edges, next, 0, 1, l1);
    add_path(edges, next, 0, 1, l2);
    add_path(edges, next, 0, 1, l3);
    return Graph(next, edges);
}

Graph gen_prism(int l1, int l2, int l3) {
    for (int l : {l1, l2, l3})
        if (l < 1) throw InvalidArgumentError("gen_prism: path lengths must be >= 1");
    std::vector<std::pair<int, int>> edges{{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}};
    int next = 6;
    add_path(edges, next, 0, 3, l1);
    add_path(edges, next, 1, 4, l2);
    add_path(edges, next, 2, 5, l3);
    return Graph(next, edges);
}

Graph gen_pyramid(int l1, int l2, int l3) {
    for (int l : {l1, l2, l3})
        if (l < 1) throw InvalidArgumentError("gen_pyramid: path lengths must be >= 1");
    if ((l1 == 1) + (l2 == 1) + (l3 == 1) > 1)
        throw InvalidArgumentError("gen_pyramid: at most one path of length exactly 1");
    std::vector<std::pair<int, int>> edges{{1, 2}, {1, 3}, {2, 3}};
    int next = 4;
    add_path(edges, next, 0, 1, l1);
    add_path(edges, next, 0, 2, l2);
    add_path(edges, next, 0, 3, l3);
    return Graph(next, edges);
}

Graph gen_layered_grid(int rows, int cols, int apex_spacing) {
    if (rows < 1 || cols < 1 || apex_spacing < 1)
        throw InvalidArgumentError("gen_layered_grid: rows, cols, spacing >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c + 1 < cols; ++c)
            edges.emplace_back(r * cols + c, r * cols + c + 1);
    int next = rows * cols;
    for (int c = 0; c < cols; c += apex_spacing) {
        for (int r = 0; r < rows; ++r) edges.emplace_back(next, r * cols + c);
        ++next;
    }
    return Graph(next, edges);
}

Graph gen_cycle(int n) {
    if (n < 3) throw InvalidArgumentError("gen_cycle: n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

Graph gen_path(int n) {
    if (n < 1) throw InvalidArgumentError("gen_path: n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

Graph gen_complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, edges);
}

Graph gen_complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    return Graph(a + b, edges);
}

namespace {

Graph random_er(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) edges.emplace_back(i, j);
    return Graph(n, edges);
}

// A connected random core subdivided so every edge has length >= 3,
// padded to exactly n vertices.  Any such subdivision is sparse and
// triangle-free.
std::optional<Graph> random_subdivided_core(int n, std::mt19937_64& rng) {
    if (n < 12) return std::nullopt;
    std::uniform_int_distribution<int> core_size(4, std::max(4, n / 6));
    const int m = core_size(rng);
    Graph core = random_er(m, 2.5 / m, rng);
    if (!is_connected(core) || core.m() == 0) return std::nullopt;
    const int e = core.m();
    int extra = n - (m + 2 * e);
    if (extra < 0) return std::nullopt;
    std::vector<int> lengths(static_cast<std::size_t>(e), 3);
    std::uniform_int_distribution<int> pick(0, e - 1);
    while (extra > 0) {
        ++lengths[static_cast<std::size_t>(pick(rng))];
        --extra;
    }
    return subdivide_edges(core, lengths);
}

bool in_class(const Graph& g, GraphClass cls) {
    SearchBudget budget;
    switch (cls) {
        case GraphClass::Sparse: return is_sparse(g, &budget).sparse;
        case GraphClass::VerySparse: return class_membership(g, 2, &budget).very_sparse;
        case GraphClass::F2: return class_membership(g, 2, &budget).in_F_2;
    }
    return false;
}

}  // namespace

std::optional<Graph> random_class_sample(int n, GraphClass cls, std::uint64_t seed,
                                         int attempts) {
    std::mt19937_64 rng(seed);
    double p = 2.5 / std::max(1, n);
    for (int i = 0; i < attempts; ++i) {
        std::optional<Graph> g;
        if (i % 3 == 2) {
            g = random_subdivided_core(n, rng);
        } else {
            g = random_er(n, p, rng);
            p = std::max(0.8 / n, p * 0.93);
        }
        if (!g) continue;
        try {
            if (in_class(*g, cls)) return g;
        } catch (const BudgetExceededError&) {
            continue;
        }
    }
    return std::nullopt;
}

namespace {

void require(bool cond, std::size_t offset, const char* msg) {
    if (!cond) throw ParseError(offset, msg);
}

}  // namespace

Graph parse_graph(const std::string& text, GraphFormat format) {
    if (format == GraphFormat::EdgeList) {
        std::istringstream ss(text);
        long long n = -1, m = -1;
        if (!(ss >> n >> m)) throw ParseError(0, "edgelist: expected 'n m' header");
        require(n >= 0 && n <= VertexSet::kCapacity, 0, "edgelist: vertex count out of range");
        require(m >= 0, 0, "edgelist: negative edge count");
        std::vector<std::pair<int, int>> edges;
        for (long long i = 0; i < m; ++i) {
            long long u, v;
            const auto here = [&]() -> std::size_t {
                auto p = ss.tellg();
                return p < 0 ? text.size() : static_cast<std::size_t>(p);
            };
            if (!(ss >> u >> v)) throw ParseError(here(), "edgelist: truncated edge list");
            require(u >= 0 && u < n && v >= 0 && v < n && u != v, here(), "edgelist: bad edge");
            edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        }
        return Graph(static_cast<int>(n), edges);
    }

    // graph6
    std::string s = text;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    require(!s.empty(), 0, "graph6: empty input");
    std::size_t pos = 0;
    long long n;
    if (s[0] == '~') {
        require(s.size() >= 4, 1, "graph6: truncated long-form order");
        require(s[1] != '~', 1, "graph6: orders above 2^18 unsupported");
        n = 0;
        for (int i = 1; i <= 3; ++i) {
            require(s[static_cast<std::size_t>(i)] >= 63 && s[static_cast<std::size_t>(i)] <= 126,
                    static_cast<std::size_t>(i), "graph6: bad order byte");
            n = (n << 6) | (s[static_cast<std::size_t>(i)] - 63);
        }
        pos = 4;
    } else {
        require(s[0] >= 63 && s[0] <= 126, 0, "graph6: bad order byte");
        n = s[0] - 63;
        pos = 1;
    }
    require(n <= VertexSet::kCapacity, 0, "graph6: order exceeds the 128-vertex cap");
    const long long bits_needed = n * (n - 1) / 2;
    const std::size_t bytes_needed = static_cast<std::size_t>((bits_needed + 5) / 6);
    require(s.size() - pos == bytes_needed, pos, "graph6: wrong adjacency length");
    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            const std::size_t byte = pos + static_cast<std::size_t>(bit / 6);
            require(s[byte] >= 63 && s[byte] <= 126, byte, "graph6: bad adjacency byte");
            const int val = s[byte] - 63;
            if ((val >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    return Graph(static_cast<int>(n), edges);
}

std::string emit_graph(const Graph& g, GraphFormat format) {
    if (format == GraphFormat::EdgeList) {
        std::ostringstream out;
        out << g.n() << ' ' << g.m() << '\n';
        for (auto [u, v] : g.edge_list()) out << u << ' ' << v << '\n';
        return out.str();
    }
    std::string s;
    const int n = g.n();
    if (n <= 62) {
        s.push_back(static_cast<char>(n + 63));
    } else {
        s.push_back('~');
        s.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        s.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        s.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                s.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits) s.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return s;
}

}  // namespace hollow
