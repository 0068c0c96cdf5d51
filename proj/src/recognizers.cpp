#include "hollow/recognizers.hpp"

#include "hollow/detail/path_enum.hpp"

#include <algorithm>

namespace hollow {

namespace {

SearchBudget& ensure(SearchBudget*& budget, SearchBudget& local) {
    if (!budget) budget = &local;
    return *budget;
}

template <typename F>
bool for_each_hole(const Graph& g, int max_length, SearchBudget& budget, F&& f) {
    for (int m = 0; m < g.n(); ++m) {
        std::vector<int> nbrs;
        g.neighbors(m).for_each([&](int v) {
            if (v > m) nbrs.push_back(v);
        });
        VertexSet above;
        for (int v = m + 1; v < g.n(); ++v) above.add(v);
        const VertexSet interior = (above - g.closed_neighbors(m));
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                const int x = nbrs[i], y = nbrs[j];
                if (g.adjacent(x, y)) continue;
                const int max_path_vertices = max_length == 0 ? 0 : max_length - 1;
                bool stop = detail::for_each_induced_path(
                    g, x, y, interior, max_path_vertices, budget,
                    [&](const std::vector<int>& path) {
                        Hole h;
                        h.vertices.reserve(path.size() + 1);
                        h.vertices.push_back(m);
                        h.vertices.insert(h.vertices.end(), path.begin(), path.end());
                        return f(h);
                    });
                if (stop) return true;
            }
        }
    }
    return false;
}

}  // namespace

bool is_hole(const Graph& g, const std::vector<int>& cyclic) {
    const int k = static_cast<int>(cyclic.size());
    if (k < 4) return false;
    VertexSet seen;
    for (int v : cyclic) {
        if (v < 0 || v >= g.n() || seen.contains(v)) return false;
        seen.add(v);
    }
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            const bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
            if (g.adjacent(cyclic[i], cyclic[j]) != consecutive) return false;
        }
    }
    return true;
}

std::vector<Hole> enumerate_holes(const Graph& g, int max_length, SearchBudget* budget) {
    SearchBudget local;
    SearchBudget& b = ensure(budget, local);
    std::vector<Hole> out;
    for_each_hole(g, max_length, b, [&](const Hole& h) {
        out.push_back(h);
        return false;
    });
    return out;
}

SparseCheck is_sparse(const Graph& g, SearchBudget* budget) {
    SearchBudget local;
    SearchBudget& b = ensure(budget, local);
    SparseCheck res;
    for_each_hole(g, 0, b, [&](const Hole& h) {
        const VertexSet hs = h.as_set();
        for (int v = 0; v < g.n(); ++v) {
            if (hs.contains(v)) continue;
            VertexSet inter = g.neighbors(v) & hs;
            const int c = inter.size();
            if (c <= 1) continue;
            bool ok = false;
            if (c == 2) {
                auto two = inter.to_vector();
                ok = g.adjacent(two[0], two[1]);  // chordless cycle: adjacent = consecutive
            }
            if (!ok) {
                res.sparse = false;
                res.hole = h;
                res.vertex = v;
                return true;
            }
        }
        return false;
    });
    return res;
}

const char* config_kind_name(ConfigKind kind) {
    switch (kind) {
        case ConfigKind::Diamond: return "diamond";
        case ConfigKind::Theta: return "theta";
        case ConfigKind::Pyramid: return "pyramid";
        case ConfigKind::Prism: return "prism";
        case ConfigKind::T1Wheel: return "T1-wheel";
        case ConfigKind::T2Wheel: return "T2-wheel";
        case ConfigKind::Wheel: return "wheel";
    }
    return "?";
}

namespace {

bool edges_between_exactly(const Graph& g, VertexSet xs, VertexSet ys,
                           const std::vector<std::pair<int, int>>& allowed) {
    bool ok = true;
    xs.for_each([&](int x) {
        (g.neighbors(x) & ys).for_each([&](int y) {
            for (auto [a, b] : allowed)
                if ((a == x && b == y) || (a == y && b == x)) return;
            ok = false;
        });
    });
    return ok;
}

}  // namespace

bool validate_witness(const Graph& g, const ConfigurationWitness& w) {
    switch (w.kind) {
        case ConfigKind::Diamond: {
            auto vs = w.vertices.to_vector();
            if (vs.size() != 4) return false;
            int edges = 0;
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = i + 1; j < 4; ++j)
                    edges += g.adjacent(vs[i], vs[j]);
            return edges == 5 && w.vertices.contains(w.end_a) &&
                   w.vertices.contains(w.end_b) && !g.adjacent(w.end_a, w.end_b);
        }
        case ConfigKind::Theta: {
            if (w.paths.size() != 3) return false;
            VertexSet all;
            for (const auto& p : w.paths) {
                if (static_cast<int>(p.size()) < 3) return false;  // length >= 2
                if (p.front() != w.end_a || p.back() != w.end_b) return false;
                if (!is_induced_path(g, p)) return false;
                all |= VertexSet::from(p);
            }
            for (int i = 0; i < 3; ++i) {
                for (int j = i + 1; j < 3; ++j) {
                    Path pi{w.paths[i]}, pj{w.paths[j]};
                    VertexSet ii = pi.interior(), ij = pj.interior();
                    if (ii.intersects(ij)) return false;
                    if (!is_anticomplete(g, ii, ij)) return false;
                }
            }
            return all == w.vertices;
        }
        case ConfigKind::Pyramid: {
            if (w.paths.size() != 3) return false;
            VertexSet all = VertexSet::single(w.apex);
            int short_paths = 0;
            for (int i = 0; i < 3; ++i) {
                const auto& p = w.paths[i];
                if (p.size() < 2) return false;
                if (p.front() != w.apex || p.back() != w.triangle_b[i]) return false;
                if (!is_induced_path(g, p)) return false;
                if (p.size() == 2) ++short_paths;
                all |= VertexSet::from(p);
            }
            if (short_paths > 1) return false;
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j) {
                    if (!g.adjacent(w.triangle_b[i], w.triangle_b[j])) return false;
                    VertexSet qi = VertexSet::from(w.paths[i]);
                    VertexSet qj = VertexSet::from(w.paths[j]);
                    qi.remove(w.apex);
                    qj.remove(w.apex);
                    if (qi.intersects(qj)) return false;
                    if (!edges_between_exactly(g, qi, qj,
                                               {{w.triangle_b[i], w.triangle_b[j]}}))
                        return false;
                }
            return all == w.vertices;
        }
        case ConfigKind::Prism: {
            if (w.paths.size() != 3) return false;
            VertexSet all;
            for (int i = 0; i < 3; ++i) {
                const auto& p = w.paths[i];
                if (p.size() < 2) return false;
                if (p.front() != w.triangle_a[i] || p.back() != w.triangle_b[i]) return false;
                if (!is_induced_path(g, p)) return false;
                all |= VertexSet::from(p);
            }
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j) {
                    if (!g.adjacent(w.triangle_a[i], w.triangle_a[j])) return false;
                    if (!g.adjacent(w.triangle_b[i], w.triangle_b[j])) return false;
                    VertexSet pi = VertexSet::from(w.paths[i]);
                    VertexSet pj = VertexSet::from(w.paths[j]);
                    if (pi.intersects(pj)) return false;
                    if (!edges_between_exactly(g, pi, pj,
                                               {{w.triangle_a[i], w.triangle_a[j]},
                                                {w.triangle_b[i], w.triangle_b[j]}}))
                        return false;
                }
            return all == w.vertices;
        }
        case ConfigKind::T1Wheel:
        case ConfigKind::T2Wheel:
        case ConfigKind::Wheel: {
            if (!is_hole(g, w.hole)) return false;
            VertexSet hs = VertexSet::from(w.hole);
            if (hs.contains(w.apex)) return false;
            VertexSet inter = g.neighbors(w.apex) & hs;
            if (w.kind == ConfigKind::T1Wheel) {
                if (inter.size() < 2) return false;
            } else if (w.kind == ConfigKind::Wheel) {
                if (inter.size() < 3) return false;
            } else {
                bool found = false;
                auto iv = inter.to_vector();
                for (std::size_t i = 0; i < iv.size() && !found; ++i)
                    for (std::size_t j = i + 1; j < iv.size() && !found; ++j)
                        if (!g.adjacent(iv[i], iv[j])) found = true;
                if (!found) return false;
            }
            return (hs | VertexSet::single(w.apex)) == w.vertices;
        }
    }
    return false;
}

namespace {

std::optional<ConfigurationWitness> find_diamond(const Graph& g, SearchBudget& budget) {
    const int n = g.n();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    budget.tick("diamond search");
                    int vs[4] = {a, b, c, d};
                    int edges = 0;
                    int miss_u = -1, miss_v = -1;
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j) {
                            if (g.adjacent(vs[i], vs[j])) ++edges;
                            else {
                                miss_u = vs[i];
                                miss_v = vs[j];
                            }
                        }
                    if (edges == 5) {
                        ConfigurationWitness w;
                        w.kind = ConfigKind::Diamond;
                        w.vertices = VertexSet::of({a, b, c, d});
                        w.end_a = miss_u;
                        w.end_b = miss_v;
                        return w;
                    }
                }
    return std::nullopt;
}

std::optional<ConfigurationWitness> find_theta(const Graph& g, SearchBudget& budget) {
    const int n = g.n();
    const VertexSet all = g.vertices();
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (g.adjacent(a, b)) continue;
            const VertexSet ends = VertexSet::of({a, b});
            std::optional<ConfigurationWitness> found;
            detail::for_each_induced_path(g, a, b, all - ends, 0, budget,
                [&](const std::vector<int>& p1) {
                    VertexSet i1 = Path{p1}.interior();
                    VertexSet allowed2 = all - ends - i1 - g.neighbors_of(i1);
                    return detail::for_each_induced_path(g, a, b, allowed2, 0, budget,
                        [&](const std::vector<int>& p2) {
                            VertexSet i2 = Path{p2}.interior();
                            VertexSet allowed3 = allowed2 - i2 - g.neighbors_of(i2);
                            return detail::for_each_induced_path(g, a, b, allowed3, 0, budget,
                                [&](const std::vector<int>& p3) {
                                    ConfigurationWitness w;
                                    w.kind = ConfigKind::Theta;
                                    w.end_a = a;
                                    w.end_b = b;
                                    w.paths = {p1, p2, p3};
                                    w.vertices = VertexSet::from(p1) |
                                                 VertexSet::from(p2) |
                                                 VertexSet::from(p3);
                                    found = w;
                                    return true;
                                });
                        });
                });
            if (found) return found;
        }
    }
    return std::nullopt;
}

std::vector<std::array<int, 3>> all_triangles(const Graph& g) {
    std::vector<std::array<int, 3>> out;
    for (int a = 0; a < g.n(); ++a)
        for (int b = a + 1; b < g.n(); ++b) {
            if (!g.adjacent(a, b)) continue;
            for (int c = b + 1; c < g.n(); ++c)
                if (g.adjacent(a, c) && g.adjacent(b, c)) out.push_back({a, b, c});
        }
    return out;
}

std::optional<ConfigurationWitness> find_pyramid(const Graph& g, SearchBudget& budget) {
    const VertexSet all = g.vertices();
    for (const auto& tri : all_triangles(g)) {
        const int b1 = tri[0], b2 = tri[1], b3 = tri[2];
        const VertexSet bset = VertexSet::of({b1, b2, b3});
        for (int a = 0; a < g.n(); ++a) {
            if (bset.contains(a)) continue;
            int direct = g.adjacent(a, b1) + g.adjacent(a, b2) + g.adjacent(a, b3);
            if (direct > 1) continue;
            budget.tick("pyramid search");
            VertexSet allowed1 =
                all - VertexSet::single(a) - g.closed_neighbors(b2) - g.closed_neighbors(b3);
            std::optional<ConfigurationWitness> found;
            detail::for_each_induced_path(g, a, b1, allowed1, 0, budget,
                [&](const std::vector<int>& p1) {
                    VertexSet q1 = VertexSet::from(p1);
                    q1.remove(a);
                    VertexSet allowed2 = all - VertexSet::single(a) - q1 -
                                         g.neighbors_of(q1) - g.closed_neighbors(b3);
                    return detail::for_each_induced_path(g, a, b2, allowed2, 0, budget,
                        [&](const std::vector<int>& p2) {
                            VertexSet q2 = VertexSet::from(p2);
                            q2.remove(a);
                            VertexSet allowed3 = all - VertexSet::single(a) - q1 -
                                                 g.neighbors_of(q1) - q2 - g.neighbors_of(q2);
                            return detail::for_each_induced_path(g, a, b3, allowed3, 0, budget,
                                [&](const std::vector<int>& p3) {
                                    ConfigurationWitness w;
                                    w.kind = ConfigKind::Pyramid;
                                    w.apex = a;
                                    w.triangle_b = {b1, b2, b3};
                                    w.paths = {p1, p2, p3};
                                    w.vertices = VertexSet::from(p1) | VertexSet::from(p2) |
                                                 VertexSet::from(p3);
                                    if (!validate_witness(g, w)) return false;
                                    found = w;
                                    return true;
                                });
                        });
                });
            if (found) return found;
        }
    }
    return std::nullopt;
}

std::optional<ConfigurationWitness> find_prism(const Graph& g, SearchBudget& budget) {
    const VertexSet all = g.vertices();
    auto triangles = all_triangles(g);
    for (std::size_t ti = 0; ti < triangles.size(); ++ti) {
        for (std::size_t tj = 0; tj < triangles.size(); ++tj) {
            if (ti == tj) continue;
            const auto& ta = triangles[ti];
            std::array<int, 3> tb = triangles[tj];
            VertexSet aset = VertexSet::of({ta[0], ta[1], ta[2]});
            VertexSet bset0 = VertexSet::of({tb[0], tb[1], tb[2]});
            if (aset.intersects(bset0)) continue;
            std::sort(tb.begin(), tb.end());
            do {
                budget.tick("prism search");
                bool cross_ok = true;
                for (int i = 0; i < 3 && cross_ok; ++i)
                    for (int j = 0; j < 3; ++j)
                        if (i != j && g.adjacent(ta[i], tb[j])) {
                            cross_ok = false;
                            break;
                        }
                if (!cross_ok) continue;
                VertexSet allowed1 = all;
                for (int k = 1; k < 3; ++k) {
                    allowed1 -= g.closed_neighbors(ta[k]);
                    allowed1 -= g.closed_neighbors(tb[k]);
                }
                allowed1.remove(ta[0]);
                allowed1.remove(tb[0]);
                std::optional<ConfigurationWitness> found;
                detail::for_each_induced_path(g, ta[0], tb[0], allowed1, 0, budget,
                    [&](const std::vector<int>& p1) {
                        VertexSet s1 = VertexSet::from(p1);
                        VertexSet allowed2 = all - s1 - g.neighbors_of(s1) -
                                             g.closed_neighbors(ta[2]) -
                                             g.closed_neighbors(tb[2]);
                        return detail::for_each_induced_path(g, ta[1], tb[1], allowed2, 0, budget,
                            [&](const std::vector<int>& p2) {
                                VertexSet s2 = VertexSet::from(p2);
                                VertexSet allowed3 = all - s1 - g.neighbors_of(s1) - s2 -
                                                     g.neighbors_of(s2);
                                return detail::for_each_induced_path(g, ta[2], tb[2], allowed3, 0,
                                                             budget,
                                    [&](const std::vector<int>& p3) {
                                        ConfigurationWitness w;
                                        w.kind = ConfigKind::Prism;
                                        w.triangle_a = {ta[0], ta[1], ta[2]};
                                        w.triangle_b = {tb[0], tb[1], tb[2]};
                                        w.paths = {p1, p2, p3};
                                        w.vertices = VertexSet::from(p1) |
                                                     VertexSet::from(p2) |
                                                     VertexSet::from(p3);
                                        if (!validate_witness(g, w)) return false;
                                        found = w;
                                        return true;
                                    });
                            });
                    });
                if (found) return found;
            } while (std::next_permutation(tb.begin(), tb.end()));
        }
    }
    return std::nullopt;
}

std::optional<ConfigurationWitness> find_wheel(const Graph& g, ConfigKind kind,
                                               SearchBudget& budget) {
    std::optional<ConfigurationWitness> found;
    for_each_hole(g, 0, budget, [&](const Hole& h) {
        const VertexSet hs = h.as_set();
        for (int v = 0; v < g.n(); ++v) {
            if (hs.contains(v)) continue;
            VertexSet inter = g.neighbors(v) & hs;
            if (inter.size() < 2) continue;
            bool ok = false;
            if (kind == ConfigKind::T1Wheel) {
                ok = true;
            } else if (kind == ConfigKind::Wheel) {
                ok = inter.size() >= 3;
            } else {
                auto iv = inter.to_vector();
                for (std::size_t i = 0; i < iv.size() && !ok; ++i)
                    for (std::size_t j = i + 1; j < iv.size() && !ok; ++j)
                        if (!g.adjacent(iv[i], iv[j])) ok = true;
            }
            if (ok) {
                ConfigurationWitness w;
                w.kind = kind;
                w.apex = v;
                w.hole = h.vertices;
                w.vertices = hs | VertexSet::single(v);
                found = w;
                return true;
            }
        }
        return false;
    });
    return found;
}

}  // namespace

std::optional<ConfigurationWitness> find_configuration(const Graph& g, ConfigKind kind,
                                                       SearchBudget* budget) {
    SearchBudget local;
    SearchBudget& b = ensure(budget, local);
    switch (kind) {
        case ConfigKind::Diamond: return find_diamond(g, b);
        case ConfigKind::Theta: return find_theta(g, b);
        case ConfigKind::Pyramid: return find_pyramid(g, b);
        case ConfigKind::Prism: return find_prism(g, b);
        case ConfigKind::T1Wheel: return find_wheel(g, ConfigKind::T1Wheel, b);
        case ConfigKind::T2Wheel: return find_wheel(g, ConfigKind::T2Wheel, b);
        case ConfigKind::Wheel: return find_wheel(g, ConfigKind::Wheel, b);
    }
    return std::nullopt;
}

ClassMembership class_membership(const Graph& g, int t, SearchBudget* budget) {
    if (t < 2) throw InvalidArgumentError("class_membership: t >= 2");
    SearchBudget local;
    SearchBudget& b = ensure(budget, local);
    ClassMembership m;
    m.sparse = is_sparse(g, &b).sparse;
    if (m.sparse) {
        const bool triangle_free = clique_number_at_most(g, 2);
        // pyramids and prisms contain triangles
        if (triangle_free) {
            m.very_sparse = true;
        } else {
            m.very_sparse = !find_configuration(g, ConfigKind::Pyramid, &b) &&
                            !find_configuration(g, ConfigKind::Prism, &b);
        }
        m.in_F = m.very_sparse;
        m.in_F_t = m.very_sparse && clique_number_at_most(g, t);
        m.in_F_2 = m.very_sparse && triangle_free;
    }
    return m;
}

namespace {

bool sees_all(const Graph& g, VertexSet h, int x1, int x2, int x3) {
    return g.neighbors(x1).intersects(h) && g.neighbors(x2).intersects(h) &&
           g.neighbors(x3).intersects(h);
}

bool connected_within(const Graph& g, VertexSet h) {
    if (h.empty()) return false;
    return component_of(g, h, h.min()) == h;
}

// Try outcome (i): H is a path whose ends attach to two of the terminals.
bool classify_path_outcome(const Graph& g, VertexSet h, const int xs[3],
                           MinimalConnector& out) {
    // order H as a path
    auto hv = h.to_vector();
    std::vector<int> order;
    if (hv.size() == 1) {
        order = hv;
    } else {
        int end = -1;
        for (int v : hv) {
            int deg = (g.neighbors(v) & h).size();
            if (deg > 2) return false;
            if (deg == 1 && end == -1) end = v;
            if (deg == 0) return false;
        }
        if (end == -1) return false;  // cycle
        order.push_back(end);
        VertexSet used = VertexSet::single(end);
        while (static_cast<int>(order.size()) < static_cast<int>(hv.size())) {
            VertexSet next = (g.neighbors(order.back()) & h) - used;
            if (next.size() != 1) return false;
            order.push_back(next.min());
            used.add(order.back());
        }
    }
    const int p_first = order.front(), p_last = order.back();
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            const int xi = xs[i], xj = xs[j];
            VertexSet ni = g.neighbors(xi) & h;
            VertexSet nj = g.neighbors(xj) & h;
            if (!(ni == VertexSet::single(p_first) && nj == VertexSet::single(p_last)))
                continue;
            const int xk = xs[3 - i - j];
            VertexSet nk = g.neighbors(xk) & h;
            bool k_ok = false;
            auto kv = nk.to_vector();
            for (std::size_t p = 0; p < kv.size() && !k_ok; ++p)
                for (std::size_t q = p + 1; q < kv.size() && !k_ok; ++q)
                    if (!g.adjacent(kv[p], kv[q])) k_ok = true;  // two non-adjacent
            if (!k_ok && nk.size() == 2 && g.adjacent(kv[0], kv[1])) k_ok = true;
            if (!k_ok) continue;
            out.outcome = ConnectorOutcome::PathOrHole;
            out.h_path = order;
            out.xi = xi;
            out.xj = xj;
            out.xk = xk;
            return true;
        }
    }
    return false;
}

// Extract the path from `from` into component `comp` ending adjacent to `to`;
// returns empty on failure.  comp must induce a path hanging off `from`.
std::vector<int> trace_path(const Graph& g, int from, VertexSet comp, int to) {
    std::vector<int> seq{from};
    if (comp.empty()) {
        if (!g.adjacent(from, to)) return {};
        seq.push_back(to);
        return seq;
    }
    VertexSet start = g.neighbors(from) & comp;
    if (start.size() != 1) return {};
    VertexSet used;
    int cur = start.min();
    while (true) {
        seq.push_back(cur);
        used.add(cur);
        VertexSet next = (g.neighbors(cur) & comp) - used;
        if (next.empty()) break;
        if (next.size() != 1) return {};
        cur = next.min();
    }
    if (used != comp) return {};
    if (!g.adjacent(seq.back(), to)) return {};
    seq.push_back(to);
    return seq;
}

bool classify_center_outcome(const Graph& g, VertexSet h, const int xs[3],
                             MinimalConnector& out) {
    auto hv = h.to_vector();
    for (int a : hv) {
        VertexSet rest = h;
        rest.remove(a);
        auto comps = components(g, rest);
        if (comps.size() > 3) continue;
        // assign each terminal either a component (path through it) or a
        // direct edge to a
        std::vector<int> assign(comps.size());
        bool done = false;
        // terminals choose among comps.size()+1 options (index comps.size() = direct)
        int choice[3];
        auto attempt = [&](auto&& self, int idx) -> bool {
            if (idx == 3) {
                // every component must be used exactly once
                std::vector<bool> used(comps.size(), false);
                for (int i = 0; i < 3; ++i) {
                    if (choice[i] < static_cast<int>(comps.size())) {
                        if (used[choice[i]]) return false;
                        used[choice[i]] = true;
                    }
                }
                for (bool u : used)
                    if (!u) return false;
                std::vector<std::vector<int>> paths(3);
                for (int i = 0; i < 3; ++i) {
                    VertexSet comp =
                        choice[i] < static_cast<int>(comps.size()) ? comps[choice[i]] : VertexSet();
                    paths[i] = trace_path(g, a, comp, xs[i]);
                    if (paths[i].empty() || !is_induced_path(g, paths[i])) return false;
                }
                // cross conditions: V(Pi)\{a} vs V(Pj)\{a}, only x_ix_j allowed
                for (int i = 0; i < 3; ++i)
                    for (int j = i + 1; j < 3; ++j) {
                        VertexSet qi = VertexSet::from(paths[i]);
                        VertexSet qj = VertexSet::from(paths[j]);
                        qi.remove(a);
                        qj.remove(a);
                        if (qi.intersects(qj)) return false;
                        if (!edges_between_exactly(g, qi, qj, {{xs[i], xs[j]}})) return false;
                    }
                out.outcome = ConnectorOutcome::ClawCenter;
                out.center = a;
                out.paths = paths;
                return true;
            }
            for (int c = 0; c <= static_cast<int>(comps.size()); ++c) {
                choice[idx] = c;
                if (self(self, idx + 1)) return true;
            }
            return false;
        };
        done = attempt(attempt, 0);
        if (done) return true;
    }
    return false;
}

bool classify_triangle_outcome(const Graph& g, VertexSet h, const int xs[3],
                               MinimalConnector& out) {
    auto hv = h.to_vector();
    for (std::size_t i = 0; i < hv.size(); ++i)
        for (std::size_t j = i + 1; j < hv.size(); ++j)
            for (std::size_t k = j + 1; k < hv.size(); ++k) {
                int t[3] = {hv[i], hv[j], hv[k]};
                if (!g.adjacent(t[0], t[1]) || !g.adjacent(t[0], t[2]) ||
                    !g.adjacent(t[1], t[2]))
                    continue;
                VertexSet rest = h - VertexSet::of({t[0], t[1], t[2]});
                auto comps = components(g, rest);
                if (comps.size() > 3) continue;
                int perm[3] = {0, 1, 2};
                std::sort(perm, perm + 3);
                do {
                    // triangle vertex t[perm[i]] pairs with terminal xs[i]
                    std::vector<int> order(3);
                    for (int q = 0; q < 3; ++q) order[q] = t[perm[q]];
                    std::vector<int> choice(3, -1);
                    // assign components to path slots (or direct edge)
                    auto attempt = [&](auto&& self, int idx) -> bool {
                        if (idx == 3) {
                            std::vector<bool> used(comps.size(), false);
                            for (int q = 0; q < 3; ++q)
                                if (choice[q] >= 0) {
                                    if (used[choice[q]]) return false;
                                    used[choice[q]] = true;
                                }
                            for (bool u : used)
                                if (!u) return false;
                            std::vector<std::vector<int>> paths(3);
                            for (int q = 0; q < 3; ++q) {
                                VertexSet comp = choice[q] >= 0 ? comps[choice[q]] : VertexSet();
                                paths[q] = trace_path(g, order[q], comp, xs[q]);
                                if (paths[q].empty() || !is_induced_path(g, paths[q]))
                                    return false;
                            }
                            for (int p = 0; p < 3; ++p)
                                for (int q = p + 1; q < 3; ++q) {
                                    VertexSet sp = VertexSet::from(paths[p]);
                                    VertexSet sq = VertexSet::from(paths[q]);
                                    if (sp.intersects(sq)) return false;
                                    if (!edges_between_exactly(
                                            g, sp, sq,
                                            {{order[p], order[q]}, {xs[p], xs[q]}}))
                                        return false;
                                }
                            out.outcome = ConnectorOutcome::Triangle;
                            out.triangle = {order[0], order[1], order[2]};
                            out.paths = paths;
                            return true;
                        }
                        for (int c = -1; c < static_cast<int>(comps.size()); ++c) {
                            choice[idx] = c;
                            if (self(self, idx + 1)) return true;
                        }
                        return false;
                    };
                    if (attempt(attempt, 0)) return true;
                } while (std::next_permutation(perm, perm + 3));
            }
    return false;
}

}  // namespace

MinimalConnector minimal_connector(const Graph& g, int x1, int x2, int x3) {
    if (x1 == x2 || x1 == x3 || x2 == x3)
        throw InvalidArgumentError("minimal_connector: terminals must be distinct");
    const VertexSet terminals = VertexSet::of({x1, x2, x3});
    VertexSet h;
    bool found = false;
    for (const VertexSet& comp : components(g, g.vertices() - terminals)) {
        if (sees_all(g, comp, x1, x2, x3)) {
            h = comp;
            found = true;
            break;
        }
    }
    if (!found) throw NoConnectorError("no component sees all three terminals");

    // greedy deletion in ascending id until inclusion-minimal
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v : h.to_vector()) {
            VertexSet trial = h;
            trial.remove(v);
            if (!trial.empty() && connected_within(g, trial) &&
                sees_all(g, trial, x1, x2, x3)) {
                h = trial;
                changed = true;
                break;
            }
        }
    }

    MinimalConnector out;
    out.h = h;
    const int xs[3] = {x1, x2, x3};
    if (classify_path_outcome(g, h, xs, out)) return out;
    if (classify_center_outcome(g, h, xs, out)) return out;
    if (classify_triangle_outcome(g, h, xs, out)) return out;
    throw Error("minimal_connector: no outcome of the classification matched");
}

int gamma(const Graph& g, int d) {
    if (d < 0) throw InvalidArgumentError("gamma: d >= 0");
    VertexSet high;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) >= d) high.add(v);
    int best = 0;
    high.for_each([&](int v) { best = std::max(best, (g.neighbors(v) & high).size()); });
    return best;
}

std::vector<Seagull> heavy_seagulls(const Graph& g) {
    std::vector<Seagull> out;
    for (int v = 0; v < g.n(); ++v) {
        auto nb = g.neighbors(v).to_vector();
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                const int a = nb[i], u = nb[j];
                if (g.adjacent(a, u)) continue;
                if (g.degree(a) > 2 && g.degree(u) > 2) out.push_back({a, v, u});
            }
    }
    return out;
}

}  // namespace hollow
