#ifndef HOLLOW_DETAIL_PATH_ENUM_HPP
#define HOLLOW_DETAIL_PATH_ENUM_HPP

#include <vector>

#include "hollow/budget.hpp"
#include "hollow/graph.hpp"

namespace hollow::detail {

// DFS over induced paths from s to t whose interior lies in
// `interior_allowed`, in lexicographic order of the vertex sequences.
// `max_vertices` = 0 means unbounded.  The callback returns true to stop
// the whole enumeration; the function returns whether it was stopped.
template <typename F>
bool for_each_induced_path(const Graph& g, int s, int t, VertexSet interior_allowed,
                           int max_vertices, SearchBudget& budget, F&& f) {
    if (s == t) return false;
    std::vector<int> path{s};
    std::vector<VertexSet> blocked_stack{VertexSet::single(s)};

    struct Frame {
        std::vector<int> candidates;
        std::size_t next = 0;
    };
    std::vector<Frame> stack;

    auto candidates_from = [&](int u, const VertexSet& blocked) {
        Frame fr;
        VertexSet cand = g.neighbors(u) - blocked;
        cand.for_each([&](int w) {
            if (w == t || (interior_allowed.contains(w) &&
                           (max_vertices == 0 ||
                            static_cast<int>(path.size()) + 1 < max_vertices)))
                fr.candidates.push_back(w);
        });
        return fr;
    };

    stack.push_back(candidates_from(s, blocked_stack.back()));
    while (!stack.empty()) {
        Frame& fr = stack.back();
        if (fr.next >= fr.candidates.size()) {
            stack.pop_back();
            path.pop_back();
            blocked_stack.pop_back();
            continue;
        }
        int w = fr.candidates[fr.next++];
        budget.tick("induced-path search");
        if (w == t) {
            if (!blocked_stack.back().contains(t)) {
                path.push_back(t);
                bool stop = f(path);
                path.pop_back();
                if (stop) return true;
            }
            continue;
        }
        const int u = path.back();
        VertexSet blocked = blocked_stack.back() | g.closed_neighbors(u);
        path.push_back(w);
        blocked_stack.push_back(blocked);
        stack.push_back(candidates_from(w, blocked));
    }
    return false;
}

// DFS over induced paths extending `seed` to exactly `total_vertices`
// vertices, with the new vertices drawn from `allowed`.  The seed itself
// must be an induced path.  Emits in lexicographic order of extensions.
template <typename F>
bool for_each_induced_extension(const Graph& g, const std::vector<int>& seed,
                                VertexSet allowed, int total_vertices,
                                SearchBudget& budget, F&& f) {
    if (static_cast<int>(seed.size()) == total_vertices) return f(seed);
    if (static_cast<int>(seed.size()) > total_vertices) return false;

    std::vector<int> path = seed;
    VertexSet blocked;
    for (std::size_t i = 0; i + 1 < seed.size(); ++i)
        blocked |= g.closed_neighbors(seed[i]);
    blocked |= VertexSet::from(seed);
    std::vector<VertexSet> blocked_stack{blocked};

    struct Frame {
        std::vector<int> candidates;
        std::size_t next = 0;
    };
    std::vector<Frame> stack;

    auto candidates_from = [&](int u, const VertexSet& blk) {
        Frame fr;
        ((g.neighbors(u) & allowed) - blk).for_each([&](int w) { fr.candidates.push_back(w); });
        return fr;
    };

    stack.push_back(candidates_from(path.back(), blocked_stack.back()));
    while (!stack.empty()) {
        Frame& fr = stack.back();
        if (fr.next >= fr.candidates.size()) {
            stack.pop_back();
            path.pop_back();
            blocked_stack.pop_back();
            continue;
        }
        int w = fr.candidates[fr.next++];
        budget.tick("induced-extension search");
        const int u = path.back();
        VertexSet blk = blocked_stack.back() | g.closed_neighbors(u);
        path.push_back(w);
        if (static_cast<int>(path.size()) == total_vertices) {
            bool stop = f(path);
            path.pop_back();
            if (stop) return true;
            continue;
        }
        blocked_stack.push_back(blk);
        stack.push_back(candidates_from(w, blk));
    }
    return false;
}

}  // namespace hollow::detail

#endif
