#ifndef HOLLOW_TW_ORACLE_HPP
#define HOLLOW_TW_ORACLE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hollow/graph.hpp"

namespace hollow {

struct TreeDecomposition {
    std::vector<VertexSet> bags;                 // one per tree node
    std::vector<std::pair<int, int>> tree_edges;

    int width() const {
        int w = -1;
        for (const auto& b : bags) w = std::max(w, b.size() - 1);
        return w;
    }
};

inline constexpr int kDefaultTwCap = 18;

// Exact treewidth by dynamic programming over elimination-order prefixes,
// O(2^n poly).  Deterministic; throws SizeCapError above the cap.
int treewidth_exact(const Graph& g, int size_cap = kDefaultTwCap);

// A tree decomposition of width exactly treewidth_exact(g), reconstructed
// from the DP's elimination ordering.
TreeDecomposition tree_decomposition(const Graph& g, int size_cap = kDefaultTwCap);

struct TdViolation {
    std::string what;  // "not-a-tree" | "vertex-uncovered" | "edge-uncovered" | "bags-disconnected"
    int vertex = -1;
    std::pair<int, int> edge{-1, -1};
};

struct TdValidation {
    bool ok = true;
    std::optional<TdViolation> violation;
};

TdValidation validate_tree_decomposition(const Graph& g, const TreeDecomposition& td);

}  // namespace hollow

#endif
