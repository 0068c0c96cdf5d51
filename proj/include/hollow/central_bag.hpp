#ifndef HOLLOW_CENTRAL_BAG_HPP
#define HOLLOW_CENTRAL_BAG_HPP

#include <optional>
#include <vector>

#include "hollow/cutsets.hpp"
#include "hollow/graph.hpp"
#include "hollow/weights.hpp"

namespace hollow {

// Union of all cliques of pairs in S that contain v.
VertexSet delta_set(const std::vector<CliquePair>& s, int v);

struct BagPair {
    CliquePair pair;
    CanonicalSeparation sep;
    VertexSet a_star;
    std::vector<int> marker;  // path from a K1-vertex to a K2-vertex
    int anchor;               // marker vertex adjacent to the K1-end
};

// The central bag beta for a pairwise loosely non-crossing family, with
// marker paths, anchors and the inherited weight function w_beta (carried
// over the original vertex ids; zero outside beta).
class CentralBag {
public:
    const Graph& graph() const { return g_; }
    const std::vector<CliquePair>& family() const { return family_; }
    const std::vector<BagPair>& active_family() const { return active_; }  // S'
    VertexSet beta() const { return beta_; }
    const WeightFunction& w_beta() const { return w_beta_; }
    VertexSet intersection_part() const { return intersection_part_; }
    int clique_bound() const { return clique_bound_; }  // K
    int delta_bound() const { return delta_bound_; }    // max(1, max |delta_S(v)|)

    // Induced subgraph on beta with the matching reindexed weights.
    Graph beta_graph(std::vector<int>* old_ids = nullptr) const;
    WeightFunction beta_weights() const;

private:
    friend CentralBag build_central_bag(const Graph&, const WeightFunction&,
                                        const std::vector<CliquePair>&,
                                        const std::optional<std::vector<int>>&);
    friend VertexSet lift_separator(const CentralBag&, VertexSet);

    Graph g_;
    std::vector<CliquePair> family_;
    std::vector<BagPair> active_;
    VertexSet beta_;
    VertexSet intersection_part_;  // beta minus marker-path interiors
    WeightFunction w_beta_ = WeightFunction::uniform(1);
    int clique_bound_ = 1;
    int delta_bound_ = 1;
};

// Builds the bag: canonical separations for every pair (checked pairwise
// loosely non-crossing), A* assignment by the pi-minimal pair, shortest
// marker paths with lexicographic tie-break, anchors next to the K1-end,
// and the inherited weights.  pi_order, when given, lists pair indexes
// from pi-smallest to pi-largest; the default order compares the sorted
// vertex sequence of K1 ∪ K2.
CentralBag build_central_bag(const Graph& g, const WeightFunction& w,
                             const std::vector<CliquePair>& s,
                             const std::optional<std::vector<int>>& pi_order = std::nullopt);

// The separator lift: X ⊆ beta maps to Y = ∪ Y(x) where marker-interior
// vertices contribute their pair's K1 ∪ K2 and intersection-part vertices
// contribute delta_S(x) ∪ {x}.  |Y| <= max(2K,Δ)·|X|.
VertexSet lift_separator(const CentralBag& bag, VertexSet x);

}  // namespace hollow

#endif
