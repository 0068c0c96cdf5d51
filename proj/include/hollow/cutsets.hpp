#ifndef HOLLOW_CUTSETS_HPP
#define HOLLOW_CUTSETS_HPP

#include <optional>
#include <vector>

#include "hollow/graph.hpp"
#include "hollow/weights.hpp"

namespace hollow {

// Triple (A, C, B): disjoint, covering V(G), with A anticomplete to B.
struct Separation {
    VertexSet a, c, b;
};

bool is_valid_separation(const Graph& g, const Separation& s);

// Some separation whose cutset is a clique, or nullopt.  Scans cliques in
// lexicographic order; requires a connected input.
std::optional<Separation> find_clique_cutset(const Graph& g);

struct StarCutset {
    Separation sep;
    int center;
};

// A proper star separation with its center, if any exists.  The test per
// center is the component-attachment characterization, which is complete:
// a star cutset centered at v exists iff G - N[v] is disconnected, or its
// single component does not attach to all of N(v), or N[v] = V(G) and
// N(v) is not a clique.
std::optional<StarCutset> find_star_cutset(const Graph& g);

// The constructive star-to-clique conversion: given a separation with
// C inside the union of the centers' closed neighborhoods, produces
// cliques X_i = X ∩ N[v_i] whose union meets every D1–D2 path.
// Throws NotSparseError if some X_i is not a clique.
std::vector<VertexSet> star_to_cliques(const Graph& g, const Separation& sep,
                                       const std::vector<int>& centers, VertexSet d1,
                                       VertexSet d2);

// Unordered pair of distinct non-empty cliques, stored with the
// sequence-lexicographically smaller one first.
struct CliquePair {
    VertexSet k1, k2;

    static CliquePair make(const Graph& g, VertexSet k1, VertexSet k2,
                           int max_size = VertexSet::kCapacity);
    VertexSet cut() const { return k1 | k2; }
    bool operator==(const CliquePair&) const = default;
};

struct CanonicalSeparation {
    CliquePair pair;
    VertexSet a, b;
    Rational weight_of_b;

    VertexSet c() const { return pair.cut(); }
    VertexSet closure() const { return b | c(); }  // B ∪ K1 ∪ K2
};

// B is the unique component of G - (K1 ∪ K2) of weight > 1/2; throws
// NotUnbalancedError when no component qualifies or the maximum ties.
CanonicalSeparation canonical_separation(const Graph& g, const WeightFunction& w,
                                         const CliquePair& pair);

// Proper: some component of A attaches to all of K1 ∪ K2, and in the
// singleton-singleton case A ∪ K1 ∪ K2 is not a path between the two.
bool is_proper(const Graph& g, const WeightFunction& w, const CliquePair& pair);

// Active: proper and B ∪ K1 ∪ K2 minimal in the prescribed order over the
// pool (pairs with the same cut count as the same pair).
bool is_active(const Graph& g, const WeightFunction& w, const CliquePair& pair,
               const std::vector<CliquePair>& pool);

bool loosely_noncrossing(const CanonicalSeparation& s1, const CanonicalSeparation& s2);
bool noncrossing(const CanonicalSeparation& s1, const CanonicalSeparation& s2);

// Cached per-pair facts for pool scans: whether the pair is proper, and
// when it is, its cut, closure B ∪ C and heavy side B.
struct PairEvaluation {
    bool proper = false;
    VertexSet cut;
    VertexSet closure;
    VertexSet b;
};

PairEvaluation evaluate_clique_pair(const Graph& g, const WeightFunction& w,
                                    const CliquePair& pair);

// Activeness of `self` against pre-evaluated pool entries.
bool active_among(const PairEvaluation& self, const std::vector<PairEvaluation>& pool);

// All unordered pairs of distinct cliques of size <= max_size.
std::vector<CliquePair> all_clique_pairs(const Graph& g, int max_size);

// All active pairs over the full pool of clique pairs of size <= max_size.
std::vector<CliquePair> active_pairs(const Graph& g, const WeightFunction& w, int max_size);

}  // namespace hollow

#endif
