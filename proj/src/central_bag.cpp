#include "hollow/central_bag.hpp"

#include <algorithm>
#include <numeric>

namespace hollow {

VertexSet delta_set(const std::vector<CliquePair>& s, int v) {
    VertexSet out;
    for (const auto& p : s) {
        if (p.k1.contains(v)) out |= p.k1;
        if (p.k2.contains(v)) out |= p.k2;
    }
    return out;
}

Graph CentralBag::beta_graph(std::vector<int>* old_ids) const {
    return g_.induced(beta_, old_ids);
}

WeightFunction CentralBag::beta_weights() const {
    auto restricted = w_beta_.restricted(beta_);
    if (!restricted) throw Error("central bag carries no weight");
    return *restricted;
}

namespace {

// Shortest marker path from K1 to K2 with non-empty interior inside
// a_star; ties broken by the lexicographically smallest vertex sequence.
std::vector<int> find_marker(const Graph& g, const CliquePair& pair, VertexSet a_star) {
    std::optional<Path> best;
    for (int k1 : pair.k1.to_vector()) {
        for (int k2 : pair.k2.to_vector()) {
            if (g.adjacent(k1, k2)) continue;  // no induced path with interior
            VertexSet allowed = a_star | VertexSet::of({k1, k2});
            auto p = induced_path(g, k1, k2, allowed);
            if (!p) continue;
            if (!best || p->length() < best->length() ||
                (p->length() == best->length() &&
                 std::lexicographical_compare(p->vertices.begin(), p->vertices.end(),
                                              best->vertices.begin(), best->vertices.end())))
                best = *p;
        }
    }
    if (!best)
        throw NoMarkerPathError(
            "no K1–K2 path with interior in A*; component attachment hypothesis violated");
    return best->vertices;
}

}  // namespace

CentralBag build_central_bag(const Graph& g, const WeightFunction& w,
                             const std::vector<CliquePair>& s,
                             const std::optional<std::vector<int>>& pi_order) {
    CentralBag bag;
    bag.g_ = g;
    bag.family_ = s;
    bag.clique_bound_ = 1;
    for (const auto& p : s)
        bag.clique_bound_ = std::max({bag.clique_bound_, p.k1.size(), p.k2.size()});
    bag.delta_bound_ = 1;
    for (int v = 0; v < g.n(); ++v)
        bag.delta_bound_ = std::max(bag.delta_bound_, delta_set(s, v).size());

    if (s.empty()) {
        bag.beta_ = g.vertices();
        bag.intersection_part_ = g.vertices();
        bag.w_beta_ = w;
        return bag;
    }

    std::vector<CanonicalSeparation> seps;
    seps.reserve(s.size());
    for (const auto& p : s) seps.push_back(canonical_separation(g, w, p));

    for (std::size_t i = 0; i < seps.size(); ++i)
        for (std::size_t j = i + 1; j < seps.size(); ++j)
            if (!loosely_noncrossing(seps[i], seps[j]))
                throw CrossingPairsError("pairs " + std::to_string(i) + " and " +
                                         std::to_string(j) + " cross");

    // pi: positions in the given order; default sorts by the sequence
    // order of K1 ∪ K2, stable on the input order.
    std::vector<int> order(s.size());
    std::iota(order.begin(), order.end(), 0);
    if (pi_order) {
        if (pi_order->size() != s.size())
            throw InvalidArgumentError("pi order must list every pair exactly once");
        order = *pi_order;
    } else {
        std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
            return VertexSet::seq_less(s[static_cast<std::size_t>(i)].cut(),
                                       s[static_cast<std::size_t>(j)].cut());
        });
    }

    // Assign each component of the union of the A-sides to its pi-minimal
    // containing pair.
    VertexSet union_a;
    for (const auto& cs : seps) union_a |= cs.a;
    std::vector<VertexSet> a_star(s.size());
    for (const VertexSet& comp : components(g, union_a)) {
        bool placed = false;
        for (int idx : order) {
            if (comp.subset_of(seps[static_cast<std::size_t>(idx)].a)) {
                a_star[static_cast<std::size_t>(idx)] |= comp;
                placed = true;
                break;
            }
        }
        if (!placed)
            throw CrossingPairsError(
                "a component of the union of A-sides lies in no single A(K1,K2)");
    }

    VertexSet intersection = g.vertices();
    for (const auto& cs : seps) intersection &= cs.closure();

    VertexSet beta = intersection;
    std::vector<Nat> masses;
    masses.reserve(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v)
        masses.push_back(intersection.contains(v) ? w.mass(v) : Nat(0));

    for (std::size_t i = 0; i < s.size(); ++i) {
        if (a_star[i].empty()) continue;
        BagPair bp;
        bp.pair = s[i];
        bp.sep = seps[i];
        bp.a_star = a_star[i];
        bp.marker = find_marker(g, s[i], a_star[i]);
        bp.anchor = bp.marker[1];
        beta |= VertexSet::from(bp.marker);
        Nat star_mass(0);
        a_star[i].for_each([&](int v) { star_mass = star_mass + w.mass(v); });
        masses[static_cast<std::size_t>(bp.anchor)] = std::move(star_mass);
        bag.active_.push_back(std::move(bp));
    }

    bag.beta_ = beta;
    bag.intersection_part_ = intersection;
    bag.w_beta_ = WeightFunction::from_nat_masses(std::move(masses), w.total());
    return bag;
}

VertexSet lift_separator(const CentralBag& bag, VertexSet x) {
    if (!x.subset_of(bag.beta()))
        throw InvalidArgumentError("lift_separator: X must lie inside beta");
    VertexSet y;
    x.for_each([&](int v) {
        for (const BagPair& bp : bag.active_family()) {
            VertexSet interior = Path{bp.marker}.interior();
            if (interior.contains(v)) {
                y |= bp.pair.cut();
                return;
            }
        }
        y |= delta_set(bag.family(), v);
        y.add(v);
    });
    return y;
}

}  // namespace hollow
