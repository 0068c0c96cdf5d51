#include "hollow/seagull.hpp"

#include <algorithm>

#include "hollow/detail/path_enum.hpp"

namespace hollow {

std::optional<ThetaThroughSeagull> find_theta_through(const Graph& g, int a, int v, int u,
                                                      SearchBudget* budget) {
    if (!is_induced_path(g, {a, v, u}))
        throw InvalidArgumentError("find_theta_through: a-v-u is not an induced path");
    SearchBudget local;
    SearchBudget& bud = budget ? *budget : local;
    const VertexSet all = g.vertices();
    const std::vector<int> seed{a, v, u};

    // breadth-first in |P1|: try every exact P1 length in increasing order
    for (int p1_vertices = 3; p1_vertices <= g.n(); ++p1_vertices) {
        std::optional<ThetaThroughSeagull> found;
        detail::for_each_induced_extension(
            g, seed, all, p1_vertices, bud, [&](const std::vector<int>& p1) {
                const int b = p1.back();
                VertexSet i1 = Path{p1}.interior();
                VertexSet ends = VertexSet::of({a, b});
                VertexSet allowed2 = all - ends - i1 - g.neighbors_of(i1);
                return detail::for_each_induced_path(
                    g, a, b, allowed2, 0, bud, [&](const std::vector<int>& p2) {
                        VertexSet i2 = Path{p2}.interior();
                        VertexSet allowed3 = allowed2 - i2 - g.neighbors_of(i2);
                        return detail::for_each_induced_path(
                            g, a, b, allowed3, 0, bud, [&](const std::vector<int>& p3) {
                                ConfigurationWitness wtn;
                                wtn.kind = ConfigKind::Theta;
                                wtn.end_a = a;
                                wtn.end_b = b;
                                wtn.paths = {p1, p2, p3};
                                wtn.vertices = VertexSet::from(p1) | VertexSet::from(p2) |
                                               VertexSet::from(p3);
                                if (!validate_witness(g, wtn)) return false;
                                found = ThetaThroughSeagull{wtn, a, b};
                                return true;
                            });
                    });
            });
        if (found) return found;
    }
    return std::nullopt;
}

namespace {

void note(std::vector<HypothesisStatus>* out, const std::string& name, HypothesisState st,
          const std::string& detail = "") {
    if (out) out->push_back({name, st, detail});
}

// Deterministic closure minimization: among proper pool pairs whose
// closure is contained in `limit`, pick an inclusion-minimal closure,
// then a maximal B, then the first in pool order.
std::optional<std::size_t> minimize_closure(const std::vector<PairEvaluation>& entries,
                                            VertexSet limit) {
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (entries[i].proper && entries[i].closure.subset_of(limit)) candidates.push_back(i);
    if (candidates.empty()) return std::nullopt;
    std::vector<std::size_t> minimal;
    for (std::size_t i : candidates) {
        bool dominated = false;
        for (std::size_t j : candidates)
            if (entries[j].closure.proper_subset_of(entries[i].closure)) {
                dominated = true;
                break;
            }
        if (!dominated) minimal.push_back(i);
    }
    for (std::size_t i : minimal) {
        bool beaten = false;
        for (std::size_t j : minimal)
            if (entries[j].closure == entries[i].closure &&
                entries[i].b.proper_subset_of(entries[j].b)) {
                beaten = true;
                break;
            }
        if (!beaten) return i;
    }
    return minimal.front();
}

bool breaking_postcondition(const Graph& g, const WeightFunction& w, const CliquePair& pair,
                            const std::vector<PairEvaluation>& entries, const Seagull& f) {
    PairEvaluation self = evaluate_clique_pair(g, w, pair);
    if (!self.proper || !active_among(self, entries)) return false;
    VertexSet a_side = g.vertices() - self.closure;
    return a_side.contains(f.a) || a_side.contains(f.u);
}

}  // namespace

BreakingPairResult breaking_pair(const Graph& g, const WeightFunction& w, const Seagull& f,
                                 const std::vector<CliquePair>& pool,
                                 const BreakingPairOptions& options) {
    SearchBudget local;
    SearchBudget& bud = options.budget ? *options.budget : local;
    auto* hyp = options.hypotheses_out;

    // hypothesis: F is a heavy seagull
    if (!is_induced_path(g, {f.a, f.v, f.u}) || g.degree(f.a) <= 2 || g.degree(f.u) <= 2)
        throw HypothesisViolatedError("seagull-not-heavy", "F is not a heavy seagull");

    // hypothesis: (G,w) 4-unbalanced, checked within budget
    try {
        SearchBudget check{bud.limit};
        if (!is_unbalanced(g, w, 4, &check))
            throw HypothesisViolatedError("not-4-unbalanced",
                                          "(G,w) has a (w,1/2)-balanced separator of size <= 4");
        note(hyp, "4-unbalanced", HypothesisState::Verified);
    } catch (const BudgetExceededError&) {
        note(hyp, "4-unbalanced", HypothesisState::Assumed, "check exceeds budget");
    }

    // hypothesis: no star cutset
    if (auto sc = find_star_cutset(g))
        throw HypothesisViolatedError("star-cutset", "G admits a star cutset");
    note(hyp, "no-star-cutset", HypothesisState::Verified);

    // hypothesis: G in F_2
    {
        SearchBudget class_budget{bud.limit};
        auto cm = class_membership(g, 2, &class_budget);
        if (!cm.in_F_2)
            throw HypothesisViolatedError("not-in-F2", "G is not a very sparse triangle-free graph");
        note(hyp, "in-F2", HypothesisState::Verified);
    }

    std::vector<PairEvaluation> entries;
    entries.reserve(pool.size());
    for (const auto& p : pool) entries.push_back(evaluate_clique_pair(g, w, p));

    BreakingPairResult result{CliquePair{}, std::nullopt, std::nullopt};

    // Constructive route; failures fall through to the brute-force scan,
    // and only a double failure raises.
    auto constructive = [&]() -> std::optional<CliquePair> {
        std::optional<ThetaThroughSeagull> theta;
        for (auto [end, other] : {std::pair{f.a, f.u}, std::pair{f.u, f.a}}) {
            theta = find_theta_through(g, end, f.v, other, &bud);
            if (theta) {
                const int bprime = theta->other_end;
                const int a_end = end;
                const int u_other = other;
                VertexSet cut = (g.closed_neighbors(bprime) | g.closed_neighbors(f.v)) -
                                VertexSet::of({a_end, u_other});
                VertexSet rest = g.vertices() - cut;
                VertexSet d_a = component_of(g, rest, a_end);
                if (d_a.contains(u_other)) return std::nullopt;  // breakau violated
                VertexSet d_u = component_of(g, rest, u_other);
                Separation sep{d_a, cut, rest - d_a};
                auto cliques = star_to_cliques(g, sep, {bprime, f.v}, d_a, d_u);
                if (cliques.size() != 2 || cliques[0].empty() || cliques[1].empty() ||
                    cliques[0] == cliques[1])
                    return std::nullopt;
                CliquePair xy = CliquePair::make(g, cliques[0], cliques[1]);
                CanonicalSeparation cs0 = canonical_separation(g, w, xy);
                int p = -1;
                if (cs0.a.contains(a_end)) p = a_end;
                else if (cs0.a.contains(u_other)) p = u_other;
                if (p < 0) return std::nullopt;
                VertexSet d = component_of(g, cs0.a, p);
                VertexSet nd = g.neighbors_of(d);
                VertexSet k1 = nd & cliques[0];
                VertexSet k2 = nd - cliques[0];
                if (k1.empty() || k2.empty()) return std::nullopt;
                CliquePair base = CliquePair::make(g, k1, k2);
                PairEvaluation base_eval = evaluate_clique_pair(g, w, base);
                if (!base_eval.proper) return std::nullopt;
                auto idx = minimize_closure(entries, base_eval.closure);
                if (!idx) return std::nullopt;
                return pool[*idx];
            }
        }
        return std::nullopt;
    };

    std::optional<CliquePair> cons;
    try {
        cons = constructive();
    } catch (const NotUnbalancedError&) {
        cons = std::nullopt;  // canonical separation for {X,Y} undefined
    } catch (const NotSparseError&) {
        cons = std::nullopt;
    }
    if (cons && breaking_postcondition(g, w, *cons, entries, f)) result.constructive = cons;

    if (!result.constructive || options.run_fallback_always) {
        for (std::size_t i = 0; i < pool.size(); ++i) {
            if (!entries[i].proper) continue;
            if (!active_among(entries[i], entries)) continue;
            VertexSet a_side = g.vertices() - entries[i].closure;
            if (a_side.contains(f.a) || a_side.contains(f.u)) {
                result.fallback = pool[i];
                break;
            }
        }
    }

    if (result.constructive) result.pair = *result.constructive;
    else if (result.fallback) result.pair = *result.fallback;
    else
        throw Error(
            "breaking_pair: neither construction nor fallback produced an active pair "
            "meeting the seagull; hypothesis violated or pool too small");
    return result;
}

namespace {

WeightFunction weights_for_block(const Graph& block, const WeightFunction& w,
                                 VertexSet block_set) {
    if (auto r = w.restricted(block_set)) return *r;
    return WeightFunction::uniform(block.n());
}

}  // namespace

F2Report decompose_F2(const Graph& g, const WeightFunction& w, const PipelineOptions& options) {
    F2Report report;
    if (!is_connected(g))
        throw HypothesisViolatedError("disconnected", "decompose_F2 requires a connected graph");

    report.seagulls = heavy_seagulls(g);

    if (!report.seagulls.empty()) {
        // hypothesis: 4-unbalanced (cheap side of the breaking machinery)
        try {
            SearchBudget check{options.check_budget};
            if (!is_unbalanced(g, w, 4, &check))
                throw HypothesisViolatedError("not-4-unbalanced",
                                              "a (w,1/2)-balanced separator of size <= 4 exists");
            report.hypotheses.push_back({"4-unbalanced", HypothesisState::Verified, ""});
        } catch (const BudgetExceededError&) {
            report.hypotheses.push_back(
                {"4-unbalanced", HypothesisState::Assumed, "check exceeds budget"});
        }
        if (find_star_cutset(g))
            throw HypothesisViolatedError("star-cutset", "G admits a star cutset");
        report.hypotheses.push_back({"no-star-cutset", HypothesisState::Verified, ""});
        {
            SearchBudget class_budget{options.search_budget};
            auto cm = class_membership(g, 2, &class_budget);
            if (!cm.in_F_2)
                throw HypothesisViolatedError("not-in-F2", "G is not in F_2");
            report.hypotheses.push_back({"in-F2", HypothesisState::Verified, ""});
        }
        try {
            SearchBudget check{options.check_budget};
            if (!is_unbalanced(g, w, 8, &check))
                report.hypotheses.push_back(
                    {"8-unbalanced", HypothesisState::Violated,
                     "loose non-crossing is checked directly instead"});
            else
                report.hypotheses.push_back({"8-unbalanced", HypothesisState::Verified, ""});
        } catch (const BudgetExceededError&) {
            report.hypotheses.push_back(
                {"8-unbalanced", HypothesisState::Assumed, "check exceeds budget"});
        }

        const auto pool = all_clique_pairs(g, 2);
        for (const Seagull& f : report.seagulls) {
            BreakingPairOptions bp_options;
            SearchBudget bud{options.search_budget};
            bp_options.budget = &bud;
            bp_options.run_fallback_always = options.run_fallback_always;
            BreakingPairResult r = breaking_pair(g, w, f, pool, bp_options);
            report.breaking_pairs.push_back(r.pair);
            if (r.constructive && r.fallback) {
                ++report.breaking_runs_both;
                ++report.breaking_agreement;  // both verified the post-condition
            }
        }
        // S is a set: deduplicate
        for (const auto& p : report.breaking_pairs) {
            if (std::find(report.family.begin(), report.family.end(), p) ==
                report.family.end())
                report.family.push_back(p);
        }
    }

    try {
        report.bag = build_central_bag(g, w, report.family);
    } catch (const CrossingPairsError& e) {
        throw HypothesisViolatedError("crossing-pairs", e.what());
    } catch (const NoMarkerPathError& e) {
        throw HypothesisViolatedError("no-marker-path", e.what());
    }

    const CentralBag& bag = *report.bag;
    Graph beta = bag.beta_graph();
    report.beta_seagull_free = heavy_seagulls(beta).empty();
    report.max_delta_on_beta = 0;
    bag.beta().for_each([&](int v) {
        report.max_delta_on_beta =
            std::max(report.max_delta_on_beta, delta_set(report.family, v).size());
    });
    report.delta_bound_ok = report.max_delta_on_beta <= 2;

    if (g.n() <= options.oracle_cap) report.tw_g = treewidth_exact(g, options.oracle_cap);
    if (beta.n() <= options.oracle_cap)
        report.tw_beta = treewidth_exact(beta, options.oracle_cap);
    if (report.tw_g && report.tw_beta)
        report.tw_consistent = *report.tw_g <= 8 * (*report.tw_beta + 1);
    return report;
}

DecomposeReport decompose(const Graph& g, int t, const WeightFunction& w,
                          const PipelineOptions& options) {
    DecomposeReport report;
    {
        SearchBudget class_budget{options.search_budget};
        report.input_class = class_membership(g, t, &class_budget);
        if (!report.input_class.in_F_t)
            throw HypothesisViolatedError("not-in-F_t", "decompose requires G in F_t");
    }
    if (g.n() <= options.oracle_cap) report.tw_g = treewidth_exact(g, options.oracle_cap);

    std::vector<VertexSet> queue;
    for (const VertexSet& comp : components(g, g.vertices())) queue.push_back(comp);

    while (!queue.empty()) {
        VertexSet block_set = queue.back();
        queue.pop_back();
        std::vector<int> old_ids;
        Graph block = g.induced(block_set, &old_ids);
        BlockOutcome outcome;
        outcome.block = block_set;
        if (block.n() <= options.oracle_cap)
            outcome.tw_block = treewidth_exact(block, options.oracle_cap);

        const bool complete = block.m() == block.n() * (block.n() - 1) / 2;
        if (complete) {
            outcome.kind = BlockKind::Complete;
            report.blocks.push_back(std::move(outcome));
            continue;
        }
        if (auto star = find_star_cutset(block)) {
            VertexSet d1 = components(block, star->sep.a)[0];
            VertexSet d2 = components(block, star->sep.b)[0];
            auto cliques = star_to_cliques(block, star->sep, {star->center}, d1, d2);
            const VertexSet x1 = cliques[0];
            outcome.kind = BlockKind::CliqueCut;
            outcome.star_center = old_ids[static_cast<std::size_t>(star->center)];
            x1.for_each([&](int v) { outcome.cutset.add(old_ids[static_cast<std::size_t>(v)]); });
            for (const VertexSet& comp : components(block, block.vertices() - x1)) {
                VertexSet child;
                (comp | x1).for_each(
                    [&](int v) { child.add(old_ids[static_cast<std::size_t>(v)]); });
                queue.push_back(child);
            }
            report.blocks.push_back(std::move(outcome));
            continue;
        }
        // No star cutset: by the trichotomy the block must be complete or
        // triangle-free; a triangle here means the input was not in F.
        if (!clique_number_at_most(block, 2))
            throw HypothesisViolatedError(
                "trichotomy-violated",
                "block with a triangle, no star cutset, and not complete");
        outcome.kind = BlockKind::F2Block;
        WeightFunction wb = weights_for_block(block, w, block_set);
        try {
            outcome.f2 = decompose_F2(block, wb, options);
        } catch (const HypothesisViolatedError& e) {
            outcome.f2_violation = e.stage;
        }
        report.blocks.push_back(std::move(outcome));
    }

    // clique-cutset decomposition preserves treewidth: check where known
    if (report.tw_g) {
        int max_leaf = -1;
        bool all_known = true;
        for (const auto& b : report.blocks) {
            if (b.kind == BlockKind::CliqueCut) continue;
            if (b.tw_block) max_leaf = std::max(max_leaf, *b.tw_block);
            else all_known = false;
        }
        if (all_known && max_leaf >= 0)
            report.clique_cut_tw_consistent = (*report.tw_g == max_leaf);
    }
    return report;
}

}  // namespace hollow
