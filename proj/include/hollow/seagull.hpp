#ifndef HOLLOW_SEAGULL_HPP
#define HOLLOW_SEAGULL_HPP

#include <optional>
#include <string>
#include <vector>

#include "hollow/budget.hpp"
#include "hollow/central_bag.hpp"
#include "hollow/cutsets.hpp"
#include "hollow/recognizers.hpp"
#include "hollow/tw_oracle.hpp"
#include "hollow/weights.hpp"

namespace hollow {

struct ThetaThroughSeagull {
    ConfigurationWitness theta;  // paths[0] is P1 and contains the seagull
    int end_a;                   // the seagull end that is an end of the theta
    int other_end;
};

// A theta through the seagull a-v-u with a as an end and |P1| minimum,
// breadth-first in |P1| with lexicographic tie-break.
std::optional<ThetaThroughSeagull> find_theta_through(const Graph& g, int a, int v, int u,
                                                      SearchBudget* budget = nullptr);

enum class HypothesisState { Verified, Assumed, Violated };

struct HypothesisStatus {
    std::string name;
    HypothesisState state = HypothesisState::Verified;
    std::string detail;
};

struct BreakingPairOptions {
    bool run_fallback_always = false;  // compute the brute-force route too
    SearchBudget* budget = nullptr;
    // filled during the run
    std::vector<HypothesisStatus>* hypotheses_out = nullptr;
};

struct BreakingPairResult {
    CliquePair pair;                         // the returned breaking pair
    std::optional<CliquePair> constructive;  // constructive-route result, if it verified
    std::optional<CliquePair> fallback;      // brute-force result, if computed
};

// Breaking pair for a heavy seagull: an active pair whose A-side meets
// {a, u}, so no component of the cut graph keeps the whole seagull.
// Runs the constructive route (theta search, star-to-clique conversion,
// canonical separation, closure minimization) and falls back to a
// brute-force scan of the pool.
BreakingPairResult breaking_pair(const Graph& g, const WeightFunction& w, const Seagull& f,
                                 const std::vector<CliquePair>& pool,
                                 const BreakingPairOptions& options = {});

struct F2Report {
    std::vector<HypothesisStatus> hypotheses;
    std::vector<Seagull> seagulls;
    std::vector<CliquePair> breaking_pairs;  // aligned with seagulls
    std::vector<CliquePair> family;          // deduplicated S
    std::optional<CentralBag> bag;
    bool beta_seagull_free = false;
    int max_delta_on_beta = 0;
    bool delta_bound_ok = false;  // |delta_S(v)| <= 2 for all v in beta
    int breaking_runs_both = 0;
    int breaking_agreement = 0;  // runs where both routes satisfied the post-condition
    std::optional<int> tw_g;
    std::optional<int> tw_beta;
    bool tw_consistent = true;  // tw(G) <= 8(tw(beta)+1) when both known
};

struct PipelineOptions {
    std::uint64_t check_budget = 10'000'000;  // per hypothesis check
    std::uint64_t search_budget = 10'000'000; // per structural search
    int oracle_cap = kDefaultTwCap;
    bool run_fallback_always = true;
};

// The heavy-seagull pipeline: enumerate heavy seagulls, break each with an
// active pair, check pairwise loose non-crossing, build the central bag,
// and validate that beta is seagull-free with |delta| <= 2.
F2Report decompose_F2(const Graph& g, const WeightFunction& w,
                      const PipelineOptions& options = {});

enum class BlockKind { Complete, CliqueCut, F2Block };

struct BlockOutcome {
    VertexSet block;  // original vertex ids
    BlockKind kind;
    VertexSet cutset;      // CliqueCut: the clique produced by star_to_cliques
    int star_center = -1;  // CliqueCut: center of the star separation used
    std::optional<F2Report> f2;         // F2Block
    std::string f2_violation;           // F2Block whose hypotheses failed (stage tag)
    std::optional<int> tw_block;
};

struct DecomposeReport {
    ClassMembership input_class;
    std::vector<BlockOutcome> blocks;
    std::optional<int> tw_g;
    bool clique_cut_tw_consistent = true;  // tw(G) = max over leaf blocks, when known
};

// Full reduction chain: clique-cutset decomposition via star cutsets and
// the star-to-clique conversion, the complete | F_2 | star-cutset
// trichotomy, then decompose_F2 on the F_2 leaves.
DecomposeReport decompose(const Graph& g, int t, const WeightFunction& w,
                          const PipelineOptions& options = {});

}  // namespace hollow

#endif
