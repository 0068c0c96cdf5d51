#ifndef HOLLOW_WEIGHTS_HPP
#define HOLLOW_WEIGHTS_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hollow/budget.hpp"
#include "hollow/graph.hpp"
#include "hollow/rational.hpp"

namespace hollow {

// Exact rational vertex weights summing to 1.  Internally the weights are
// kept over a common denominator so component sums are integer adds.
class WeightFunction {
public:
    static WeightFunction uniform(int n);
    // Normalizes integer masses (total must be positive).
    static WeightFunction from_masses(const std::vector<std::uint64_t>& masses);
    // Validates the sum is exactly 1.
    static WeightFunction from_rationals(const std::vector<Rational>& weights);
    // Masses over an explicit common denominator; must sum to it exactly.
    static WeightFunction from_nat_masses(std::vector<Nat> masses, Nat total);

    int n() const { return static_cast<int>(masses_.size()); }
    Rational weight(int v) const { return Rational(masses_[v], total_); }
    Rational weight_of(VertexSet x) const;

    const Nat& mass(int v) const { return masses_[v]; }
    const Nat& total() const { return total_; }

    // True iff 2 * mass(X) > total, i.e. w(X) > 1/2.
    bool heavier_than_half(VertexSet x) const;
    // True iff mass(X) * c_den <= c_num * total, i.e. w(X) <= c.
    bool at_most(VertexSet x, const Rational& c) const;

    // Restriction to X, renormalized; nullopt when w(X) = 0.
    std::optional<WeightFunction> restricted(VertexSet x) const;

private:
    WeightFunction(std::vector<Nat> masses, Nat total)
        : masses_(std::move(masses)), total_(std::move(total)) {
        init_fast_path();
    }

    void init_fast_path();
    Nat mass_of(VertexSet x) const;

    std::vector<Nat> masses_;
    Nat total_;
    // u64 mirror when every mass and the total fit; component sums then
    // run on machine words
    bool small_ = false;
    std::vector<std::uint64_t> m64_;
    std::uint64_t total64_ = 0;
};

struct BalancedSeparatorResult {
    VertexSet separator;
    Rational max_component_weight;
};

// Minimum-size (w,c)-balanced separator of size <= size_cap, exhaustive
// by increasing size with lexicographic tie-break; nullopt if none.
std::optional<BalancedSeparatorResult> min_balanced_separator(
    const Graph& g, const WeightFunction& w, const Rational& c, int size_cap,
    SearchBudget* budget = nullptr);

// No (w,1/2)-balanced separator of size at most d.
bool is_unbalanced(const Graph& g, const WeightFunction& w, int d,
                   SearchBudget* budget = nullptr);

struct BsToTwReport {
    int samples_total = 0;
    int samples_with_separator = 0;
    bool hypothesis_held = false;  // every sampled weight admitted a separator
    int treewidth = -1;
    Rational bound;                // k / (1 - c)
    bool violation = false;        // hypothesis held but tw exceeds the bound
};

// Samples weight functions (per-vertex point masses, uniform, `weight_samples`
// random ones) and checks the separator-to-treewidth direction.  Sampling
// only weakens the hypothesis side, so a reported violation is a real bug.
BsToTwReport check_bs_to_tw(const Graph& g, int k, const Rational& c,
                            int weight_samples, std::uint64_t seed,
                            int tw_cap = 18, SearchBudget* budget = nullptr);

// tw(G) <= k implies a (w,c)-balanced separator of size <= k+1 exists.
bool check_tw_to_separator(const Graph& g, const WeightFunction& w, const Rational& c,
                           int tw_cap = 18, SearchBudget* budget = nullptr);

// Integer masses 0..2^16 per vertex, normalized; exact and tie-averse.
WeightFunction random_weights(int n, std::mt19937_64& rng);

// One line per vertex: "<vertex-id> <numerator>/<denominator>"; missing
// vertices weigh 0; the total must be exactly 1.
WeightFunction parse_weights(const std::string& text, int n);
std::string emit_weights(const WeightFunction& w);

}  // namespace hollow

#endif
