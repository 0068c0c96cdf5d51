#include "hollow/weights.hpp"

#include <sstream>

#include "hollow/tw_oracle.hpp"

namespace hollow {

WeightFunction WeightFunction::uniform(int n) {
    if (n <= 0) throw InvalidArgumentError("uniform weights need n >= 1");
    return WeightFunction(std::vector<Nat>(static_cast<std::size_t>(n), Nat(1)), Nat(static_cast<std::uint64_t>(n)));
}

WeightFunction WeightFunction::from_masses(const std::vector<std::uint64_t>& masses) {
    Nat total(0);
    std::vector<Nat> ms;
    ms.reserve(masses.size());
    for (std::uint64_t m : masses) {
        ms.emplace_back(m);
        total = total + Nat(m);
    }
    if (total.is_zero()) throw InvalidArgumentError("total mass must be positive");
    return WeightFunction(std::move(ms), std::move(total));
}

WeightFunction WeightFunction::from_rationals(const std::vector<Rational>& weights) {
    // common denominator = lcm of the denominators
    Nat lcm(1);
    for (const auto& w : weights) {
        if (w.negative()) throw InvalidArgumentError("weights must be non-negative");
        Nat g = Nat::gcd(lcm, w.den());
        lcm = Nat::divmod(lcm, g).first * w.den();
    }
    std::vector<Nat> ms;
    Nat total(0);
    for (const auto& w : weights) {
        Nat scale = Nat::divmod(lcm, w.den()).first;
        Nat m = w.num() * scale;
        total = total + m;
        ms.push_back(std::move(m));
    }
    if (Nat::cmp(total, lcm) != 0)
        throw InvalidArgumentError("weights must sum to exactly 1");
    return WeightFunction(std::move(ms), std::move(lcm));
}

WeightFunction WeightFunction::from_nat_masses(std::vector<Nat> masses, Nat total) {
    Nat sum(0);
    for (const auto& m : masses) sum = sum + m;
    if (Nat::cmp(sum, total) != 0)
        throw InvalidArgumentError("masses must sum to the stated total");
    if (total.is_zero()) throw InvalidArgumentError("total mass must be positive");
    return WeightFunction(std::move(masses), std::move(total));
}

void WeightFunction::init_fast_path() {
    // headroom so 2*mass and cross products in unsigned __int128 are safe
    const std::uint64_t cap = std::uint64_t(1) << 62;
    if (!total_.fits_u64() || total_.to_u64() > cap) return;
    m64_.reserve(masses_.size());
    for (const Nat& m : masses_) {
        if (!m.fits_u64() || m.to_u64() > cap) return;
        m64_.push_back(m.to_u64());
    }
    total64_ = total_.to_u64();
    small_ = true;
}

Nat WeightFunction::mass_of(VertexSet x) const {
    Nat sum(0);
    x.for_each([&](int v) { sum = sum + masses_[v]; });
    return sum;
}

Rational WeightFunction::weight_of(VertexSet x) const { return Rational(mass_of(x), total_); }

bool WeightFunction::heavier_than_half(VertexSet x) const {
    if (small_) {
        std::uint64_t sum = 0;
        x.for_each([&](int v) { sum += m64_[static_cast<std::size_t>(v)]; });
        return 2 * (unsigned __int128)sum > (unsigned __int128)total64_;
    }
    Nat twice = mass_of(x);
    twice.shl1();
    return Nat::cmp(twice, total_) > 0;
}

bool WeightFunction::at_most(VertexSet x, const Rational& c) const {
    if (small_ && c.num().fits_u64() && c.den().fits_u64()) {
        std::uint64_t sum = 0;
        x.for_each([&](int v) { sum += m64_[static_cast<std::size_t>(v)]; });
        return (unsigned __int128)sum * c.den().to_u64() <=
               (unsigned __int128)c.num().to_u64() * total64_;
    }
    return Nat::cmp(mass_of(x) * c.den(), c.num() * total_) <= 0;
}

std::optional<WeightFunction> WeightFunction::restricted(VertexSet x) const {
    std::vector<Nat> ms;
    Nat total(0);
    auto members = x.to_vector();
    ms.resize(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
        ms[i] = masses_[members[i]];
        total = total + ms[i];
    }
    if (total.is_zero()) return std::nullopt;
    return WeightFunction(std::move(ms), std::move(total));
}

namespace {

bool balanced(const Graph& g, const WeightFunction& w, const Rational& c, VertexSet x,
              Rational* max_weight_out) {
    Rational worst(0);
    VertexSet rest = g.vertices() - x;
    while (!rest.empty()) {
        VertexSet comp = component_of(g, rest, rest.min());
        rest -= comp;
        if (!w.at_most(comp, c)) {
            if (max_weight_out) *max_weight_out = w.weight_of(comp);
            return false;
        }
        if (max_weight_out) {
            Rational cw = w.weight_of(comp);
            if (cw > worst) worst = cw;
        }
    }
    if (max_weight_out) *max_weight_out = worst;
    return true;
}

// Sum of C(n, 0..cap), saturating well below overflow.
std::uint64_t subset_count(int n, int cap) {
    const std::uint64_t sat = std::uint64_t(1) << 50;
    std::uint64_t total = 0, binom = 1;
    for (int s = 0; s <= cap; ++s) {
        total += binom;
        if (total > sat || binom > sat) return sat;
        binom = binom * static_cast<std::uint64_t>(n - s) / static_cast<std::uint64_t>(s + 1);
    }
    return total;
}

}  // namespace

std::optional<BalancedSeparatorResult> min_balanced_separator(
    const Graph& g, const WeightFunction& w, const Rational& c, int size_cap,
    SearchBudget* budget) {
    if (c < Rational(1, 2) || c >= Rational(1))
        throw InvalidArgumentError("balance parameter must lie in [1/2, 1)");
    if (w.n() != g.n()) throw InvalidArgumentError("weight function size mismatch");
    SearchBudget local;
    if (!budget) budget = &local;
    size_cap = std::min(size_cap, g.n());
    budget->charge(subset_count(g.n(), size_cap), "min_balanced_separator subset search");

    std::vector<int> pick;
    // enumerate s-subsets in lexicographic order
    for (int s = 0; s <= size_cap; ++s) {
        pick.assign(static_cast<std::size_t>(s), 0);
        for (int i = 0; i < s; ++i) pick[static_cast<std::size_t>(i)] = i;
        while (true) {
            VertexSet x = VertexSet::from(pick);
            if (static_cast<int>(pick.size()) == s && balanced(g, w, c, x, nullptr)) {
                Rational worst;
                balanced(g, w, c, x, &worst);
                return BalancedSeparatorResult{x, worst};
            }
            if (s == 0) break;
            // next combination
            int i = s - 1;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] == g.n() - s + i) --i;
            if (i < 0) break;
            ++pick[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < s; ++j)
                pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return std::nullopt;
}

bool is_unbalanced(const Graph& g, const WeightFunction& w, int d, SearchBudget* budget) {
    return !min_balanced_separator(g, w, Rational(1, 2), d, budget).has_value();
}

BsToTwReport check_bs_to_tw(const Graph& g, int k, const Rational& c, int weight_samples,
                            std::uint64_t seed, int tw_cap, SearchBudget* budget) {
    BsToTwReport report;
    report.bound = Rational(k) / (Rational(1) - c);
    std::vector<WeightFunction> samples;
    for (int v = 0; v < g.n(); ++v) {
        std::vector<std::uint64_t> m(static_cast<std::size_t>(g.n()), 0);
        m[static_cast<std::size_t>(v)] = 1;
        samples.push_back(WeightFunction::from_masses(m));
    }
    samples.push_back(WeightFunction::uniform(g.n()));
    std::mt19937_64 rng(seed);
    for (int i = 0; i < weight_samples; ++i) samples.push_back(random_weights(g.n(), rng));

    report.samples_total = static_cast<int>(samples.size());
    bool all = true;
    for (const auto& w : samples) {
        if (min_balanced_separator(g, w, c, k, budget))
            ++report.samples_with_separator;
        else
            all = false;
    }
    report.hypothesis_held = all;
    report.treewidth = treewidth_exact(g, tw_cap);
    if (all) {
        // tw <= k/(1-c), exactly
        report.violation = Rational(report.treewidth) > report.bound;
    }
    return report;
}

bool check_tw_to_separator(const Graph& g, const WeightFunction& w, const Rational& c,
                           int tw_cap, SearchBudget* budget) {
    const int k = treewidth_exact(g, tw_cap);
    return min_balanced_separator(g, w, c, k + 1, budget).has_value();
}

WeightFunction random_weights(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(0, 1 << 16);
    std::vector<std::uint64_t> masses(static_cast<std::size_t>(n));
    std::uint64_t total = 0;
    for (auto& m : masses) {
        m = dist(rng);
        total += m;
    }
    if (total == 0) masses[0] = 1;
    return WeightFunction::from_masses(masses);
}

namespace {

Nat nat_from_decimal(const std::string& s, std::size_t line_offset, std::size_t col) {
    if (s.empty()) throw ParseError(line_offset + col, "expected integer");
    Nat v(0);
    for (char ch : s) {
        if (ch < '0' || ch > '9')
            throw ParseError(line_offset + col, "expected digit in integer");
        v = v * Nat(10) + Nat(static_cast<std::uint64_t>(ch - '0'));
    }
    return v;
}

}  // namespace

WeightFunction parse_weights(const std::string& text, int n) {
    std::vector<Rational> weights(static_cast<std::size_t>(n), Rational(0));
    std::size_t pos = 0, offset = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string::npos) eol = text.size();
        std::string line = text.substr(pos, eol - pos);
        offset = pos;
        pos = eol + 1;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::string id_tok, frac_tok;
        if (!(ss >> id_tok >> frac_tok))
            throw ParseError(offset, "expected '<vertex-id> <num>/<den>'");
        int v;
        try {
            v = std::stoi(id_tok);
        } catch (...) {
            throw ParseError(offset, "bad vertex id");
        }
        if (v < 0 || v >= n) throw ParseError(offset, "vertex id out of range");
        std::size_t slash = frac_tok.find('/');
        Nat num, den;
        if (slash == std::string::npos) {
            num = nat_from_decimal(frac_tok, offset, id_tok.size() + 1);
            den = Nat(1);
        } else {
            num = nat_from_decimal(frac_tok.substr(0, slash), offset, id_tok.size() + 1);
            den = nat_from_decimal(frac_tok.substr(slash + 1), offset,
                                   id_tok.size() + 2 + slash);
        }
        if (den.is_zero()) throw ParseError(offset, "zero denominator");
        weights[static_cast<std::size_t>(v)] = Rational(num, den);
    }
    return WeightFunction::from_rationals(weights);
}

std::string emit_weights(const WeightFunction& w) {
    std::ostringstream out;
    for (int v = 0; v < w.n(); ++v) {
        if (w.mass(v).is_zero()) continue;
        out << v << ' ' << w.mass(v).to_string() << '/' << w.total().to_string() << '\n';
    }
    return out.str();
}

}  // namespace hollow
