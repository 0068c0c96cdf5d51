#include "doctest.h"

#include <random>

#include "hollow/corpus.hpp"
#include "hollow/tw_oracle.hpp"
#include "hollow/weights.hpp"
#include "support/small_graphs.hpp"

using namespace hollow;

TEST_CASE("weight function construction and exactness") {
    auto u5 = WeightFunction::uniform(5);
    CHECK(u5.weight_of(VertexSet::full(5)) == Rational(1));
    CHECK(u5.weight(0) == Rational(1, 5));

    auto m = WeightFunction::from_masses({1, 1, 2, 4});
    CHECK(m.weight(3) == Rational(1, 2));
    CHECK(m.weight_of(VertexSet::of({0, 1, 2})) == Rational(1, 2));
    CHECK_FALSE(m.heavier_than_half(VertexSet::of({0, 1, 2})));
    CHECK(m.heavier_than_half(VertexSet::of({0, 2, 3})));

    std::vector<Rational> exact{Rational(1, 3), Rational(1, 3), Rational(1, 3)};
    CHECK(WeightFunction::from_rationals(exact).weight_of(VertexSet::full(3)) == Rational(1));
    std::vector<Rational> bad{Rational(1, 3), Rational(1, 3)};
    CHECK_THROWS_AS(WeightFunction::from_rationals(bad), InvalidArgumentError);
}

TEST_CASE("min balanced separator on paths, cliques, cycles") {
    Graph p5 = gen_path(5);
    auto u = WeightFunction::uniform(5);
    auto r = min_balanced_separator(p5, u, Rational(1, 2), 1);
    REQUIRE(r);
    CHECK(r->separator == VertexSet::single(2));
    CHECK(r->max_component_weight == Rational(2, 5));

    Graph k5 = gen_complete(5);
    CHECK_FALSE(min_balanced_separator(k5, u, Rational(1, 2), 2));
    auto r3 = min_balanced_separator(k5, u, Rational(1, 2), 3);
    REQUIRE(r3);
    CHECK(r3->separator == VertexSet::of({0, 1, 2}));  // lexicographically first
    CHECK(r3->max_component_weight == Rational(2, 5));

    Graph c4 = gen_cycle(4);
    auto u4 = WeightFunction::uniform(4);
    // size 1 fails (the remaining path weighs 3/4); at size 2 already the
    // lexicographically first pair {0,1} balances, leaving the edge {2,3}
    // at weight exactly 1/2
    CHECK_FALSE(min_balanced_separator(c4, u4, Rational(1, 2), 1));
    auto rc = min_balanced_separator(c4, u4, Rational(1, 2), 2);
    REQUIRE(rc);
    CHECK(rc->separator == VertexSet::of({0, 1}));
    CHECK(rc->max_component_weight == Rational(1, 2));
}

TEST_CASE("min balanced separator is monotone in c") {
    std::mt19937_64 rng(3);
    for (const Graph& g : {gen_cycle(7), testsupport::petersen(), gen_wall(3)}) {
        auto w = random_weights(g.n(), rng);
        for (int cap = 0; cap <= 3; ++cap) {
            auto strict = min_balanced_separator(g, w, Rational(1, 2), cap);
            if (strict) {
                auto loose = min_balanced_separator(g, w, Rational(2, 3), cap);
                REQUIRE(loose);
                CHECK(loose->separator.size() <= strict->separator.size());
            }
        }
    }
}

TEST_CASE("is_unbalanced") {
    auto u5 = WeightFunction::uniform(5);
    CHECK(is_unbalanced(gen_complete(5), u5, 2));
    CHECK_FALSE(is_unbalanced(gen_path(5), u5, 1));
    Graph w44 = gen_wall(4);
    CHECK(is_unbalanced(w44, WeightFunction::uniform(w44.n()), 2));
}

TEST_CASE("balanced separator budget error") {
    Graph big = gen_wall(4);  // 24 vertices
    auto w = WeightFunction::uniform(big.n());
    SearchBudget tiny{100};
    CHECK_THROWS_AS(min_balanced_separator(big, w, Rational(1, 2), 12, &tiny),
                    BudgetExceededError);
}

TEST_CASE("check_bs_to_tw on small families") {
    // trees: every weight function has a single-vertex 1/2-balanced separator
    Graph tree(7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}});
    auto rep = check_bs_to_tw(tree, 1, Rational(1, 2), 5, 42);
    CHECK(rep.hypothesis_held);
    CHECK_FALSE(rep.violation);
    CHECK(rep.treewidth == 1);

    auto rep2 = check_bs_to_tw(gen_cycle(6), 2, Rational(1, 2), 5, 42);
    CHECK(rep2.hypothesis_held);
    CHECK_FALSE(rep2.violation);
    CHECK(rep2.treewidth == 2);

    auto rep3 = check_bs_to_tw(gen_complete(5), 3, Rational(1, 2), 5, 42);
    CHECK(rep3.hypothesis_held);  // any 3 vertices leave K_2 of weight 2/5... up to mass
    CHECK(rep3.treewidth == 4);
    CHECK_FALSE(rep3.violation);  // 4 <= 3/(1-1/2) = 6
}

TEST_CASE("check_tw_to_separator") {
    std::mt19937_64 rng(9);
    Graph pet = testsupport::petersen();
    CHECK(treewidth_exact(pet) == 4);
    for (int i = 0; i < 50; ++i) {
        CHECK(check_tw_to_separator(pet, random_weights(pet.n(), rng), Rational(1, 2)));
    }
    for (const Graph& g : {gen_path(6), gen_cycle(9), gen_complete(6)}) {
        for (int i = 0; i < 5; ++i)
            CHECK(check_tw_to_separator(g, random_weights(g.n(), rng), Rational(1, 2)));
    }
}

TEST_CASE("weight file round trip") {
    auto w = WeightFunction::from_masses({0, 3, 5, 0, 2});
    std::string text = emit_weights(w);
    auto back = parse_weights(text, 5);
    for (int v = 0; v < 5; ++v) CHECK(back.weight(v) == w.weight(v));

    CHECK_THROWS_AS(parse_weights("0 1/2\n1 1/3\n", 2), InvalidArgumentError);  // sum != 1
    CHECK_THROWS_AS(parse_weights("7 1/1\n", 2), ParseError);
    CHECK_THROWS_AS(parse_weights("0 x/2\n", 2), ParseError);
    CHECK_THROWS_AS(parse_weights("0 1/0\n", 2), ParseError);
    auto mixed = parse_weights("# comment\n0 1/4\n2 3/4\n", 3);
    CHECK(mixed.weight(1) == Rational(0));
    CHECK(mixed.weight(2) == Rational(3, 4));
}

TEST_CASE("random weights are exact and positive in total") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
        auto w = random_weights(6, rng);
        CHECK(w.weight_of(VertexSet::full(6)) == Rational(1));
    }
}
