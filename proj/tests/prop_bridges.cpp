#include "doctest.h"

#include <random>

#include "hollow/corpus.hpp"
#include "hollow/seagull.hpp"
#include "hollow/tw_oracle.hpp"
#include "hollow/weights.hpp"
#include "support/small_graphs.hpp"

using namespace hollow;

// Lemma (treewidth to separator): tw(G) <= k implies a (w,c)-balanced
// separator of size <= k+1 for every weight function.  Unconditional, so
// it must pass on everything; the n <= 9 sweep runs in acceptance.
TEST_CASE("tw-to-separator on every connected graph with n <= 7") {
    std::mt19937_64 rng(1234);
    for (int n = 2; n <= 7; ++n) {
        for (const Graph& g : testsupport::all_connected_graphs(n)) {
            for (int i = 0; i < 5; ++i) {
                auto w = random_weights(g.n(), rng);
                CHECK(check_tw_to_separator(g, w, Rational(1, 2)));
            }
        }
    }
}

TEST_CASE("tw-to-separator on sampled graphs up to n = 12 with 20 weights each") {
    std::mt19937_64 rng(314);
    std::uniform_real_distribution<double> dens(0.1, 0.9);
    for (int n = 8; n <= 12; ++n) {
        for (int trial = 0; trial < 12; ++trial) {
            std::bernoulli_distribution coin(dens(rng));
            std::vector<std::pair<int, int>> edges;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (coin(rng)) edges.emplace_back(i, j);
            Graph g(n, edges);
            for (int i = 0; i < 20; ++i)
                CHECK(check_tw_to_separator(g, random_weights(n, rng), Rational(1, 2)));
        }
    }
}

TEST_CASE("tw-to-separator with varying balance parameter") {
    std::mt19937_64 rng(99);
    Graph pet = testsupport::petersen();
    for (const Rational& c : {Rational(1, 2), Rational(3, 5), Rational(2, 3)}) {
        for (int i = 0; i < 5; ++i)
            CHECK(check_tw_to_separator(pet, random_weights(pet.n(), rng), c));
    }
}

TEST_CASE("bs-to-tw reports no violations across the corpus") {
    for (int n = 2; n <= 6; ++n) {
        for (const Graph& g : testsupport::all_connected_graphs(n)) {
            const int k = treewidth_exact(g) + 1;
            auto rep = check_bs_to_tw(g, k, Rational(1, 2), 3, 7);
            CHECK(rep.hypothesis_held);  // guaranteed by the converse lemma
            CHECK_FALSE(rep.violation);
        }
    }
}

TEST_CASE("tree decompositions stay valid and tight on the n=7 corpus") {
    const auto& graphs = testsupport::all_connected_graphs(7);
    for (std::size_t i = 0; i < graphs.size(); i += 3) {
        const Graph& g = graphs[i];
        TreeDecomposition td = tree_decomposition(g);
        CHECK(validate_tree_decomposition(g, td).ok);
        CHECK(td.width() == treewidth_exact(g));
    }
}

TEST_CASE("clique cutset decomposition preserves treewidth") {
    for (int n = 4; n <= 7; ++n) {
        const auto& graphs = testsupport::all_connected_graphs(n);
        for (std::size_t gi = 0; gi < graphs.size(); gi += 5) {
            const Graph& g = graphs[gi];
            auto cut = find_clique_cutset(g);
            if (!cut) continue;
            const int tw = treewidth_exact(g);
            int max_block = -1;
            for (const VertexSet& comp : components(g, g.vertices() - cut->c))
                max_block = std::max(max_block, treewidth_exact(g.induced(comp | cut->c)));
            CHECK(tw == max_block);
        }
    }
}

TEST_CASE("decompose agrees with the oracle on F_t members of the corpus") {
    std::mt19937_64 rng(555);
    int decomposed = 0;
    for (int n = 4; n <= 7; ++n) {
        const auto& graphs = testsupport::all_connected_graphs(n);
        for (std::size_t gi = 0; gi < graphs.size(); gi += 7) {
            const Graph& g = graphs[gi];
            auto cm = class_membership(g, g.n());
            if (!cm.in_F) continue;
            auto w = random_weights(g.n(), rng);
            auto rep = decompose(g, g.n(), w);
            ++decomposed;
            CHECK(rep.clique_cut_tw_consistent);
            for (const auto& b : rep.blocks) {
                if (b.kind == BlockKind::CliqueCut) CHECK(is_clique(g, b.cutset));
            }
        }
    }
    CHECK(decomposed > 30);
}
