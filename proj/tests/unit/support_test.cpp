// Sanity checks for the test generators and the exhaustive oracles.

#include "semilinear/oracle.hpp"

#include "corpus.hpp"
#include "generators.hpp"
#include "naive.hpp"

#include <gtest/gtest.h>

#include <set>
#include <string>

using namespace semilinear;

TEST(Generators, SymmetricGraphsAreSymmetric) {
    slt::Rng rng(70);
    for (int i = 0; i < 50; ++i) {
        const auto g = slt::random_symmetric_semilinear(rng, 4, 3, 15);
        ASSERT_LE(g.complexity(), 4u);
        ASSERT_FALSE(symmetry_check(g).has_value());
        const auto d = slt::random_symmetric_dnf(rng, slt::uniform(rng, 1, 3), slt::uniform(rng, 1, 3), 2, 15);
        ASSERT_FALSE(symmetry_check(d).has_value());
    }
}

TEST(Generators, PosetsAreTransitiveAndIrreflexive) {
    slt::Rng rng(71);
    for (int i = 0; i < 30; ++i) {
        const auto p = slt::random_poset(rng, slt::uniform(rng, 1, 12), 0.3);
        for (std::size_t a = 0; a < p.n; ++a) {
            ASSERT_FALSE(p.less[a][a]);
            for (std::size_t b = 0; b < p.n; ++b) {
                if (!p.less[a][b]) continue;
                ASSERT_FALSE(p.less[b][a]);
                for (std::size_t c = 0; c < p.n; ++c) {
                    if (p.less[b][c]) ASSERT_TRUE(p.less[a][c]);
                }
            }
        }
    }
}

TEST(Generators, BalancedWeights) {
    slt::Rng rng(72);
    for (int i = 0; i < 100; ++i) {
        const auto w = slt::random_balanced_weights(rng, slt::uniform(rng, 2, 6));
        ASSERT_TRUE(w.balanced());
        ASSERT_GE(w.total(), make_rational(9, 10));
        ASSERT_LE(w.total(), 1);
    }
}

TEST(Generators, HighGirthAndIncidence) {
    slt::Rng rng(73);
    for (int i = 0; i < 30; ++i) {
        const auto g = slt::bipartite_adjacency(slt::random_high_girth_bipartite(rng, 6, 6, 8, 40));
        const auto gi = girth(g);
        ASSERT_TRUE(!gi || *gi >= 8);
        const auto inc = slt::random_incidence(rng, 10);
        ASSERT_GE(inc.edges.size(), 1u);
        ASSERT_LE(inc.edges.size(), 10u);
        ASSERT_TRUE(geometry_consistent(inc));
    }
}

TEST(Naive, KnownValues) {
    AdjacencyGraph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    EXPECT_EQ(slt::naive_chromatic(c5), 3u);
    EXPECT_EQ(slt::naive_clique_number(c5), 2u);
    EXPECT_EQ(slt::naive_independence_number(c5), 2u);
    EXPECT_EQ(slt::naive_girth(c5), 5u);
    EXPECT_TRUE(slt::naive_p4_free(c5, {0, 1, 2}));
    EXPECT_FALSE(slt::naive_p4_free(c5, {0, 1, 2, 3}));
    EXPECT_TRUE(slt::is_clique(c5, {1, 2}));
    EXPECT_TRUE(slt::is_independent(c5, {0, 2}));
}

TEST(Corpus, EveryGraphIsSymmetricAndNamedUniquely) {
    std::set<std::string> names;
    for (const auto& c : slt::graph_corpus()) {
        ASSERT_TRUE(names.insert(c.name).second) << c.name;
        ASSERT_FALSE(symmetry_check(c.graph).has_value()) << c.name;
    }
    names.clear();
    for (const auto& c : slt::incidence_corpus()) {
        ASSERT_TRUE(names.insert(c.name).second) << c.name;
        ASSERT_TRUE(geometry_consistent(c.graph)) << c.name;
    }
}
