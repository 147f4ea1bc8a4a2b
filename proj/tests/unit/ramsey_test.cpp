#include "semilinear/decompose.hpp"
#include "semilinear/errors.hpp"
#include "semilinear/normalize.hpp"
#include "semilinear/oracle.hpp"
#include "semilinear/ramsey.hpp"

#include "eh_check.hpp"
#include "generators.hpp"
#include "naive.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

using namespace semilinear;

namespace {

constexpr SubsetMask kOne = 1;
constexpr SubsetMask kTwo = 2;

WeightFunction weights(std::size_t t, std::initializer_list<std::pair<SubsetMask, Rational>> w) {
    WeightFunction out;
    out.t = t;
    for (const auto& [a, v] : w) out.weights[a] = v;
    return out;
}

void expect_outcome_holds(const WeightFunction& w, const EhOutcome& out) {
    const auto violation = slt::eh_outcome_violation(w, out);
    EXPECT_FALSE(violation.has_value()) << *violation;
}

void add_cotree_edges(const Cotree& c, AdjacencyGraph& g) {
    if (c.op() == Cotree::Op::Leaf) return;
    for (const auto& child : c.children()) add_cotree_edges(child, g);
    if (c.op() != Cotree::Op::Join) return;
    for (std::size_t i = 0; i < c.children().size(); ++i) {
        for (std::size_t j = i + 1; j < c.children().size(); ++j) {
            for (std::size_t a : c.children()[i].leaves()) {
                for (std::size_t b : c.children()[j].leaves()) g.add_edge(a, b);
            }
        }
    }
}

Cotree random_cotree(slt::Rng& rng, std::vector<std::size_t> leaves, bool join) {
    if (leaves.size() == 1) return Cotree::leaf(leaves.front());
    const std::size_t parts = slt::uniform(rng, 2, std::min<std::size_t>(4, leaves.size()));
    std::shuffle(leaves.begin(), leaves.end(), rng);
    std::vector<std::vector<std::size_t>> groups(parts);
    for (std::size_t i = 0; i < leaves.size(); ++i) groups[i < parts ? i : slt::uniform(rng, 0, parts - 1)].push_back(leaves[i]);
    std::vector<Cotree> children;
    for (auto& g : groups) children.push_back(random_cotree(rng, g, !join));
    return Cotree::make(join ? Cotree::Op::Join : Cotree::Op::Union, std::move(children));
}

QuasiCompVertex qv(long x, long y, std::size_t idx) { return {{Rational(x)}, {Rational(y)}, idx}; }

std::size_t isqrt_ceil(std::size_t m) {
    std::size_t r = 0;
    while (r * r < m) ++r;
    return r;
}

}  // namespace

TEST(EhDecompose, TwoHeavySingletonsGiveTwoFamilies) {
    const auto w = weights(2, {{kOne, Rational(9, 20)}, {kTwo, Rational(9, 20)}});
    const auto out = eh_decompose(w);
    ASSERT_EQ(out.kind, EhOutcome::Kind::CaseII);
    ASSERT_EQ(out.families.size(), 2u);
    EXPECT_EQ(out.families[0], std::vector<SubsetMask>{kOne});
    EXPECT_EQ(out.families[1], std::vector<SubsetMask>{kTwo});
    expect_outcome_holds(w, out);
}

TEST(EhDecompose, UniformWeightsHitBothExtremes) {
    const Rational q(9, 40);
    const auto w = weights(2, {{0, q}, {kOne, q}, {kTwo, q}, {3, q}});
    EXPECT_TRUE(w.balanced());
    const auto out = eh_decompose(w);
    EXPECT_EQ(out.kind, EhOutcome::Kind::CaseI);
    expect_outcome_holds(w, out);
}

TEST(EhDecompose, HeavySingletonsAtThree) {
    const Rational q(3, 20);
    const auto w = weights(3, {{1, q}, {2, q}, {4, q}, {6, q}, {5, q}, {3, q}});
    ASSERT_TRUE(w.balanced());
    const auto out = eh_decompose(w);
    ASSERT_EQ(out.kind, EhOutcome::Kind::CaseII);
    ASSERT_EQ(out.families.size(), 2u);
    for (const auto& f : out.families) {
        ASSERT_EQ(f.size(), 1u);
        EXPECT_EQ(__builtin_popcount(f.front()), 1);
    }
    expect_outcome_holds(w, out);
}

TEST(EhDecompose, SingletonsAloneAreNotBalanced) {
    const Rational q(3, 10);
    const auto w = weights(3, {{1, q}, {2, q}, {4, q}});
    EXPECT_FALSE(w.balanced());
    EXPECT_THROW(eh_decompose(w), PreconditionViolated);
}

TEST(EhDecompose, Preconditions) {
    EXPECT_THROW(eh_decompose(weights(1, {{0, Rational(1, 2)}, {1, Rational(1, 2)}})), PreconditionViolated);
    EXPECT_THROW(eh_decompose(weights(2, {{0, Rational(1, 5)}, {3, Rational(1, 5)}})), PreconditionViolated);
    EXPECT_THROW(eh_decompose(weights(2, {{0, Rational(9, 10)}})), PreconditionViolated);
    EXPECT_THROW(weights(2, {{8, Rational(1)}}).validate(), InvalidParams);
    EXPECT_THROW(weights(2, {{1, Rational(-1)}}).validate(), InvalidParams);
}

TEST(EhDecompose, RandomBalancedWeights) {
    slt::Rng rng(30);
    int case_one = 0;
    int case_two = 0;
    for (int i = 0; i < 300; ++i) {
        const auto w = slt::random_balanced_weights(rng, slt::uniform(rng, 2, 6));
        ASSERT_TRUE(w.balanced());
        ASSERT_GE(w.total(), Rational(9, 10));
        const auto out = eh_decompose(w);
        expect_outcome_holds(w, out);
        (out.kind == EhOutcome::Kind::CaseI ? case_one : case_two)++;
    }
    EXPECT_GT(case_one, 0);
    EXPECT_GT(case_two, 0);
}

TEST(EhDecompose, CheckerRejectsBrokenOutcomes) {
    const auto w = weights(2, {{kOne, Rational(9, 20)}, {kTwo, Rational(9, 20)}});
    EXPECT_THROW(check_eh_outcome(w, EhOutcome{EhOutcome::Kind::CaseI, {}}), ProofInvariantViolated);
    EXPECT_THROW(check_eh_outcome(w, EhOutcome{EhOutcome::Kind::CaseII, {{kOne}, {3}}}), ProofInvariantViolated);
    EXPECT_THROW(check_eh_outcome(w, EhOutcome{EhOutcome::Kind::CaseII, {{kOne}, {kOne}}}), ProofInvariantViolated);
    EXPECT_THROW(check_eh_outcome(w, EhOutcome{EhOutcome::Kind::CaseII, {{kOne}}}), ProofInvariantViolated);
}

TEST(TenthRoots, ExactBoundaryCases) {
    const Rational half10 = pow(Rational(1, 2), 10);
    EXPECT_TRUE(tenth_roots_reach_one({Rational(1)}));
    EXPECT_TRUE(tenth_roots_reach_one({half10, half10}));
    EXPECT_FALSE(tenth_roots_reach_one({half10}));
    EXPECT_FALSE(tenth_roots_reach_one({half10, half10 - Rational(1, 1000000000)}));
    EXPECT_FALSE(tenth_roots_reach_one({}));
}

TEST(TenthRoots, AgreesWithIndependentRoots) {
    slt::Rng rng(31);
    for (int i = 0; i < 200; ++i) {
        std::vector<Rational> values;
        const std::size_t k = slt::uniform(rng, 1, 4);
        for (std::size_t j = 0; j < k; ++j) values.push_back(make_rational(static_cast<long>(slt::uniform(rng, 0, 50)), static_cast<long>(slt::uniform(rng, 1, 50000))));
        ASSERT_EQ(tenth_roots_reach_one(values), slt::tenth_root_sum_reaches_one(values));
    }
}

TEST(Cotree, StructureChecks) {
    const auto ok = Cotree::make(Cotree::Op::Join, {Cotree::leaf(0), Cotree::leaf(2)});
    EXPECT_NO_THROW(ok.check_structure());
    EXPECT_EQ(ok.leaves(), (std::vector<std::size_t>{0, 2}));
    const auto repeated = Cotree::make(Cotree::Op::Union, {Cotree::leaf(1), Cotree::leaf(1)});
    EXPECT_THROW(repeated.check_structure(), InvalidCotree);
    const auto childless = Cotree::make(Cotree::Op::Union, {});
    EXPECT_THROW(childless.check_structure(), InvalidCotree);
}

TEST(Cotree, InducedViolations) {
    AdjacencyGraph triangle(3, {{0, 1}, {1, 2}, {0, 2}});
    const auto join = Cotree::make(Cotree::Op::Join, {Cotree::leaf(0), Cotree::leaf(1), Cotree::leaf(2)});
    EXPECT_FALSE(join.induced_violation(triangle).has_value());
    EXPECT_FALSE(is_cograph_induced(triangle, join).has_value());
    AdjacencyGraph edge(2, {{0, 1}});
    const auto uni = Cotree::make(Cotree::Op::Union, {Cotree::leaf(0), Cotree::leaf(1)});
    EXPECT_EQ(is_cograph_induced(edge, uni), (std::optional<Edge>{{0, 1}}));
}

TEST(CographWitness, JoinOfFourIsAClique) {
    const auto c = Cotree::make(Cotree::Op::Join, {Cotree::leaf(0), Cotree::leaf(1), Cotree::leaf(2), Cotree::leaf(3)});
    const auto w = cograph_witness(c);
    EXPECT_EQ(w.kind, RamseyWitness::Kind::Clique);
    EXPECT_EQ(w.size(), 4u);
}

TEST(CographWitness, UnionOfTwoTriangles) {
    auto tri = [](std::size_t a) {
        return Cotree::make(Cotree::Op::Join, {Cotree::leaf(a), Cotree::leaf(a + 1), Cotree::leaf(a + 2)});
    };
    const auto c = Cotree::make(Cotree::Op::Union, {tri(0), tri(3)});
    const auto w = cograph_witness(c);
    EXPECT_EQ(w.kind, RamseyWitness::Kind::Clique);
    EXPECT_EQ(w.size(), 3u);
}

TEST(CographWitness, InvalidTreeIsRejected) {
    const auto bad = Cotree::make(Cotree::Op::Union, {Cotree::leaf(4), Cotree::leaf(4)});
    EXPECT_THROW(cograph_witness(bad), InvalidCotree);
}

TEST(CographWitness, RandomCotreesReachTheSquareRoot) {
    slt::Rng rng(32);
    for (int i = 0; i < 100; ++i) {
        const std::size_t m = slt::uniform(rng, 1, 64);
        const bool small = m <= 14;
        std::vector<std::size_t> leaves(m);
        for (std::size_t k = 0; k < m; ++k) leaves[k] = k;
        const auto c = random_cotree(rng, leaves, slt::coin(rng));
        AdjacencyGraph g(m);
        add_cotree_edges(c, g);
        ASSERT_FALSE(c.induced_violation(g).has_value());
        const auto w = cograph_witness(c);
        ASSERT_GE(w.size(), isqrt_ceil(m));
        ASSERT_TRUE(witness_consistent(w, g));
        if (small) {
            const std::size_t best = std::max(slt::naive_clique_number(g), slt::naive_independence_number(g));
            ASSERT_EQ(w.size(), best);
        }
    }
}

TEST(FindCograph, PlusClassIsComplete) {
    QuasiCompGraph q{1, {}};
    for (std::size_t v = 0; v < 7; ++v) q.vertices.push_back(qv(static_cast<long>(v), static_cast<long>(v) + 1, v));
    CographStats stats;
    const auto c = find_cograph(q, &stats);
    EXPECT_EQ(c.op(), Cotree::Op::Join);
    EXPECT_EQ(c.leaf_count(), 7u);
    EXPECT_EQ(materialize(q).edge_count(), 21u);
    EXPECT_FALSE(is_cograph_induced(materialize(q), c).has_value());
}

TEST(FindCograph, MinusClassWithDisjointIntervalsIsComplete) {
    // Type minus: interval (y, x). Disjoint intervals are pairwise adjacent.
    QuasiCompGraph q{1, {}};
    for (std::size_t v = 0; v < 6; ++v) q.vertices.push_back(qv(static_cast<long>(3 * v + 2), static_cast<long>(3 * v), v));
    const auto g = materialize(q);
    EXPECT_EQ(g.edge_count(), 15u);
    const auto c = find_cograph(q);
    EXPECT_EQ(c.leaf_count(), 6u);
    EXPECT_FALSE(is_cograph_induced(g, c).has_value());
}

TEST(FindCograph, MinusClassWithNestedIntervalsIsEdgeless) {
    QuasiCompGraph q{1, {}};
    for (std::size_t v = 0; v < 6; ++v) q.vertices.push_back(qv(static_cast<long>(20 - v), static_cast<long>(v), v));
    const auto g = materialize(q);
    EXPECT_EQ(g.edge_count(), 0u);
    const auto c = find_cograph(q);
    EXPECT_EQ(c.op(), Cotree::Op::Union);
    EXPECT_EQ(c.leaf_count(), 6u);
}

TEST(FindCograph, EmptyGraphIsRejected) {
    EXPECT_THROW(find_cograph(QuasiCompGraph{2, {}}), InvalidParams);
}

TEST(FindCograph, RandomInstancesGiveInducedCographs) {
    slt::Rng rng(33);
    for (int i = 0; i < 80; ++i) {
        const std::size_t t = slt::uniform(rng, 1, 3);
        const std::size_t n = slt::uniform(rng, 1, 200);
        const auto q = slt::random_quasicomp(rng, t, n, static_cast<long>(slt::uniform(rng, 3, 60)));
        const auto g = materialize(q);
        CographStats stats;
        const auto c = find_cograph(q, &stats);
        ASSERT_NO_THROW(c.check_structure());
        ASSERT_FALSE(is_cograph_induced(g, c).has_value()) << "instance " << i;
        ASSERT_GE(c.leaf_count(), 1u);
        ASSERT_GE(stats.type_class_size, c.leaf_count());
        if (c.leaf_count() <= 40) ASSERT_TRUE(slt::naive_p4_free(g, c.leaves()));
        const auto w = cograph_witness(c);
        ASSERT_TRUE(witness_consistent(w, g));
        ASSERT_GE(w.size(), isqrt_ceil(c.leaf_count()));
    }
}

TEST(RamseyWitness, CompleteOrderGivesALargeClique) {
    const LinearForm f{{Rational(1)}, {Rational(-1)}, Rational(0)};
    DnfGraph d{1, {}, {f, f.swapped()}, {{0}, {1}}};
    for (long v = 0; v < 9; ++v) d.vertices.push_back({Rational(v)});
    const auto w = ramsey_witness(d);
    EXPECT_EQ(w.kind, RamseyWitness::Kind::Clique);
    EXPECT_GE(w.size(), 3u);
    EXPECT_TRUE(witness_consistent(w, materialize(d)));
}

TEST(RamseyWitness, IndependentSetOfTheFirstTermFeedsTheSecond) {
    const LinearForm never{{Rational(0)}, {Rational(0)}, Rational(1)};
    const LinearForm always{{Rational(0)}, {Rational(0)}, Rational(-1)};
    DnfGraph d{1, {}, {never, always}, {{0}, {1}}};
    for (long v = 0; v < 9; ++v) d.vertices.push_back({Rational(v)});
    const auto w = ramsey_witness(d);
    EXPECT_EQ(w.kind, RamseyWitness::Kind::Clique);
    EXPECT_EQ(w.size(), 9u);
}

TEST(RamseyWitness, RandomDnfGraphs) {
    slt::Rng rng(34);
    for (int i = 0; i < 60; ++i) {
        const auto d = slt::random_symmetric_dnf(rng, slt::uniform(rng, 1, 2), slt::uniform(rng, 1, 2),
                                                 slt::uniform(rng, 1, 3), slt::uniform(rng, 1, 100));
        const auto w = ramsey_witness(d);
        ASSERT_TRUE(witness_consistent(w, materialize(d))) << "instance " << i;
        ASSERT_GE(w.size(), 1u);
    }
}

TEST(RamseyWitness, MedianSizeGrowsWithN) {
    slt::Rng rng(35);
    std::vector<std::size_t> medians;
    for (std::size_t n : {8, 32, 128}) {
        std::vector<std::size_t> sizes;
        for (int i = 0; i < 15; ++i) {
            const auto d = slt::random_symmetric_dnf(rng, 2, 2, 2, n);
            sizes.push_back(ramsey_witness(d).size());
        }
        std::nth_element(sizes.begin(), sizes.begin() + 7, sizes.end());
        medians.push_back(sizes[7]);
    }
    EXPECT_LE(medians[0], medians[1]);
    EXPECT_LE(medians[1], medians[2]);
}

TEST(WitnessConsistent, DetectsWrongKind) {
    AdjacencyGraph path(3, {{0, 1}, {1, 2}});
    EXPECT_TRUE(witness_consistent({RamseyWitness::Kind::Clique, {0, 1}}, path));
    EXPECT_FALSE(witness_consistent({RamseyWitness::Kind::Clique, {0, 2}}, path));
    EXPECT_TRUE(witness_consistent({RamseyWitness::Kind::IndependentSet, {0, 2}}, path));
    EXPECT_FALSE(witness_consistent({RamseyWitness::Kind::IndependentSet, {0, 1}}, path));
}
