#include "semilinear/decompose.hpp"
#include "semilinear/errors.hpp"
#include "semilinear/normalize.hpp"

#include "generators.hpp"

#include <gtest/gtest.h>

using namespace semilinear;

namespace {

QuasiCompVertex qv(std::initializer_list<long> x, std::initializer_list<long> y, std::size_t idx = 0) {
    QuasiCompVertex v;
    for (long a : x) v.x.push_back(Rational(a));
    for (long b : y) v.y.push_back(Rational(b));
    v.original_index = idx;
    return v;
}

AdjacencyGraph union_of_terms(const DnfGraph& d) {
    AdjacencyGraph out(d.size());
    for (const auto& q : to_quasicomp(d)) {
        const auto part = materialize(q);
        for (const auto& [u, v] : part.edges()) {
            out.add_edge(q.vertices[u].original_index, q.vertices[v].original_index);
        }
    }
    return out;
}

}  // namespace

TEST(SplitLinear, ConstantGoesToTheLeftPart) {
    const LinearForm f{{Rational(2), Rational(0)}, {Rational(0), Rational(-1)}, Rational(3)};
    const auto [g, h] = split_linear(f);
    EXPECT_EQ(g.constant, 3);
    EXPECT_EQ(g.coeffs, (Vector{Rational(2), Rational(0)}));
    EXPECT_EQ(h.constant, 0);
    EXPECT_EQ(h.coeffs, (Vector{Rational(0), Rational(-1)}));
}

TEST(SplitLinear, PureYForm) {
    const LinearForm f{{Rational(0)}, {Rational(-1)}, Rational(0)};
    const auto [g, h] = split_linear(f);
    EXPECT_EQ(g.constant, 0);
    EXPECT_EQ(g.coeffs, Vector{Rational(0)});
    EXPECT_EQ(h.coeffs, Vector{Rational(-1)});
}

TEST(SplitLinear, ReconstructsTheFormOnRandomPoints) {
    slt::Rng rng(10);
    for (int i = 0; i < 100; ++i) {
        const std::size_t d = slt::uniform(rng, 1, 4);
        LinearForm f{slt::random_vector(rng, d, 9, 5), slt::random_vector(rng, d, 9, 5), slt::random_rational(rng, 9, 5)};
        const auto [g, h] = split_linear(f);
        const Vector x = slt::random_vector(rng, d, 20, 7);
        const Vector y = slt::random_vector(rng, d, 20, 7);
        ASSERT_EQ(f(x, y), g(x) + h(y));
    }
}

TEST(ToQuasiComp, TotalOrderOnALine) {
    const LinearForm f{{Rational(1)}, {Rational(-1)}, Rational(0)};
    DnfGraph d{1, {{Rational(0)}, {Rational(1)}, {Rational(2)}}, {f}, {{0}}};
    const auto qs = to_quasicomp(d);
    ASSERT_EQ(qs.size(), 1u);
    for (std::size_t v = 0; v < 3; ++v) {
        EXPECT_EQ(qs[0].vertices[v].x, Vector{Rational(static_cast<long>(v))});
        EXPECT_EQ(qs[0].vertices[v].y, Vector{Rational(static_cast<long>(v))});
    }
    EXPECT_EQ(materialize(qs[0]).edge_count(), 3u);
}

TEST(ToQuasiComp, NoTermsNoEdges) {
    DnfGraph d{1, {{Rational(0)}, {Rational(1)}}, {}, {}};
    EXPECT_TRUE(to_quasicomp(d).empty());
    EXPECT_EQ(union_of_terms(d).edge_count(), 0u);
    EXPECT_EQ(materialize(d).edge_count(), 0u);
}

TEST(ToQuasiComp, UnionOfTermsIsTheDnfGraph) {
    slt::Rng rng(11);
    for (int i = 0; i < 120; ++i) {
        const std::size_t t = slt::uniform(rng, 1, 3);
        const std::size_t u = slt::uniform(rng, 1, 3);
        const auto d = slt::random_symmetric_dnf(rng, t, u, slt::uniform(rng, 1, 3), slt::uniform(rng, 1, 20));
        ASSERT_EQ(union_of_terms(d), materialize(d)) << "instance " << i;
    }
}

TEST(ToQuasiComp, UnionOfTermsAfterNormalization) {
    slt::Rng rng(12);
    for (int i = 0; i < 40; ++i) {
        const auto g = slt::random_symmetric_semilinear(rng, 4, 3, 16);
        const auto d = to_dnf(g);
        ASSERT_EQ(union_of_terms(d), materialize(g));
    }
}

TEST(Perturb, SingleVertexMovesDownByOne) {
    QuasiCompGraph q{1, {qv({0}, {0})}};
    const auto p = perturb(q);
    EXPECT_EQ(p.vertices[0].y, Vector{Rational(-1)});
    EXPECT_TRUE(is_perturbed(p));
    EXPECT_FALSE(is_perturbed(q));
}

TEST(Perturb, HalfTheSmallestPositiveGap) {
    QuasiCompGraph q{1, {qv({0}, {0}, 0), qv({1}, {1}, 1)}};
    const auto p = perturb(q);
    EXPECT_EQ(p.vertices[0].y, Vector{make_rational(-1, 2)});
    EXPECT_EQ(p.vertices[1].y, Vector{make_rational(1, 2)});
    EXPECT_EQ(materialize(p), materialize(q));
    EXPECT_EQ(materialize(p).edge_count(), 1u);
}

TEST(Perturb, KeepsEdgesAndSeparatesEveryCoordinate) {
    slt::Rng rng(13);
    for (int i = 0; i < 200; ++i) {
        const auto q = slt::random_quasicomp(rng, slt::uniform(rng, 1, 3), slt::uniform(rng, 1, 30), 6);
        const auto p = perturb(q);
        ASSERT_EQ(materialize(p), materialize(q));
        ASSERT_TRUE(is_perturbed(p));
        for (std::size_t a = 0; a < p.size(); ++a) {
            for (std::size_t b = 0; b < p.size(); ++b) {
                for (std::size_t c = 0; c < p.t; ++c) ASSERT_NE(p.vertices[a].x[c], p.vertices[b].y[c]);
            }
        }
    }
}

TEST(TypePartition, SignOfYMinusX) {
    QuasiCompGraph q{1, {qv({0}, {1}), qv({1}, {0})}};
    const auto parts = type_partition(q);
    ASSERT_EQ(parts.size(), 2u);
    EXPECT_EQ(parts.at(TypeVector{1, 1}), std::vector<std::size_t>{0});
    EXPECT_EQ(parts.at(TypeVector{0, 1}), std::vector<std::size_t>{1});

    QuasiCompGraph two{2, {qv({0, 0}, {1, -1})}};
    const auto t = type_of(two.vertices[0]);
    EXPECT_TRUE(t.plus(0));
    EXPECT_FALSE(t.plus(1));
}

TEST(TypePartition, RejectsUnperturbedInput) {
    QuasiCompGraph q{1, {qv({2}, {2})}};
    EXPECT_THROW(type_partition(q), NotPerturbed);
}

TEST(TypePartition, ClassesPartitionTheVertices) {
    slt::Rng rng(14);
    for (int i = 0; i < 50; ++i) {
        const auto q = perturb(slt::random_quasicomp(rng, slt::uniform(rng, 1, 3), slt::uniform(rng, 1, 40), 9));
        std::vector<int> seen(q.size(), 0);
        for (const auto& [type, members] : type_partition(q)) {
            for (std::size_t v : members) {
                ASSERT_EQ(type_of(q.vertices[v]), type);
                ++seen[v];
            }
        }
        for (int s : seen) ASSERT_EQ(s, 1);
    }
}

TEST(RankCompress, KeepsEveryComparison) {
    slt::Rng rng(15);
    for (int i = 0; i < 50; ++i) {
        QuasiCompGraph q = slt::random_quasicomp(rng, 2, 15, 5);
        for (auto& v : q.vertices) v.y[1] += make_rational(1, 3);
        const auto r = rank_compress(q);
        for (std::size_t a = 0; a < q.size(); ++a) {
            for (std::size_t b = 0; b < q.size(); ++b) {
                for (std::size_t c = 0; c < 2; ++c) {
                    ASSERT_EQ(q.vertices[a].x[c] < q.vertices[b].y[c], r.xs(a, c) < r.ys(b, c));
                    ASSERT_EQ(q.vertices[a].x[c] == q.vertices[b].y[c], r.xs(a, c) == r.ys(b, c));
                }
                if (a != b) ASSERT_EQ(q.has_edge(a, b), r.has_edge(a, b));
            }
        }
    }
}

TEST(QuasiComp, ValidationRejectsWrongLengths) {
    QuasiCompGraph q{2, {qv({0}, {1, 2})}};
    EXPECT_THROW(q.validate(), InvalidParams);
}
