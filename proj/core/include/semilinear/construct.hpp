#pragma once

#include "semilinear/adjacency.hpp"
#include "semilinear/coloring.hpp"
#include "semilinear/rational.hpp"
#include "semilinear/semilinear_graph.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace semilinear {

/// Points in the plane against open axis-parallel rectangles. `edges` holds
/// the pairs (point, rect) with the point strictly inside the rect, sorted.
struct IncidenceGraph {
    std::vector<Vector> points;
    std::vector<Box> rects;
    std::vector<Edge> edges;

    std::size_t point_degree(std::size_t p) const;
    std::size_t rect_degree(std::size_t r) const;
    /// Throws InvalidParams on malformed geometry or stale edges.
    void validate() const;
};

/// All (point, rect) containments, sorted.
std::vector<Edge> incidence_edges(const std::vector<Vector>& points, const std::vector<Box>& rects);
IncidenceGraph make_incidence(std::vector<Vector> points, std::vector<Box> rects);
bool geometry_consistent(const IncidenceGraph& g);

/// Points are vertices 0..P-1, rectangles P..P+R-1.
AdjacencyGraph bipartite_graph(const IncidenceGraph& g);

/// rank_a[u] is the position of u in the order on A; likewise rank_b.
struct OrderedBipartiteGraph {
    std::size_t a_size = 0;
    std::size_t b_size = 0;
    std::vector<std::size_t> rank_a;
    std::vector<std::size_t> rank_b;
    std::vector<Edge> edges;  // (a, b)

    void validate() const;
};

/// Points as A, rectangles as B, both ordered by index.
OrderedBipartiteGraph ordered(const IncidenceGraph& g);

/// One rectangle (0, m+1) x (0, 1) holding the points (i, 1/2), i = 1..m.
IncidenceGraph base_star(std::size_t m);

/// Points: copy i of point u is index i*|A| + u. Rects: copy i of rect v is
/// i*|B| + v, followed by one thin rect per original point at k*|B| + u.
/// The realization is checked against the abstract definition.
IncidenceGraph tensor_k(const IncidenceGraph& g, std::size_t k);

/// Bipartite graph between A and [k]; membership of (u, l) is stored at
/// l * a_size + u, matching the point indexing of tensor_k.
struct Selector {
    std::size_t a_size = 0;
    std::size_t k = 0;
    std::vector<bool> keep;

    static Selector complete(std::size_t a_size, std::size_t k);
    bool has(std::size_t u, std::size_t l) const { return keep[l * a_size + u]; }
    std::size_t edge_count() const;
};

/// tensor_k with only the points (u, l) selected by h. Throws
/// DomainMismatch when h does not match |A| and k.
IncidenceGraph tensor_H_k(const IncidenceGraph& g, const Selector& h, std::size_t k);

struct RealizableTuple {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    std::uint64_t k = 0;
    std::uint64_t d = 0;
    std::uint64_t g = 0;

    bool operator==(const RealizableTuple&) const = default;
};

/// Constants of the sparsification step. threshold_factor replaces the 100
/// in (100 log2 k)^(2g^2) b <= a; degree_slack the 2 in the bad-degree bound
/// 2pk; edge_floor the fraction of the expected pk|A| kept edges required to
/// accept a sample.
struct ConstantSchedule {
    Rational threshold_factor{100};
    Rational degree_slack{2};
    Rational edge_floor{1, 2};
    std::size_t max_resamples = 64;
    std::size_t vertex_cap = 20000;

    static ConstantSchedule standard();
    /// threshold_factor 1/4; everything else as in standard().
    static ConstantSchedule relaxed();
    void validate() const;
};

/// (f log2 k)^(2 g^2) b <= a, plus b <= a and k >= 2.
bool threshold_holds(std::uint64_t a, std::uint64_t b, std::uint64_t k, std::uint64_t g,
                     const ConstantSchedule& sched);

struct SampleReport {
    Selector h;
    Rational p;
    std::size_t attempts = 0;
    std::size_t initial_edges = 0;  // before trimming, in the accepted draw
};

/// Random selector: each (u, l) kept with probability
/// p = min(1, (2/k) (|A|/|B|)^(1/2g)), then points next to a vertex of degree
/// > degree_slack p k are removed and, for every rectangle v, cycles shorter
/// than 2g in h restricted to N(v) x [k] are broken. Throws
/// PreconditionViolated when a rectangle has more than k points or
/// |A| > k|B|, SamplingFailed when no draw keeps enough edges.
SampleReport sample_H(const IncidenceGraph& g, std::size_t k, std::size_t girth_half,
                      const ConstantSchedule& sched, std::uint64_t seed);

struct StepResult {
    RealizableTuple tuple;
    IncidenceGraph graph;
    SampleReport sample;
};

/// The next tuple: (kept points, 2kb, ceil(degree_slack p k), d + 1, g).
/// The graph is tensor_H_k padded with empty rectangles up to 2kb.
StepResult step_up(const RealizableTuple& tuple, const IncidenceGraph& g,
                   const ConstantSchedule& sched, std::uint64_t seed);

struct GirthRun {
    IncidenceGraph graph;
    /// Completed step_up calls; also the degree of every output point.
    std::size_t iterations = 0;
    bool feasible = false;
    std::vector<RealizableTuple> tuples;
    std::vector<std::size_t> attempts;
};

/// Steps up from base_star(m) while the threshold holds and returns the
/// last graph that still satisfied it, trimmed to |A| = |B| when possible.
/// With no completed step the base star is returned and `feasible` is false.
GirthRun build_girth_construction(std::size_t m, std::size_t girth_half,
                                  const ConstantSchedule& sched, std::uint64_t seed);

/// base_star(k) tensored k times. Throws TooLarge beyond vertex_cap vertices.
IncidenceGraph bcstt_construction(std::size_t k, std::size_t vertex_cap = 200000);

/// Vertices are the edges of g, in order. (u, v) ~ (u', v') iff, with
/// u <_A u', also v <_B v' and {u, v'} is an edge.
AdjacencyGraph superline(const OrderedBipartiteGraph& g);

/// The same graph as superline(ordered(g)) encoded in R^8 with ten forms:
/// vertex (x, y, a, b, c, d, i, j) for point (x, y) in rect (a, c) x (b, d)
/// with order ranks i, j.
SemilinearGraph superline_semilinear(const IncidenceGraph& g);
SemilinearGraph superline_semilinear(const IncidenceGraph& g, const std::vector<std::size_t>& rank_a,
                                     const std::vector<std::size_t>& rank_b);

/// Point boxes first, then rectangle boxes; their intersection graph is the
/// incidence graph. Throws DegenerateInput on coincident points.
std::vector<Box> boxes3d_from_incidence(const IncidenceGraph& g);

/// Increasing k-tuples of [m], adjacent when one is the left shift of the
/// other. Throws InvalidParams unless m >= k >= 2.
SemilinearGraph shift_graph(std::size_t m, std::size_t k);

/// (p^2 - 1)-subsets of [m] as sorted coordinate vectors, adjacent iff
/// |A ∩ B| = -1 mod p, via equality patterns of x(i) - y(j). Throws
/// InvalidParams unless p is prime and m >= p^2 - 1.
SemilinearGraph frankl_wilson(std::size_t p, std::size_t m);

/// The same graph by direct set arithmetic.
AdjacencyGraph frankl_wilson_by_sets(std::size_t p, std::size_t m);

}  // namespace semilinear
