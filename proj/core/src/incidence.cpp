#include "semilinear/construct.hpp"
#include "semilinear/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>

namespace semilinear {

namespace {

// Dense ranks of a list of values; equal values share a rank.
std::vector<std::int64_t> dense_ranks(const std::vector<const Rational*>& values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return *values[a] < *values[b]; });
    std::vector<std::int64_t> rank(values.size());
    std::int64_t r = -1;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i == 0 || *values[order[i - 1]] < *values[order[i]]) ++r;
        rank[order[i]] = r;
    }
    return rank;
}

}  // namespace

std::vector<Edge> incidence_edges(const std::vector<Vector>& points, const std::vector<Box>& rects) {
    // Exact comparisons are done once while ranking; the scan is on integers.
    const std::size_t np = points.size();
    const std::size_t nr = rects.size();
    std::vector<std::vector<std::int64_t>> ranks;
    for (std::size_t axis = 0; axis < 2; ++axis) {
        std::vector<const Rational*> values;
        values.reserve(np + 2 * nr);
        for (const auto& p : points) values.push_back(&p[axis]);
        for (const auto& r : rects) {
            values.push_back(&r.lower[axis]);
            values.push_back(&r.upper[axis]);
        }
        ranks.push_back(dense_ranks(values));
    }
    auto point_rank = [&](std::size_t axis, std::size_t p) { return ranks[axis][p]; };
    auto lower_rank = [&](std::size_t axis, std::size_t r) { return ranks[axis][np + 2 * r]; };
    auto upper_rank = [&](std::size_t axis, std::size_t r) { return ranks[axis][np + 2 * r + 1]; };

    std::vector<std::size_t> by_x(np);
    std::iota(by_x.begin(), by_x.end(), 0);
    std::sort(by_x.begin(), by_x.end(),
              [&](std::size_t a, std::size_t b) { return point_rank(0, a) < point_rank(0, b); });
    std::vector<std::int64_t> xs(np);
    for (std::size_t i = 0; i < np; ++i) xs[i] = point_rank(0, by_x[i]);

    std::vector<Edge> edges;
    for (std::size_t r = 0; r < nr; ++r) {
        const std::int64_t lo_y = lower_rank(1, r);
        const std::int64_t hi_y = upper_rank(1, r);
        auto first = std::upper_bound(xs.begin(), xs.end(), lower_rank(0, r));
        auto last = std::lower_bound(xs.begin(), xs.end(), upper_rank(0, r));
        for (auto it = first; it < last; ++it) {
            const std::size_t p = by_x[static_cast<std::size_t>(it - xs.begin())];
            const std::int64_t y = point_rank(1, p);
            if (lo_y < y && y < hi_y) edges.emplace_back(p, r);
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

namespace {

void check_shapes(const std::vector<Vector>& points, const std::vector<Box>& rects) {
    for (std::size_t p = 0; p < points.size(); ++p) {
        if (points[p].size() != 2) throw InvalidParams("point " + std::to_string(p) + " is not planar");
    }
    for (std::size_t r = 0; r < rects.size(); ++r) {
        if (rects[r].dim() != 2) throw InvalidParams("rect " + std::to_string(r) + " is not planar");
        rects[r].validate();
    }
}

}  // namespace

IncidenceGraph make_incidence(std::vector<Vector> points, std::vector<Box> rects) {
    check_shapes(points, rects);
    IncidenceGraph g;
    g.edges = incidence_edges(points, rects);
    g.points = std::move(points);
    g.rects = std::move(rects);
    return g;
}

bool geometry_consistent(const IncidenceGraph& g) {
    return g.edges == incidence_edges(g.points, g.rects);
}

void IncidenceGraph::validate() const {
    check_shapes(points, rects);
    if (!geometry_consistent(*this)) throw InvalidParams("incidence edges disagree with the geometry");
}

std::size_t IncidenceGraph::point_degree(std::size_t p) const {
    return static_cast<std::size_t>(
        std::count_if(edges.begin(), edges.end(), [p](const Edge& e) { return e.first == p; }));
}

std::size_t IncidenceGraph::rect_degree(std::size_t r) const {
    return static_cast<std::size_t>(
        std::count_if(edges.begin(), edges.end(), [r](const Edge& e) { return e.second == r; }));
}

AdjacencyGraph bipartite_graph(const IncidenceGraph& g) {
    AdjacencyGraph out(g.points.size() + g.rects.size());
    for (const auto& [p, r] : g.edges) out.add_edge(p, g.points.size() + r);
    return out;
}

void OrderedBipartiteGraph::validate() const {
    auto is_permutation = [](const std::vector<std::size_t>& rank, std::size_t n) {
        if (rank.size() != n) return false;
        std::vector<bool> seen(n, false);
        for (std::size_t r : rank) {
            if (r >= n || seen[r]) return false;
            seen[r] = true;
        }
        return true;
    };
    if (!is_permutation(rank_a, a_size) || !is_permutation(rank_b, b_size)) {
        throw InvalidParams("ordered bipartite graph: ranks are not permutations");
    }
    for (const auto& [a, b] : edges) {
        if (a >= a_size || b >= b_size) throw IndexError("ordered bipartite graph: edge out of range");
    }
}

OrderedBipartiteGraph ordered(const IncidenceGraph& g) {
    OrderedBipartiteGraph out;
    out.a_size = g.points.size();
    out.b_size = g.rects.size();
    out.rank_a.resize(out.a_size);
    out.rank_b.resize(out.b_size);
    std::iota(out.rank_a.begin(), out.rank_a.end(), 0);
    std::iota(out.rank_b.begin(), out.rank_b.end(), 0);
    out.edges = g.edges;
    return out;
}

AdjacencyGraph superline(const OrderedBipartiteGraph& g) {
    g.validate();
    std::vector<Edge> edges = g.edges;
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    std::vector<bool> present(g.a_size * g.b_size, false);
    for (const auto& [a, b] : edges) present[a * g.b_size + b] = true;

    AdjacencyGraph out(edges.size());
    for (std::size_t s = 0; s < edges.size(); ++s) {
        for (std::size_t t = s + 1; t < edges.size(); ++t) {
            auto [u, v] = edges[s];
            auto [u2, v2] = edges[t];
            if (g.rank_a[u] == g.rank_a[u2]) continue;
            if (g.rank_a[u] > g.rank_a[u2]) {
                std::swap(u, u2);
                std::swap(v, v2);
            }
            if (g.rank_b[v] < g.rank_b[v2] && present[u * g.b_size + v2]) out.add_edge(s, t);
        }
    }
    return out;
}

}  // namespace semilinear
