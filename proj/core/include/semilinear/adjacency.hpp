#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace semilinear {

using Edge = std::pair<std::size_t, std::size_t>;

/// Materialized simple undirected graph: dense bit matrix plus sorted
/// neighbor lists.
class AdjacencyGraph {
public:
    AdjacencyGraph() = default;
    explicit AdjacencyGraph(std::size_t n);
    AdjacencyGraph(std::size_t n, const std::vector<Edge>& edges);

    std::size_t size() const { return n_; }
    std::size_t edge_count() const { return edge_count_; }

    /// Ignores self-loops and duplicates.
    void add_edge(std::size_t u, std::size_t v);
    bool has_edge(std::size_t u, std::size_t v) const;

    const std::vector<std::size_t>& neighbors(std::size_t v) const { return adj_[v]; }
    std::size_t degree(std::size_t v) const { return adj_[v].size(); }

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    AdjacencyGraph complement() const;
    AdjacencyGraph induced(const std::vector<std::size_t>& vertices) const;

    bool operator==(const AdjacencyGraph& other) const;

private:
    std::size_t n_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<std::vector<std::size_t>> adj_;
    std::vector<bool> matrix_;
};

}  // namespace semilinear
