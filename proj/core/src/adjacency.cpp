#include "semilinear/adjacency.hpp"

#include <algorithm>
#include <stdexcept>

namespace semilinear {

AdjacencyGraph::AdjacencyGraph(std::size_t n) : n_(n), adj_(n), matrix_(n * n, false) {}

AdjacencyGraph::AdjacencyGraph(std::size_t n, const std::vector<Edge>& edges)
    : AdjacencyGraph(n) {
    for (const auto& [u, v] : edges) {
        add_edge(u, v);
    }
}

void AdjacencyGraph::add_edge(std::size_t u, std::size_t v) {
    if (u >= n_ || v >= n_) {
        throw std::out_of_range("edge endpoint out of range");
    }
    if (u == v || matrix_[u * n_ + v]) {
        return;
    }
    matrix_[u * n_ + v] = true;
    matrix_[v * n_ + u] = true;
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++edge_count_;
}

bool AdjacencyGraph::has_edge(std::size_t u, std::size_t v) const {
    return u < n_ && v < n_ && matrix_[u * n_ + v];
}

std::vector<Edge> AdjacencyGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (std::size_t u = 0; u < n_; ++u) {
        for (std::size_t v : adj_[u]) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

AdjacencyGraph AdjacencyGraph::complement() const {
    AdjacencyGraph out(n_);
    for (std::size_t u = 0; u < n_; ++u) {
        for (std::size_t v = u + 1; v < n_; ++v) {
            if (!has_edge(u, v)) {
                out.add_edge(u, v);
            }
        }
    }
    return out;
}

AdjacencyGraph AdjacencyGraph::induced(const std::vector<std::size_t>& vertices) const {
    AdjacencyGraph out(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            if (has_edge(vertices[i], vertices[j])) {
                out.add_edge(i, j);
            }
        }
    }
    return out;
}

bool AdjacencyGraph::operator==(const AdjacencyGraph& other) const {
    return n_ == other.n_ && matrix_ == other.matrix_;
}

}  // namespace semilinear
