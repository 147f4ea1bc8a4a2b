#pragma once

#include "semilinear/adjacency.hpp"
#include "semilinear/coloring.hpp"
#include "semilinear/construct.hpp"
#include "semilinear/ramsey.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

namespace semilinear {

/// Inputs above these limits are refused with OverBudget.
struct OracleBudget {
    std::size_t max_vertices = 16;
    std::size_t max_edges = 100000;
    double timeout_seconds = 60.0;

    static OracleBudget chromatic() { return {16, 100000, 60.0}; }
    static OracleBudget clique() { return {40, 100000, 60.0}; }
    static OracleBudget vertices(std::size_t n) { return {n, 1000000, 120.0}; }
};

/// Exact chromatic number by DSATUR branch and bound.
std::size_t exact_chromatic(const AdjacencyGraph& g, const OracleBudget& budget = OracleBudget::chromatic());

/// Maximum clique by branch and bound with greedy coloring bounds; sorted.
std::vector<std::size_t> max_clique(const AdjacencyGraph& g, const OracleBudget& budget = OracleBudget::clique());
std::vector<std::size_t> max_independent_set(const AdjacencyGraph& g,
                                             const OracleBudget& budget = OracleBudget::clique());

/// Length of a shortest cycle; nullopt for forests.
std::optional<std::size_t> girth(const AdjacencyGraph& g);

/// Two vertices of side A with two common neighbors: (a1, a2, b1, b2).
std::optional<std::array<std::size_t, 4>> has_K22(const AdjacencyGraph& g, const std::vector<bool>& in_a);
/// Points as A; indices as in bipartite_graph (rects offset by |points|).
std::optional<std::array<std::size_t, 4>> has_K22(const IncidenceGraph& g);

/// A pair of leaves contradicting the cotree, if any. Throws InvalidCotree on
/// a malformed tree.
std::optional<Edge> is_cograph_induced(const AdjacencyGraph& g, const Cotree& c);

/// An induced path a - b - c - d among `vertices`, if any.
std::optional<std::array<std::size_t, 4>> find_induced_p4(const AdjacencyGraph& g,
                                                          const std::vector<std::size_t>& vertices);

/// First monochromatic edge, if any. Throws DomainMismatch on a size mismatch.
std::optional<Edge> is_proper(const AdjacencyGraph& g, const Coloring& c);

struct IncidenceDiff {
    std::vector<Edge> missing;  // geometric but not claimed
    std::vector<Edge> extra;    // claimed but not geometric

    bool ok() const { return missing.empty() && extra.empty(); }
};

IncidenceDiff incidence_check(const std::vector<Vector>& points, const std::vector<Box>& rects,
                              const std::vector<Edge>& claimed);

}  // namespace semilinear
