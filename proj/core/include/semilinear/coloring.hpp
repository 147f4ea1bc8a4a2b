#pragma once

#include "semilinear/adjacency.hpp"
#include "semilinear/decompose.hpp"
#include "semilinear/rational.hpp"
#include "semilinear/semilinear_graph.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace semilinear {

/// Open axis-parallel box; lower[i] < upper[i] in every coordinate.
struct Box {
    Vector lower;
    Vector upper;

    std::size_t dim() const { return lower.size(); }
    bool intersects(const Box& other) const;
    void validate() const;
};

AdjacencyGraph intersection_graph(std::span<const Box> boxes);

/// Strict partial order on {0, ..., size - 1}.
struct OrderRelation {
    std::size_t size = 0;
    std::function<bool(std::size_t, std::size_t)> less;
};

AdjacencyGraph comparability_graph(const OrderRelation& order);

struct Coloring {
    std::vector<std::uint64_t> colors;
    std::uint64_t palette = 0;

    std::size_t size() const { return colors.size(); }
};

/// Longest chain, listed bottom to top. Throws NotPartialOrder on a cycle or
/// a reflexive element.
std::vector<std::size_t> longest_chain(const OrderRelation& order);

/// color(v) = (length of the longest chain ending at v) - 1. The palette is
/// the height of the order, i.e. the clique number of its comparability graph.
Coloring mirsky_color(const OrderRelation& order);

/// Mixed-radix pairing of several colorings of one vertex set; proper for the
/// union of the graphs whenever each input is proper for its own graph.
/// Throws DomainMismatch on different vertex counts and std::overflow_error
/// when the palette product exceeds 64 bits.
Coloring product_color(std::span<const Coloring> colorings);

/// Renumbers the colors in order of first use; never increases the palette.
Coloring compact(const Coloring& c);

struct HyperplaneSplit {
    Rational h;
    std::vector<std::size_t> below;     // upper[dim] <= h
    std::vector<std::size_t> above;     // lower[dim] >= h
    std::vector<std::size_t> crossing;  // lower[dim] < h < upper[dim]
};

/// Sweeps the endpoints in coordinate `dim` in increasing order and returns
/// the first h with 2|below| <= n and 2|above| <= n. When no endpoint
/// qualifies (e.g. all boxes equal) the midpoints between consecutive
/// endpoints are swept the same way; one of them always qualifies.
HyperplaneSplit split_hyperplane(std::span<const Box> boxes, std::size_t dim);

struct BoxColoringStats {
    std::size_t max_depth = 0;
    std::size_t calls = 0;
};

/// Proper coloring of (intersection graph of boxes) ∩ (comparability graph
/// of order) by divide and conquer on the last coordinate: both sides of the
/// split share a palette, the crossing boxes get a fresh one (Mirsky in
/// dimension 1, recursion in dimension - 1 otherwise).
/// Palette <= s * (1 + log2 n)^d. A chain of s pairwise intersecting boxes
/// raises PreconditionViolated carrying the chain.
Coloring color_box_cap_comparability(std::span<const Box> boxes, const OrderRelation& order,
                                     std::size_t s, BoxColoringStats* stats = nullptr);

/// Inside one type class of a perturbed quasi-comparability graph (plus_mask
/// = coordinates with y > x): for each subset Q of the plus coordinates, the
/// box graph on the plus coordinates outside Q intersected with the
/// comparability graph of the order prec_Q. Their union over Q is the
/// induced graph on the class.
class TypeClassDecomposition {
public:
    TypeClassDecomposition(const RankedQuasiComp& graph, std::uint32_t plus_mask);

    /// All subsets Q of the plus coordinates, as bit masks in increasing order.
    const std::vector<std::uint32_t>& subsets() const { return subsets_; }

    std::vector<std::size_t> box_coordinates(std::uint32_t q) const;
    bool intersects(std::uint32_t q, std::size_t v, std::size_t w) const;
    bool less(std::uint32_t q, std::size_t v, std::size_t w) const;

private:
    const RankedQuasiComp* graph_;
    std::uint32_t plus_mask_;
    std::vector<std::uint32_t> subsets_;
};

/// Perturb, split by type, color every (Q-subset) piece with the box
/// coloring, combine pieces by product and types by disjoint palettes.
/// Violations report vertex indices of q.
Coloring color_quasicomp(const QuasiCompGraph& q, std::size_t s);

/// Product of the per-term quasi-comparability colorings. Violations report
/// source vertex indices.
Coloring color_dnf(const DnfGraph& d, std::size_t s);
Coloring color_semilinear(const SemilinearGraph& g, std::size_t s);

}  // namespace semilinear
