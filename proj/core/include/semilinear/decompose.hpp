#pragma once

#include "semilinear/adjacency.hpp"
#include "semilinear/formula.hpp"
#include "semilinear/rational.hpp"
#include "semilinear/semilinear_graph.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace semilinear {

/// a(z) = constant + <coeffs, z>.
struct AffineFunction {
    Vector coeffs;
    Rational constant;

    Rational operator()(std::span<const Rational> z) const;
};

/// f(x, y) = g(x) + h(y); the constant term goes to g.
std::pair<AffineFunction, AffineFunction> split_linear(const LinearForm& f);

struct QuasiCompVertex {
    Vector x;
    Vector y;
    std::size_t original_index = 0;
};

/// Vertices are pairs (x, y) in R^t x R^t; v ~ w iff v.x < w.y or w.x < v.y
/// strictly in every coordinate.
struct QuasiCompGraph {
    std::size_t t = 0;
    std::vector<QuasiCompVertex> vertices;

    std::size_t size() const { return vertices.size(); }
    bool has_edge(std::size_t v, std::size_t w) const;
    void validate() const;
};

AdjacencyGraph materialize(const QuasiCompGraph& q);

/// Strict coordinatewise comparison a < b.
bool strictly_below(std::span<const Rational> a, std::span<const Rational> b);

/// One quasi-comparability graph per DNF term; their union is the DNF graph.
std::vector<QuasiCompGraph> to_quasicomp(const DnfGraph& d);

/// Shifts every y down by half the smallest positive gap y_w(i) - x_v(i)
/// (over all ordered pairs including v = w). Keeps the edge set and makes
/// every x/y comparison strict, across vertices as well as within one.
QuasiCompGraph perturb(const QuasiCompGraph& q);

bool is_perturbed(const QuasiCompGraph& q);

/// Bit i set <=> y(i) > x(i).
struct TypeVector {
    std::uint32_t plus_mask = 0;
    std::size_t t = 0;

    bool plus(std::size_t i) const { return (plus_mask >> i) & 1U; }
    auto operator<=>(const TypeVector&) const = default;
};

TypeVector type_of(const QuasiCompVertex& v);

/// Vertex indices grouped by type. Throws NotPerturbed when some x(i) = y(i).
std::map<TypeVector, std::vector<std::size_t>> type_partition(const QuasiCompGraph& q);

/// Integer image of a quasi-comparability graph: per coordinate, the x and
/// y values are replaced by their ranks in the merged sorted list, which
/// keeps every comparison (and equality) between them.
struct RankedQuasiComp {
    std::size_t t = 0;
    std::size_t n = 0;
    std::vector<std::int64_t> x;  // n * t, row major
    std::vector<std::int64_t> y;

    std::int64_t xs(std::size_t v, std::size_t i) const { return x[v * t + i]; }
    std::int64_t ys(std::size_t v, std::size_t i) const { return y[v * t + i]; }

    bool below(std::size_t v, std::size_t w) const {
        for (std::size_t i = 0; i < t; ++i) {
            if (xs(v, i) >= ys(w, i)) return false;
        }
        return true;
    }
    bool has_edge(std::size_t v, std::size_t w) const {
        return v != w && (below(v, w) || below(w, v));
    }
    std::uint32_t type_mask(std::size_t v) const;
};

RankedQuasiComp rank_compress(const QuasiCompGraph& q);

}  // namespace semilinear
