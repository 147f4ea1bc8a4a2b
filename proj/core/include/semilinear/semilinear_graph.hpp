#pragma once

#include "semilinear/formula.hpp"
#include "semilinear/rational.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace semilinear {

using Point = Vector;

/// Graph on points of R^d whose edges are a Boolean function of the sign
/// patterns of finitely many linear forms on pairs of points.
struct SemilinearGraph {
    std::size_t dim = 0;
    std::vector<Point> vertices;
    std::vector<LinearForm> forms;
    Formula formula = Formula::disjunction({});

    std::size_t size() const { return vertices.size(); }
    std::size_t complexity() const { return forms.size(); }

    /// Checks coordinate/coefficient lengths and atom indices.
    /// Throws InvalidParams.
    void validate() const;
};

/// Disjunction of conjunctions of strict atoms f < 0. Terms index into a
/// shared form table; every term has the same length.
struct DnfGraph {
    std::size_t dim = 0;
    std::vector<Point> vertices;
    std::vector<LinearForm> forms;
    std::vector<std::vector<std::size_t>> terms;

    std::size_t size() const { return vertices.size(); }
    std::size_t term_length() const { return terms.empty() ? 0 : terms.front().size(); }

    void validate() const;
};

/// Validates and checks swap symmetry; throws SymmetryError on failure.
SemilinearGraph make_semilinear(std::size_t dim, std::vector<Point> vertices,
                                std::vector<LinearForm> forms, Formula formula);

/// Formula value on the ordered pair (u, v). Self pairs are never edges and
/// are rejected with InvalidPair; bad indices raise IndexError.
bool eval_edge(const SemilinearGraph& g, std::size_t u, std::size_t v);
bool eval_edge(const DnfGraph& g, std::size_t u, std::size_t v);

/// First vertex pair whose formula value changes under swapping, if any.
std::optional<std::pair<std::size_t, std::size_t>> symmetry_check(const SemilinearGraph& g);
std::optional<std::pair<std::size_t, std::size_t>> symmetry_check(const DnfGraph& g);

}  // namespace semilinear
