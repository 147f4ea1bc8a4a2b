#pragma once

#include "semilinear/adjacency.hpp"
#include "semilinear/rational.hpp"
#include "semilinear/semilinear_graph.hpp"

namespace semilinear {

/// Half the smallest nonzero |f_i(u, v)| over ordered pairs of distinct
/// vertices, or 1 when every value vanishes. For this epsilon,
/// f <= 0  <=>  f - epsilon < 0  on the vertex set.
Rational epsilon_for(const SemilinearGraph& g);

/// Rewrites the formula as a disjunction of conjunctions of strict atoms
/// over the same vertex set. Throws SymmetryError for asymmetric formulas.
DnfGraph to_dnf(const SemilinearGraph& g);

AdjacencyGraph materialize(const SemilinearGraph& g);
AdjacencyGraph materialize(const DnfGraph& g);

}  // namespace semilinear
