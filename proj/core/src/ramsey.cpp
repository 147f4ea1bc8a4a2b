#include "semilinear/errors.hpp"
#include "semilinear/normalize.hpp"
#include "semilinear/ramsey.hpp"

#include <algorithm>
#include <numeric>

namespace semilinear {

bool witness_consistent(const RamseyWitness& w, const AdjacencyGraph& g) {
    const bool want_edge = w.kind == RamseyWitness::Kind::Clique;
    for (std::size_t i = 0; i < w.vertices.size(); ++i) {
        if (w.vertices[i] >= g.size()) return false;
        for (std::size_t j = i + 1; j < w.vertices.size(); ++j) {
            if (w.vertices[i] == w.vertices[j]) return false;
            if (g.has_edge(w.vertices[i], w.vertices[j]) != want_edge) return false;
        }
    }
    return true;
}

namespace {

RamseyWitness solve_term(const QuasiCompGraph& q, const std::vector<std::size_t>& subset) {
    QuasiCompGraph restricted;
    restricted.t = q.t;
    for (std::size_t v : subset) restricted.vertices.push_back(q.vertices[v]);
    RamseyWitness w = cograph_witness(find_cograph(restricted));
    for (auto& v : w.vertices) v = restricted.vertices[v].original_index;
    std::sort(w.vertices.begin(), w.vertices.end());
    return w;
}

RamseyWitness solve_prefix(const std::vector<QuasiCompGraph>& terms, std::size_t u,
                           const std::vector<std::size_t>& subset) {
    if (u == 1) return solve_term(terms.front(), subset);
    RamseyWitness w = solve_prefix(terms, u - 1, subset);
    if (w.kind == RamseyWitness::Kind::Clique) return w;
    return solve_term(terms[u - 1], w.vertices);
}

}  // namespace

RamseyWitness ramsey_witness(const DnfGraph& d) {
    d.validate();
    const std::size_t n = d.vertices.size();
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), 0);
    const auto terms = to_quasicomp(d);
    RamseyWitness w;
    if (n == 0) return w;
    if (terms.empty()) {
        w.kind = RamseyWitness::Kind::IndependentSet;
        w.vertices = all;
    } else {
        w = solve_prefix(terms, terms.size(), all);
    }
    if (!witness_consistent(w, materialize(d))) {
        throw ProofInvariantViolated("witness disagrees with the materialized graph", w.vertices);
    }
    return w;
}

}  // namespace semilinear
