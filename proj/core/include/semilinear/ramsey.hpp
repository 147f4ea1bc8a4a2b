#pragma once

#include "semilinear/adjacency.hpp"
#include "semilinear/decompose.hpp"
#include "semilinear/rational.hpp"
#include "semilinear/semilinear_graph.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace semilinear {

/// A subset of [t] = {1, ..., t}; bit i - 1 stands for element i.
using SubsetMask = std::uint32_t;

/// Nonnegative weights on the Boolean lattice 2^[t]; absent sets weigh 0.
struct WeightFunction {
    std::size_t t = 0;
    std::map<SubsetMask, Rational> weights;

    Rational weight(SubsetMask a) const;
    Rational weight(const std::vector<SubsetMask>& family) const;
    Rational total() const;
    /// Weight of the sets missing / containing element i (1-based).
    Rational missing(std::size_t i) const;
    Rational containing(std::size_t i) const;
    bool balanced() const;
    /// Throws InvalidParams on negative weights, t > 31 or masks outside [t].
    void validate() const;
};

struct EhOutcome {
    enum class Kind { CaseI, CaseII };
    Kind kind = Kind::CaseI;
    /// CaseII only: disjoint families of subsets, pairwise incomparable
    /// across families.
    std::vector<std::vector<SubsetMask>> families;
};

/// Either both extremes weigh >= 1/10, or disjoint, mutually incomparable
/// families with sum of weight^(1/10) >= 1. Throws PreconditionViolated
/// unless t >= 2, the weights are balanced and the total is >= 9/10.
EhOutcome eh_decompose(const WeightFunction& w);

/// Throws ProofInvariantViolated if the outcome breaks its guarantees.
void check_eh_outcome(const WeightFunction& w, const EhOutcome& outcome);

/// Exact certificate for sum of values^(1/10) >= 1, via rational lower
/// bounds r with r^10 <= value. False means no certificate was found.
bool tenth_roots_reach_one(const std::vector<Rational>& values);

class Cotree {
public:
    enum class Op { Leaf, Union, Join };

    static Cotree leaf(std::size_t vertex);
    static Cotree make(Op op, std::vector<Cotree> children);

    Op op() const { return op_; }
    std::size_t vertex() const { return vertex_; }
    const std::vector<Cotree>& children() const { return children_; }

    std::vector<std::size_t> leaves() const;
    std::size_t leaf_count() const;
    /// Throws InvalidCotree on repeated leaves or childless internal nodes.
    void check_structure() const;
    /// The first union pair joined by an edge or join pair missing one, if any.
    std::optional<Edge> induced_violation(const AdjacencyGraph& g) const;

    bool operator==(const Cotree&) const = default;

private:
    Op op_ = Op::Leaf;
    std::size_t vertex_ = 0;
    std::vector<Cotree> children_;
};

struct CographStats {
    std::size_t max_depth = 0;
    std::size_t drops = 0;         // coordinate removed, complexity decreased
    std::size_t empty_slabs = 0;   // independent middle slab returned
    std::size_t joins = 0;         // both extreme classes heavy
    std::size_t unions = 0;        // incomparable families
    std::size_t interval_bases = 0;
    std::size_t complete_bases = 0;
    std::size_t type_class_size = 0;
};

/// Perturbs q, keeps its largest type class and extracts an induced cograph
/// from it by the slab recursion. Leaves are vertex indices of q. Every
/// structural claim used along the way is checked; a failure raises
/// ProofInvariantViolated. Throws InvalidParams on an empty graph.
Cotree find_cograph(const QuasiCompGraph& q, CographStats* stats = nullptr);

struct RamseyWitness {
    enum class Kind { Clique, IndependentSet };
    Kind kind = Kind::Clique;
    std::vector<std::size_t> vertices;

    std::size_t size() const { return vertices.size(); }
};

/// Largest clique or independent set of the cograph, ties going to the
/// clique. Its size is at least the square root of the leaf count.
RamseyWitness cograph_witness(const Cotree& c);

/// True iff the witness is a clique (resp. independent set) of g.
bool witness_consistent(const RamseyWitness& w, const AdjacencyGraph& g);

/// Term-by-term recursion over the DNF: the witness for the first u - 1
/// terms is kept if it is a clique, otherwise the last term is solved on it.
/// The result is checked against the materialized graph.
RamseyWitness ramsey_witness(const DnfGraph& d);

}  // namespace semilinear
