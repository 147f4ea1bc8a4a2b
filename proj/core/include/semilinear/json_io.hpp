#pragma once

#include "semilinear/adjacency.hpp"
#include "semilinear/coloring.hpp"
#include "semilinear/construct.hpp"
#include "semilinear/decompose.hpp"
#include "semilinear/formula.hpp"
#include "semilinear/ramsey.hpp"
#include "semilinear/semilinear_graph.hpp"

#include "json.hpp"

#include <string>

namespace semilinear {

using Json = nlohmann::ordered_json;

// Rationals travel as "p/q" strings (plain integers are accepted on input).
// Every *_from_json throws InvalidParams on malformed input.

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const LinearForm& f);
LinearForm form_from_json(const Json& j, std::size_t dim);

Json to_json(const Formula& f);
Formula formula_from_json(const Json& j);

Json to_json(const SemilinearGraph& g);
SemilinearGraph semilinear_from_json(const Json& j);

Json to_json(const DnfGraph& g);
DnfGraph dnf_from_json(const Json& j);

Json to_json(const AdjacencyGraph& g);
AdjacencyGraph adjacency_from_json(const Json& j);

Json to_json(const QuasiCompGraph& q);
QuasiCompGraph quasicomp_from_json(const Json& j);

Json to_json(const Coloring& c);
Coloring coloring_from_json(const Json& j);

Json to_json(const RamseyWitness& w);
RamseyWitness witness_from_json(const Json& j);

Json to_json(const Cotree& c);
Cotree cotree_from_json(const Json& j);

Json to_json(const IncidenceGraph& g);
IncidenceGraph incidence_from_json(const Json& j);

Json to_json(const Box& b);
Box box_from_json(const Json& j);

Json to_json(const ConstantSchedule& s);
ConstantSchedule schedule_from_json(const Json& j);

enum class GraphFormat { Semilinear, Dnf, Adjacency, QuasiComp, Incidence, Boxes };

/// Which of the graph formats a document uses.
GraphFormat detect_format(const Json& j);

/// {"check": name, "ok": ok, "witness": witness}
Json verdict(const std::string& check, bool ok, Json witness = nullptr);

}  // namespace semilinear
