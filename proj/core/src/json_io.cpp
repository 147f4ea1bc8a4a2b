#include "semilinear/json_io.hpp"

#include "semilinear/errors.hpp"

#include <stdexcept>

namespace semilinear {

namespace {

[[noreturn]] void fail(const std::string& what) { throw InvalidParams("json: " + what); }

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) fail(std::string("missing field \"") + name + "\"");
    return j.at(name);
}

std::size_t index_from_json(const Json& j) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
        fail("expected a nonnegative integer");
    }
    return j.get<std::size_t>();
}

Json vector_json(const Vector& v) {
    Json out = Json::array();
    for (const auto& q : v) out.push_back(to_json(q));
    return out;
}

Vector vector_from_json(const Json& j, std::size_t dim) {
    if (!j.is_array() || j.size() != dim) fail("expected a vector of length " + std::to_string(dim));
    Vector out;
    for (const auto& q : j) out.push_back(rational_from_json(q));
    return out;
}

std::vector<Vector> points_from_json(const Json& j, std::size_t dim) {
    if (!j.is_array()) fail("expected a list of vectors");
    std::vector<Vector> out;
    for (const auto& v : j) out.push_back(vector_from_json(v, dim));
    return out;
}

const char* relation_name(Relation r) {
    switch (r) {
        case Relation::LT: return "lt";
        case Relation::LE: return "le";
        case Relation::EQ: return "eq";
    }
    return "lt";
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
    try {
        if (j.is_string()) return parse_rational(j.get<std::string>());
        if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
    } catch (const std::invalid_argument& e) {
        fail(e.what());
    }
    fail("expected a rational string");
}

Json to_json(const LinearForm& f) {
    return Json{{"x", vector_json(f.x_coeffs)}, {"y", vector_json(f.y_coeffs)}, {"c", to_json(f.constant)}};
}

LinearForm form_from_json(const Json& j, std::size_t dim) {
    return LinearForm{vector_from_json(field(j, "x"), dim), vector_from_json(field(j, "y"), dim),
                      j.contains("c") ? rational_from_json(j.at("c")) : Rational(0)};
}

Json to_json(const Formula& f) {
    switch (f.kind()) {
        case Formula::Kind::Atom:
            return Json{{"op", "atom"}, {"form", f.atom().form}, {"rel", relation_name(f.atom().relation)}};
        case Formula::Kind::Not:
            return Json{{"op", "not"}, {"child", to_json(f.children().front())}};
        case Formula::Kind::And:
        case Formula::Kind::Or: {
            Json children = Json::array();
            for (const auto& c : f.children()) children.push_back(to_json(c));
            return Json{{"op", f.kind() == Formula::Kind::And ? "and" : "or"}, {"children", children}};
        }
    }
    return nullptr;
}

Formula formula_from_json(const Json& j) {
    const std::string op = field(j, "op").get<std::string>();
    if (op == "atom") {
        const std::string rel = field(j, "rel").get<std::string>();
        Relation r = Relation::LT;
        if (rel == "le") {
            r = Relation::LE;
        } else if (rel == "eq") {
            r = Relation::EQ;
        } else if (rel != "lt") {
            fail("unknown relation \"" + rel + "\"");
        }
        return Formula::atom(index_from_json(field(j, "form")), r);
    }
    if (op == "not") return Formula::negation(formula_from_json(field(j, "child")));
    if (op == "and" || op == "or") {
        std::vector<Formula> children;
        for (const auto& c : field(j, "children")) children.push_back(formula_from_json(c));
        return op == "and" ? Formula::conjunction(std::move(children)) : Formula::disjunction(std::move(children));
    }
    fail("unknown formula node \"" + op + "\"");
}

Json to_json(const SemilinearGraph& g) {
    Json vertices = Json::array();
    for (const auto& v : g.vertices) vertices.push_back(vector_json(v));
    Json forms = Json::array();
    for (const auto& f : g.forms) forms.push_back(to_json(f));
    return Json{{"dim", g.dim}, {"vertices", vertices}, {"forms", forms}, {"formula", to_json(g.formula)}};
}

SemilinearGraph semilinear_from_json(const Json& j) {
    const std::size_t dim = index_from_json(field(j, "dim"));
    std::vector<LinearForm> forms;
    for (const auto& f : field(j, "forms")) forms.push_back(form_from_json(f, dim));
    return make_semilinear(dim, points_from_json(field(j, "vertices"), dim), std::move(forms),
                           formula_from_json(field(j, "formula")));
}

Json to_json(const DnfGraph& g) {
    Json vertices = Json::array();
    for (const auto& v : g.vertices) vertices.push_back(vector_json(v));
    Json forms = Json::array();
    for (const auto& f : g.forms) forms.push_back(to_json(f));
    return Json{{"dim", g.dim}, {"vertices", vertices}, {"forms", forms}, {"terms", g.terms}};
}

DnfGraph dnf_from_json(const Json& j) {
    DnfGraph g;
    g.dim = index_from_json(field(j, "dim"));
    g.vertices = points_from_json(field(j, "vertices"), g.dim);
    for (const auto& f : field(j, "forms")) g.forms.push_back(form_from_json(f, g.dim));
    for (const auto& term : field(j, "terms")) {
        std::vector<std::size_t> t;
        for (const auto& i : term) t.push_back(index_from_json(i));
        g.terms.push_back(std::move(t));
    }
    g.validate();
    if (auto bad = symmetry_check(g)) {
        throw SymmetryError("dnf graph is not symmetric", bad->first, bad->second);
    }
    return g;
}

Json to_json(const AdjacencyGraph& g) {
    Json edges = Json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
    return Json{{"n", g.size()}, {"edges", edges}};
}

AdjacencyGraph adjacency_from_json(const Json& j) {
    const std::size_t n = index_from_json(field(j, "n"));
    AdjacencyGraph g(n);
    for (const auto& e : field(j, "edges")) {
        if (!e.is_array() || e.size() != 2) fail("edge must be a pair");
        const std::size_t u = index_from_json(e[0]);
        const std::size_t v = index_from_json(e[1]);
        if (u >= n || v >= n || u == v) fail("edge out of range or a self-loop");
        g.add_edge(u, v);
    }
    return g;
}

Json to_json(const QuasiCompGraph& q) {
    Json vertices = Json::array();
    for (const auto& v : q.vertices) {
        vertices.push_back(Json{{"x", vector_json(v.x)}, {"y", vector_json(v.y)}, {"orig", v.original_index}});
    }
    return Json{{"t", q.t}, {"vertices", vertices}};
}

QuasiCompGraph quasicomp_from_json(const Json& j) {
    QuasiCompGraph q;
    q.t = index_from_json(field(j, "t"));
    std::size_t i = 0;
    for (const auto& v : field(j, "vertices")) {
        QuasiCompVertex vertex{vector_from_json(field(v, "x"), q.t), vector_from_json(field(v, "y"), q.t),
                               v.contains("orig") ? index_from_json(v.at("orig")) : i};
        q.vertices.push_back(std::move(vertex));
        ++i;
    }
    q.validate();
    return q;
}

Json to_json(const Coloring& c) { return Json{{"palette", c.palette}, {"colors", c.colors}}; }

Coloring coloring_from_json(const Json& j) {
    Coloring c;
    c.palette = field(j, "palette").get<std::uint64_t>();
    for (const auto& x : field(j, "colors")) c.colors.push_back(x.get<std::uint64_t>());
    for (auto x : c.colors) {
        if (x >= c.palette) fail("color outside the palette");
    }
    return c;
}

Json to_json(const RamseyWitness& w) {
    return Json{{"kind", w.kind == RamseyWitness::Kind::Clique ? "clique" : "is"}, {"vertices", w.vertices}};
}

RamseyWitness witness_from_json(const Json& j) {
    RamseyWitness w;
    const std::string kind = field(j, "kind").get<std::string>();
    if (kind == "clique") {
        w.kind = RamseyWitness::Kind::Clique;
    } else if (kind == "is") {
        w.kind = RamseyWitness::Kind::IndependentSet;
    } else {
        fail("unknown witness kind \"" + kind + "\"");
    }
    for (const auto& v : field(j, "vertices")) w.vertices.push_back(index_from_json(v));
    return w;
}

Json to_json(const Cotree& c) {
    if (c.op() == Cotree::Op::Leaf) return Json{{"op", "leaf"}, {"vertex", c.vertex()}};
    Json children = Json::array();
    for (const auto& child : c.children()) children.push_back(to_json(child));
    return Json{{"op", c.op() == Cotree::Op::Join ? "join" : "union"}, {"children", children}};
}

Cotree cotree_from_json(const Json& j) {
    const std::string op = field(j, "op").get<std::string>();
    if (op == "leaf") return Cotree::leaf(index_from_json(field(j, "vertex")));
    if (op != "union" && op != "join") fail("unknown cotree node \"" + op + "\"");
    std::vector<Cotree> children;
    for (const auto& c : field(j, "children")) children.push_back(cotree_from_json(c));
    return Cotree::make(op == "join" ? Cotree::Op::Join : Cotree::Op::Union, std::move(children));
}

Json to_json(const Box& b) { return Json{{"lo", vector_json(b.lower)}, {"hi", vector_json(b.upper)}}; }

Box box_from_json(const Json& j) {
    const Json& lo = field(j, "lo");
    if (!lo.is_array()) fail("box corner must be a list");
    Box b{vector_from_json(lo, lo.size()), vector_from_json(field(j, "hi"), lo.size())};
    b.validate();
    return b;
}

Json to_json(const IncidenceGraph& g) {
    Json points = Json::array();
    for (const auto& p : g.points) points.push_back(vector_json(p));
    Json rects = Json::array();
    for (const auto& r : g.rects) rects.push_back(to_json(r));
    Json edges = Json::array();
    for (const auto& [p, r] : g.edges) edges.push_back(Json::array({p, r}));
    return Json{{"points", points}, {"rects", rects}, {"edges", edges}};
}

IncidenceGraph incidence_from_json(const Json& j) {
    std::vector<Box> rects;
    for (const auto& r : field(j, "rects")) rects.push_back(box_from_json(r));
    IncidenceGraph g = make_incidence(points_from_json(field(j, "points"), 2), std::move(rects));
    if (j.contains("edges")) {
        std::vector<Edge> claimed;
        for (const auto& e : j.at("edges")) claimed.emplace_back(index_from_json(e.at(0)), index_from_json(e.at(1)));
        if (claimed != g.edges) fail("stored incidences disagree with the geometry");
    }
    return g;
}

Json to_json(const ConstantSchedule& s) {
    return Json{{"threshold_factor", to_json(s.threshold_factor)},
                {"degree_slack", to_json(s.degree_slack)},
                {"edge_floor", to_json(s.edge_floor)},
                {"max_resamples", s.max_resamples},
                {"vertex_cap", s.vertex_cap}};
}

ConstantSchedule schedule_from_json(const Json& j) {
    if (!j.is_object()) fail("schedule must be an object");
    ConstantSchedule s;
    if (j.contains("threshold_factor")) s.threshold_factor = rational_from_json(j.at("threshold_factor"));
    if (j.contains("degree_slack")) s.degree_slack = rational_from_json(j.at("degree_slack"));
    if (j.contains("edge_floor")) s.edge_floor = rational_from_json(j.at("edge_floor"));
    if (j.contains("max_resamples")) s.max_resamples = index_from_json(j.at("max_resamples"));
    if (j.contains("vertex_cap")) s.vertex_cap = index_from_json(j.at("vertex_cap"));
    s.validate();
    return s;
}

GraphFormat detect_format(const Json& j) {
    if (j.is_array()) return GraphFormat::Boxes;
    if (!j.is_object()) fail("expected a JSON object");
    if (j.contains("formula")) return GraphFormat::Semilinear;
    if (j.contains("terms")) return GraphFormat::Dnf;
    if (j.contains("points")) return GraphFormat::Incidence;
    if (j.contains("t") && j.contains("vertices")) return GraphFormat::QuasiComp;
    if (j.contains("n") && j.contains("edges")) return GraphFormat::Adjacency;
    fail("unrecognized graph document");
}

Json verdict(const std::string& check, bool ok, Json witness) {
    return Json{{"check", check}, {"ok", ok}, {"witness", std::move(witness)}};
}

}  // namespace semilinear
