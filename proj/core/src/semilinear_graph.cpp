#include "semilinear/semilinear_graph.hpp"

#include "semilinear/errors.hpp"
#include "split_ranks.hpp"

#include <string>

namespace semilinear {

namespace {

void check_points(std::size_t dim, const std::vector<Point>& vertices) {
    for (std::size_t v = 0; v < vertices.size(); ++v) {
        if (vertices[v].size() != dim) {
            throw InvalidParams("vertex " + std::to_string(v) + " has " +
                                std::to_string(vertices[v].size()) + " coordinates, expected " +
                                std::to_string(dim));
        }
    }
}

void check_forms(std::size_t dim, const std::vector<LinearForm>& forms) {
    for (std::size_t i = 0; i < forms.size(); ++i) {
        if (forms[i].x_coeffs.size() != dim || forms[i].y_coeffs.size() != dim) {
            throw InvalidParams("form " + std::to_string(i) + " has wrong dimension");
        }
    }
}

void check_formula(const Formula& f, std::size_t form_count) {
    switch (f.kind()) {
        case Formula::Kind::Atom:
            if (f.atom().form >= form_count) {
                throw InvalidParams("atom references form " + std::to_string(f.atom().form) +
                                    " of " + std::to_string(form_count));
            }
            return;
        case Formula::Kind::Not:
            if (f.children().size() != 1) {
                throw InvalidParams("negation must have exactly one child");
            }
            break;
        default:
            break;
    }
    for (const auto& c : f.children()) {
        check_formula(c, form_count);
    }
}

void check_pair(std::size_t n, std::size_t u, std::size_t v) {
    if (u >= n || v >= n) {
        throw IndexError("vertex index out of range: (" + std::to_string(u) + ", " +
                         std::to_string(v) + ") with n = " + std::to_string(n));
    }
    if (u == v) {
        throw InvalidPair("self pair (" + std::to_string(u) + ", " + std::to_string(v) + ")");
    }
}

bool formula_value(const SemilinearGraph& g, std::size_t u, std::size_t v, Vector& scratch) {
    scratch.resize(g.forms.size());
    for (std::size_t i = 0; i < g.forms.size(); ++i) {
        scratch[i] = g.forms[i](g.vertices[u], g.vertices[v]);
    }
    return g.formula.evaluate(scratch);
}

bool dnf_value(const DnfGraph& g, std::size_t u, std::size_t v) {
    for (const auto& term : g.terms) {
        bool all = true;
        for (std::size_t idx : term) {
            if (sgn(g.forms[idx](g.vertices[u], g.vertices[v])) >= 0) {
                all = false;
                break;
            }
        }
        if (all) {
            return true;
        }
    }
    return false;
}

}  // namespace

void SemilinearGraph::validate() const {
    check_points(dim, vertices);
    check_forms(dim, forms);
    check_formula(formula, forms.size());
}

void DnfGraph::validate() const {
    check_points(dim, vertices);
    check_forms(dim, forms);
    const std::size_t len = term_length();
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].size() != len) {
            throw InvalidParams("term " + std::to_string(i) + " has length " +
                                std::to_string(terms[i].size()) + ", expected " +
                                std::to_string(len));
        }
        for (std::size_t idx : terms[i]) {
            if (idx >= forms.size()) {
                throw InvalidParams("term " + std::to_string(i) + " references missing form");
            }
        }
    }
}

SemilinearGraph make_semilinear(std::size_t dim, std::vector<Point> vertices,
                                std::vector<LinearForm> forms, Formula formula) {
    SemilinearGraph g{dim, std::move(vertices), std::move(forms), std::move(formula)};
    g.validate();
    if (auto bad = symmetry_check(g)) {
        throw SymmetryError("formula is not symmetric on pair (" + std::to_string(bad->first) +
                                ", " + std::to_string(bad->second) + ")",
                            bad->first, bad->second);
    }
    return g;
}

bool eval_edge(const SemilinearGraph& g, std::size_t u, std::size_t v) {
    check_pair(g.size(), u, v);
    Vector scratch;
    return formula_value(g, u, v, scratch);
}

bool eval_edge(const DnfGraph& g, std::size_t u, std::size_t v) {
    check_pair(g.size(), u, v);
    return dnf_value(g, u, v);
}

std::optional<std::pair<std::size_t, std::size_t>> symmetry_check(const SemilinearGraph& g) {
    std::vector<detail::FormRanks> ranks;
    ranks.reserve(g.forms.size());
    for (const auto& f : g.forms) ranks.push_back(detail::form_ranks(f, g.vertices));
    std::vector<int> forward(ranks.size());
    std::vector<int> backward(ranks.size());
    for (std::size_t u = 0; u < g.size(); ++u) {
        for (std::size_t v = u + 1; v < g.size(); ++v) {
            for (std::size_t i = 0; i < ranks.size(); ++i) {
                forward[i] = ranks[i].sign(u, v);
                backward[i] = ranks[i].sign(v, u);
            }
            if (g.formula.evaluate_signs(forward) != g.formula.evaluate_signs(backward)) {
                return std::pair{u, v};
            }
        }
    }
    return std::nullopt;
}

std::optional<std::pair<std::size_t, std::size_t>> symmetry_check(const DnfGraph& g) {
    std::vector<detail::FormRanks> ranks;
    ranks.reserve(g.forms.size());
    for (const auto& f : g.forms) ranks.push_back(detail::form_ranks(f, g.vertices));
    auto value = [&](std::size_t u, std::size_t v) {
        for (const auto& term : g.terms) {
            bool all = true;
            for (std::size_t i : term) {
                if (ranks[i].sign(u, v) >= 0) {
                    all = false;
                    break;
                }
            }
            if (all) return true;
        }
        return false;
    };
    for (std::size_t u = 0; u < g.size(); ++u) {
        for (std::size_t v = u + 1; v < g.size(); ++v) {
            if (value(u, v) != value(v, u)) return std::pair{u, v};
        }
    }
    return std::nullopt;
}

}  // namespace semilinear
