#include "semilinear/normalize.hpp"

#include "semilinear/errors.hpp"
#include "split_ranks.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace semilinear {

namespace detail {

void split_values(const LinearForm& f, const std::vector<Vector>& vertices, Vector& g,
                  Vector& minus_h) {
    g.assign(vertices.size(), Rational(0));
    minus_h.assign(vertices.size(), Rational(0));
    for (std::size_t v = 0; v < vertices.size(); ++v) {
        Rational gv = f.constant;
        Rational hv = 0;
        for (std::size_t i = 0; i < f.x_coeffs.size(); ++i) {
            if (sgn(f.x_coeffs[i]) != 0) gv += f.x_coeffs[i] * vertices[v][i];
            if (sgn(f.y_coeffs[i]) != 0) hv += f.y_coeffs[i] * vertices[v][i];
        }
        g[v] = std::move(gv);
        minus_h[v] = -hv;
    }
}

FormRanks rank_pair(const Vector& left, const Vector& right) {
    const std::size_t n = left.size();
    std::vector<std::size_t> order(n + right.size());
    std::iota(order.begin(), order.end(), 0);
    auto value = [&](std::size_t k) -> const Rational& {
        return k < n ? left[k] : right[k - n];
    };
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return cmp(value(a), value(b)) < 0; });
    FormRanks out{std::vector<std::int64_t>(n), std::vector<std::int64_t>(right.size())};
    std::int64_t rank = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i > 0 && cmp(value(order[i - 1]), value(order[i])) != 0) {
            ++rank;
        }
        const std::size_t k = order[i];
        (k < n ? out.left[k] : out.right[k - n]) = rank;
    }
    return out;
}

FormRanks form_ranks(const LinearForm& f, const std::vector<Vector>& vertices) {
    Vector g;
    Vector minus_h;
    split_values(f, vertices, g, minus_h);
    return rank_pair(g, minus_h);
}

bool min_positive_gap(const Vector& left, const Vector& right, Rational& out) {
    // value -> (number of owners, one owner)
    std::map<Rational, std::pair<std::size_t, std::size_t>> owners;
    for (std::size_t v = 0; v < right.size(); ++v) {
        auto [it, inserted] = owners.try_emplace(right[v], 0, v);
        ++it->second.first;
    }
    auto only_owner = [](const auto& it, std::size_t u) {
        return it->second.first == 1 && it->second.second == u;
    };
    bool found = false;
    for (std::size_t u = 0; u < left.size(); ++u) {
        auto up = owners.upper_bound(left[u]);
        while (up != owners.end() && only_owner(up, u)) ++up;
        if (up != owners.end()) {
            Rational gap = up->first - left[u];
            if (!found || gap < out) out = gap, found = true;
        }
        auto down = owners.lower_bound(left[u]);
        while (down != owners.begin()) {
            --down;
            if (!only_owner(down, u)) {
                Rational gap = left[u] - down->first;
                if (!found || gap < out) out = gap, found = true;
                break;
            }
        }
    }
    return found;
}

}  // namespace detail

Rational epsilon_for(const SemilinearGraph& g) {
    Rational best;
    bool found = false;
    Vector left;
    Vector right;
    for (const auto& f : g.forms) {
        detail::split_values(f, g.vertices, left, right);
        Rational gap;
        if (detail::min_positive_gap(left, right, gap) && (!found || gap < best)) {
            best = gap;
            found = true;
        }
    }
    if (!found) {
        return Rational(1);
    }
    return best / 2;
}

namespace {

using Conjunction = std::vector<LinearForm>;
using Dnf = std::vector<Conjunction>;

Dnf literal(const LinearForm& f, Relation rel, bool negated, const Rational& eps) {
    const LinearForm minus = f.negated();
    if (!negated) {
        switch (rel) {
            case Relation::LT: return {{f}};
            case Relation::LE: return {{f.shifted(-eps)}};
            case Relation::EQ: return {{f.shifted(-eps), minus.shifted(-eps)}};
        }
    } else {
        switch (rel) {
            case Relation::LT: return {{minus.shifted(-eps)}};  // -f <= 0
            case Relation::LE: return {{minus}};                 // -f < 0
            case Relation::EQ: return {{f}, {minus}};
        }
    }
    return {};
}

Dnf product(const Dnf& a, const Dnf& b) {
    Dnf out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a) {
        for (const auto& y : b) {
            Conjunction c = x;
            c.insert(c.end(), y.begin(), y.end());
            out.push_back(std::move(c));
        }
    }
    return out;
}

Dnf expand(const Formula& phi, bool negated, const std::vector<LinearForm>& forms,
           const Rational& eps) {
    switch (phi.kind()) {
        case Formula::Kind::Atom:
            return literal(forms[phi.atom().form], phi.atom().relation, negated, eps);
        case Formula::Kind::Not:
            return expand(phi.children().front(), !negated, forms, eps);
        case Formula::Kind::And:
        case Formula::Kind::Or: {
            const bool conjunctive = (phi.kind() == Formula::Kind::And) != negated;
            if (conjunctive) {
                Dnf acc{Conjunction{}};
                for (const auto& c : phi.children()) {
                    acc = product(acc, expand(c, negated, forms, eps));
                    if (acc.empty()) break;
                }
                return acc;
            }
            Dnf acc;
            for (const auto& c : phi.children()) {
                Dnf part = expand(c, negated, forms, eps);
                acc.insert(acc.end(), std::make_move_iterator(part.begin()),
                           std::make_move_iterator(part.end()));
            }
            return acc;
        }
    }
    return {};
}

}  // namespace

DnfGraph to_dnf(const SemilinearGraph& g) {
    g.validate();
    if (auto bad = symmetry_check(g)) {
        throw SymmetryError("to_dnf: formula is not symmetric on pair (" +
                                std::to_string(bad->first) + ", " + std::to_string(bad->second) +
                                ")",
                            bad->first, bad->second);
    }
    const Rational eps = epsilon_for(g);
    const Dnf dnf = expand(g.formula, false, g.forms, eps);

    std::size_t width = 1;
    for (const auto& term : dnf) width = std::max(width, term.size());

    DnfGraph out;
    out.dim = g.dim;
    out.vertices = g.vertices;
    auto index_of = [&](const LinearForm& f) {
        auto it = std::find(out.forms.begin(), out.forms.end(), f);
        if (it != out.forms.end()) return static_cast<std::size_t>(it - out.forms.begin());
        out.forms.push_back(f);
        return out.forms.size() - 1;
    };
    const LinearForm always = LinearForm::constant_form(g.dim, Rational(-1));
    for (const auto& term : dnf) {
        std::vector<std::size_t> indices;
        indices.reserve(width);
        for (const auto& f : term) indices.push_back(index_of(f));
        while (indices.size() < width) indices.push_back(index_of(always));
        out.terms.push_back(std::move(indices));
    }
    return out;
}

AdjacencyGraph materialize(const SemilinearGraph& g) {
    g.validate();
    const std::size_t n = g.size();
    std::vector<detail::FormRanks> ranks;
    ranks.reserve(g.forms.size());
    for (const auto& f : g.forms) ranks.push_back(detail::form_ranks(f, g.vertices));

    AdjacencyGraph out(n);
    std::vector<int> signs(g.forms.size());
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            for (std::size_t i = 0; i < ranks.size(); ++i) signs[i] = ranks[i].sign(u, v);
            if (g.formula.evaluate_signs(signs)) out.add_edge(u, v);
        }
    }
    return out;
}

AdjacencyGraph materialize(const DnfGraph& g) {
    g.validate();
    const std::size_t n = g.size();
    std::vector<detail::FormRanks> ranks;
    ranks.reserve(g.forms.size());
    for (const auto& f : g.forms) ranks.push_back(detail::form_ranks(f, g.vertices));

    AdjacencyGraph out(n);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            for (const auto& term : g.terms) {
                const bool all = std::all_of(term.begin(), term.end(), [&](std::size_t i) {
                    return ranks[i].sign(u, v) < 0;
                });
                if (all) {
                    out.add_edge(u, v);
                    break;
                }
            }
        }
    }
    return out;
}

}  // namespace semilinear
