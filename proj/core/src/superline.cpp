#include "semilinear/construct.hpp"
#include "semilinear/errors.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

namespace semilinear {

namespace {

enum Coord : std::size_t { X, Y, A, B, C, D, I, J, kDim };

// c * x[xi] - c * y[yi], with either side optional.
LinearForm difference(std::optional<std::size_t> xi, std::optional<std::size_t> yi, bool x_first) {
    LinearForm f{Vector(kDim, 0), Vector(kDim, 0), 0};
    if (xi) f.x_coeffs[*xi] = x_first ? 1 : -1;
    if (yi) f.y_coeffs[*yi] = x_first ? -1 : 1;
    return f;
}

}  // namespace

SemilinearGraph superline_semilinear(const IncidenceGraph& g) {
    std::vector<std::size_t> rank_a(g.points.size());
    std::vector<std::size_t> rank_b(g.rects.size());
    std::iota(rank_a.begin(), rank_a.end(), 0);
    std::iota(rank_b.begin(), rank_b.end(), 0);
    return superline_semilinear(g, rank_a, rank_b);
}

SemilinearGraph superline_semilinear(const IncidenceGraph& g, const std::vector<std::size_t>& rank_a,
                                     const std::vector<std::size_t>& rank_b) {
    g.validate();
    OrderedBipartiteGraph check{g.points.size(), g.rects.size(), rank_a, rank_b, {}};
    check.validate();

    std::vector<Vector> vertices;
    for (const auto& [p, r] : g.edges) {
        const auto& pt = g.points[p];
        const auto& rect = g.rects[r];
        vertices.push_back({pt[0], pt[1], rect.lower[0], rect.lower[1], rect.upper[0], rect.upper[1],
                            Rational(static_cast<long>(rank_a[p])), Rational(static_cast<long>(rank_b[r]))});
    }

    // f(x, y) with x the first vertex and y the second.
    std::vector<LinearForm> forms{
        difference(I, I, true),  // i - i'
        difference(J, J, true),  // j - j'
        difference(X, A, false), // a' - x
        difference(X, C, true),  // x - c'
        difference(Y, B, false), // b' - y
        difference(Y, D, true),  // y - d'
    };
    for (std::size_t f = 2; f < 6; ++f) forms.push_back(forms[f].swapped());

    using F = Formula;
    auto lt = [](std::size_t f) { return F::atom(f, Relation::LT); };
    auto gt = [](std::size_t f) { return F::negation(F::atom(f, Relation::LE)); };
    Formula first = F::conjunction({lt(0), lt(1), lt(2), lt(3), lt(4), lt(5)});
    Formula second = F::conjunction({gt(0), gt(1), lt(6), lt(7), lt(8), lt(9)});
    return make_semilinear(kDim, std::move(vertices), std::move(forms),
                           F::disjunction({std::move(first), std::move(second)}));
}

std::vector<Box> boxes3d_from_incidence(const IncidenceGraph& g) {
    g.validate();
    const auto& pts = g.points;
    const auto& rects = g.rects;
    auto linf = [](const Vector& p, const Vector& q) {
        return std::max(abs(p[0] - q[0]), abs(p[1] - q[1]));
    };

    bool any = false;
    Rational gap;
    auto see = [&](const Rational& v) {
        if (!any || v < gap) gap = v;
        any = true;
    };
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            const Rational d = linf(pts[i], pts[j]);
            if (d == 0) throw DegenerateInput("boxes3d: points " + std::to_string(i) + " and " +
                                              std::to_string(j) + " coincide");
            see(d);
        }
    }
    for (const auto& r : rects) {
        see(r.upper[0] - r.lower[0]);
        see(r.upper[1] - r.lower[1]);
        for (const auto& p : pts) {
            Rational dx = std::max({Rational(r.lower[0] - p[0]), Rational(p[0] - r.upper[0]), Rational(0)});
            Rational dy = std::max({Rational(r.lower[1] - p[1]), Rational(p[1] - r.upper[1]), Rational(0)});
            const Rational outside = std::max(dx, dy);
            if (outside > 0) {
                see(outside);
            } else {
                const Rational inside = std::min({Rational(p[0] - r.lower[0]), Rational(r.upper[0] - p[0]),
                                                  Rational(p[1] - r.lower[1]), Rational(r.upper[1] - p[1])});
                if (inside > 0) see(inside);
            }
        }
    }
    const Rational delta = any ? Rational(gap / 4) : Rational(1);
    const Rational half = delta / 2;

    std::vector<Box> out;
    for (const auto& p : pts) {
        out.push_back(Box{{p[0] - half, p[1] - half, 0}, {p[0] + half, p[1] + half, 1}});
    }
    const Rational slots(static_cast<long>(rects.size() + 1));
    const Rational eps = 1 / (4 * slots);
    for (std::size_t j = 0; j < rects.size(); ++j) {
        const Rational z = Rational(static_cast<long>(j + 1)) / slots;
        const auto& r = rects[j];
        out.push_back(Box{{r.lower[0] + delta, r.lower[1] + delta, z - eps},
                          {r.upper[0] - delta, r.upper[1] - delta, z + eps}});
    }
    if (!(intersection_graph(out) == bipartite_graph(g))) {
        throw ProofInvariantViolated("boxes3d: box intersections differ from the incidences");
    }
    return out;
}

}  // namespace semilinear
