#include "semilinear/construct.hpp"
#include "semilinear/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace semilinear {

IncidenceGraph base_star(std::size_t m) {
    if (m < 1) throw InvalidParams("base_star: m must be positive");
    std::vector<Vector> points;
    for (std::size_t i = 1; i <= m; ++i) {
        points.push_back({Rational(static_cast<long>(i)), Rational(1, 2)});
    }
    std::vector<Box> rects{Box{{0, 0}, {Rational(static_cast<long>(m + 1)), 1}}};
    return make_incidence(std::move(points), std::move(rects));
}

namespace {

struct Frame {
    Rational lo;
    Rational span;  // hi - lo + 2

    Rational operator()(const Rational& v) const { return (v - lo + 1) / span; }
};

// Affine map of one axis into (0, 1) covering every point and rect coordinate.
Frame frame_for(const IncidenceGraph& g, std::size_t axis) {
    bool any = false;
    Rational lo;
    Rational hi;
    auto see = [&](const Rational& v) {
        if (!any || v < lo) lo = v;
        if (!any || v > hi) hi = v;
        any = true;
    };
    for (const auto& p : g.points) see(p[axis]);
    for (const auto& r : g.rects) {
        see(r.lower[axis]);
        see(r.upper[axis]);
    }
    if (!any) return {0, 2};
    return {lo, hi - lo + 2};
}

Rational min_positive_gap(Vector values) {
    std::sort(values.begin(), values.end());
    Rational gap = 1;
    bool found = false;
    for (std::size_t i = 1; i < values.size(); ++i) {
        const Rational d = values[i] - values[i - 1];
        if (d > 0 && (!found || d < gap)) {
            gap = d;
            found = true;
        }
    }
    return gap;
}

}  // namespace

IncidenceGraph tensor_k(const IncidenceGraph& g, std::size_t k) {
    if (k < 1) throw InvalidParams("tensor_k: k must be positive");
    g.validate();
    const std::size_t na = g.points.size();
    const std::size_t nb = g.rects.size();
    const Frame fx = frame_for(g, 0);
    const Frame fy = frame_for(g, 1);

    Vector xs;
    Vector ys;
    for (const auto& p : g.points) {
        xs.push_back(fx(p[0]));
        ys.push_back(fy(p[1]));
    }
    std::vector<Box> base_rects;
    Vector x_values = xs;
    for (const auto& r : g.rects) {
        base_rects.push_back(Box{{fx(r.lower[0]), fy(r.lower[1])}, {fx(r.upper[0]), fy(r.upper[1])}});
        x_values.push_back(base_rects.back().lower[0]);
        x_values.push_back(base_rects.back().upper[0]);
    }

    // Tilt point u right by (u + 1) eta and pull rect sides in by na * eta:
    // x-coordinates become distinct and no containment changes, including
    // for points sitting on a rect side.
    if (na > 0) {
        const Rational eta = min_positive_gap(x_values) / Rational(static_cast<long>(4 * na));
        for (std::size_t u = 0; u < na; ++u) xs[u] += eta * Rational(static_cast<long>(u + 1));
        const Rational inset = eta * Rational(static_cast<long>(na));
        for (auto& r : base_rects) {
            r.lower[0] += inset;
            r.upper[0] -= inset;
        }
    }

    std::vector<Vector> points;
    std::vector<Box> rects;
    points.reserve(na * k);
    rects.reserve(nb * k + na);
    for (std::size_t i = 0; i < k; ++i) {
        const Rational shift(static_cast<long>(i + 1));
        for (std::size_t u = 0; u < na; ++u) points.push_back({xs[u], ys[u] + shift});
    }
    for (std::size_t i = 0; i < k; ++i) {
        const Rational shift(static_cast<long>(i + 1));
        for (const auto& r : base_rects) {
            rects.push_back(Box{{r.lower[0], r.lower[1] + shift}, {r.upper[0], r.upper[1] + shift}});
        }
    }
    // Thin rect around the column of copies of u; copies live in (1, k + 1).
    std::vector<std::size_t> by_x(na);
    std::iota(by_x.begin(), by_x.end(), 0);
    std::sort(by_x.begin(), by_x.end(), [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
    std::vector<Rational> half_width(na, Rational(1, 2));
    for (std::size_t j = 0; j < na; ++j) {
        const std::size_t u = by_x[j];
        if (j > 0) half_width[u] = std::min(half_width[u], Rational((xs[u] - xs[by_x[j - 1]]) / 2));
        if (j + 1 < na) half_width[u] = std::min(half_width[u], Rational((xs[by_x[j + 1]] - xs[u]) / 2));
    }
    for (std::size_t u = 0; u < na; ++u) {
        rects.push_back(Box{{xs[u] - half_width[u], 1},
                            {xs[u] + half_width[u], Rational(static_cast<long>(k + 1))}});
    }

    std::vector<Edge> expected;
    expected.reserve(k * (g.edges.size() + na));
    for (std::size_t i = 0; i < k; ++i) {
        for (const auto& [u, v] : g.edges) expected.emplace_back(i * na + u, i * nb + v);
        for (std::size_t u = 0; u < na; ++u) expected.emplace_back(i * na + u, k * nb + u);
    }
    std::sort(expected.begin(), expected.end());

    IncidenceGraph out = make_incidence(std::move(points), std::move(rects));
    if (out.edges != expected) {
        throw ProofInvariantViolated("tensor_k: realization disagrees with the abstract graph");
    }
    return out;
}

Selector Selector::complete(std::size_t a_size, std::size_t k) {
    return Selector{a_size, k, std::vector<bool>(a_size * k, true)};
}

std::size_t Selector::edge_count() const {
    return static_cast<std::size_t>(std::count(keep.begin(), keep.end(), true));
}

IncidenceGraph tensor_H_k(const IncidenceGraph& g, const Selector& h, std::size_t k) {
    if (h.a_size != g.points.size() || h.k != k || h.keep.size() != h.a_size * h.k) {
        throw DomainMismatch("tensor_H_k: selector classes do not match A and [k]");
    }
    IncidenceGraph full = tensor_k(g, k);
    std::vector<std::size_t> new_index(full.points.size(), SIZE_MAX);
    std::vector<Vector> points;
    for (std::size_t p = 0; p < full.points.size(); ++p) {
        if (h.keep[p]) {
            new_index[p] = points.size();
            points.push_back(full.points[p]);
        }
    }
    std::vector<Edge> expected;
    for (const auto& [p, r] : full.edges) {
        if (new_index[p] != SIZE_MAX) expected.emplace_back(new_index[p], r);
    }
    IncidenceGraph out = make_incidence(std::move(points), std::move(full.rects));
    if (out.edges != expected) {
        throw ProofInvariantViolated("tensor_H_k: realization disagrees with the induced subgraph");
    }
    return out;
}

IncidenceGraph bcstt_construction(std::size_t k, std::size_t vertex_cap) {
    if (k < 2) throw InvalidParams("bcstt_construction: k must be at least 2");
    IncidenceGraph g = base_star(k);
    for (std::size_t step = 0; step < k; ++step) {
        const std::size_t next = g.points.size() * k + g.rects.size() * k + g.points.size();
        if (next > vertex_cap) {
            throw TooLarge("bcstt_construction: " + std::to_string(next) + " vertices exceed the cap of " +
                           std::to_string(vertex_cap));
        }
        g = tensor_k(g, k);
    }
    return g;
}

}  // namespace semilinear
