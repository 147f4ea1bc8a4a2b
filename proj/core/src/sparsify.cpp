#include "semilinear/construct.hpp"
#include "semilinear/errors.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <queue>
#include <random>
#include <string>

namespace semilinear {

ConstantSchedule ConstantSchedule::standard() { return ConstantSchedule{}; }

ConstantSchedule ConstantSchedule::relaxed() {
    ConstantSchedule s;
    s.threshold_factor = Rational(1, 4);
    return s;
}

void ConstantSchedule::validate() const {
    if (threshold_factor <= 0 || degree_slack <= 0 || edge_floor <= 0 || max_resamples == 0 ||
        vertex_cap == 0) {
        throw InvalidParams("constant schedule: every constant must be positive");
    }
}

bool threshold_holds(std::uint64_t a, std::uint64_t b, std::uint64_t k, std::uint64_t g,
                     const ConstantSchedule& sched) {
    if (k < 2 || b > a) return false;
    const long double base = sched.threshold_factor.get_d() * std::log2(static_cast<long double>(k));
    const long double lhs =
        std::pow(base, static_cast<long double>(2 * g * g)) * static_cast<long double>(b);
    return lhs <= static_cast<long double>(a);
}

namespace {

constexpr unsigned long kDrawBits = 53;

// Shortest cycle of a small undirected graph, as its closing edge, if any
// cycle is shorter than `limit`.
std::optional<Edge> short_cycle_edge(const std::vector<std::vector<std::size_t>>& adj, std::size_t limit) {
    const std::size_t n = adj.size();
    std::size_t best = limit;
    std::optional<Edge> found;
    for (std::size_t root = 0; root < n; ++root) {
        std::vector<std::size_t> dist(n, SIZE_MAX);
        std::vector<std::size_t> parent(n, SIZE_MAX);
        std::queue<std::size_t> queue;
        dist[root] = 0;
        queue.push(root);
        while (!queue.empty()) {
            const std::size_t x = queue.front();
            queue.pop();
            for (std::size_t y : adj[x]) {
                if (dist[y] == SIZE_MAX) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push(y);
                } else if (parent[x] != y && x < y) {
                    const std::size_t length = dist[x] + dist[y] + 1;
                    if (length < best) {
                        best = length;
                        found = Edge{x, y};
                    }
                }
            }
        }
    }
    return found;
}

}  // namespace

SampleReport sample_H(const IncidenceGraph& g, std::size_t k, std::size_t girth_half,
                      const ConstantSchedule& sched, std::uint64_t seed) {
    sched.validate();
    if (k < 1 || girth_half < 1) throw InvalidParams("sample_H: k and g must be positive");
    const std::size_t na = g.points.size();
    const std::size_t nb = g.rects.size();
    if (na == 0 || nb == 0) throw InvalidParams("sample_H: both vertex classes must be nonempty");
    if (na > k * nb) throw PreconditionViolated("sample_H: |A| > k|B|");

    std::vector<std::vector<std::size_t>> neighbors(nb);
    for (const auto& [p, r] : g.edges) neighbors[r].push_back(p);
    for (std::size_t r = 0; r < nb; ++r) {
        if (neighbors[r].size() > k) {
            throw PreconditionViolated("sample_H: rect " + std::to_string(r) + " has degree above k");
        }
    }

    const Rational ratio(static_cast<long>(na), static_cast<long>(nb));
    Rational p = 2 * root_lower_bound(ratio, 2 * girth_half, kDrawBits) / Rational(static_cast<long>(k));
    if (p > 1) p = 1;
    const Rational draw_bound = p * Rational(Integer(1) << kDrawBits);
    const Rational degree_limit = sched.degree_slack * p * Rational(static_cast<long>(k));
    const Rational edge_target =
        sched.edge_floor * p * Rational(static_cast<long>(k)) * Rational(static_cast<long>(na));

    std::mt19937_64 rng(seed);
    std::size_t best_edges = 0;
    for (std::size_t attempt = 1; attempt <= sched.max_resamples; ++attempt) {
        Selector h{na, k, std::vector<bool>(na * k, false)};
        for (std::size_t l = 0; l < k; ++l) {
            for (std::size_t u = 0; u < na; ++u) {
                const std::uint64_t draw = rng() >> (64 - kDrawBits);
                h.keep[l * na + u] = Rational(Integer(static_cast<unsigned long>(draw))) < draw_bound;
            }
        }
        const std::size_t initial = h.edge_count();

        // Degrees in the tensor graph of the raw draw decide which points go.
        std::vector<bool> drop(na * k, false);
        for (std::size_t r = 0; r < nb; ++r) {
            for (std::size_t l = 0; l < k; ++l) {
                std::size_t degree = 0;
                for (std::size_t u : neighbors[r]) degree += h.has(u, l);
                if (Rational(static_cast<long>(degree)) > degree_limit) {
                    for (std::size_t u : neighbors[r]) drop[l * na + u] = true;
                }
            }
        }
        for (std::size_t u = 0; u < na; ++u) {
            std::size_t degree = 0;
            for (std::size_t l = 0; l < k; ++l) degree += h.has(u, l);
            if (Rational(static_cast<long>(degree)) > degree_limit) {
                for (std::size_t l = 0; l < k; ++l) drop[l * na + u] = true;
            }
        }
        for (std::size_t i = 0; i < drop.size(); ++i) {
            if (drop[i]) h.keep[i] = false;
        }

        // Cycles shorter than 2g inside N(v) x [k], broken one edge at a time.
        const std::size_t limit = 2 * girth_half;
        if (limit > 4) {
            for (std::size_t r = 0; r < nb; ++r) {
                const auto& members = neighbors[r];
                const std::size_t m = members.size();
                while (true) {
                    std::vector<std::vector<std::size_t>> adj(m + k);
                    for (std::size_t j = 0; j < m; ++j) {
                        for (std::size_t l = 0; l < k; ++l) {
                            if (h.has(members[j], l)) {
                                adj[j].push_back(m + l);
                                adj[m + l].push_back(j);
                            }
                        }
                    }
                    const auto edge = short_cycle_edge(adj, limit);
                    if (!edge) break;
                    const std::size_t j = std::min(edge->first, edge->second);
                    const std::size_t l = std::max(edge->first, edge->second) - m;
                    h.keep[l * na + members[j]] = false;
                }
            }
        }

        const std::size_t kept = h.edge_count();
        best_edges = std::max(best_edges, kept);
        if (Rational(static_cast<long>(kept)) >= edge_target) {
            return SampleReport{std::move(h), p, attempt, initial};
        }
    }
    throw SamplingFailed("sample_H: no draw kept enough edges", sched.max_resamples, best_edges);
}

StepResult step_up(const RealizableTuple& tuple, const IncidenceGraph& g, const ConstantSchedule& sched,
                   std::uint64_t seed) {
    if (tuple.a != g.points.size() || tuple.b != g.rects.size()) {
        throw InvalidParams("step_up: tuple does not describe the graph");
    }
    if (tuple.a > tuple.b * tuple.k) throw InvalidParams("step_up: a > bk");
    if (!threshold_holds(tuple.a, tuple.b, tuple.k, tuple.g, sched)) {
        throw PreconditionViolated("step_up: threshold condition fails");
    }
    for (std::size_t p = 0; p < g.points.size(); ++p) {
        if (g.point_degree(p) != tuple.d) throw InvalidParams("step_up: point degree differs from d");
    }
    const std::size_t k = tuple.k;
    SampleReport sample = sample_H(g, k, tuple.g, sched, seed);
    IncidenceGraph next = tensor_H_k(g, sample.h, k);

    // Empty rects, far below every point, pad B up to 2kb.
    const std::size_t target = 2 * k * tuple.b;
    std::vector<Box> rects = next.rects;
    for (std::size_t j = 0; rects.size() < target; ++j) {
        const Rational left(static_cast<long>(2 + 2 * j));
        rects.push_back(Box{{left, -2}, {left + 1, -1}});
    }
    const std::vector<Edge> expected = next.edges;
    next = make_incidence(std::move(next.points), std::move(rects));
    if (next.edges != expected) throw ProofInvariantViolated("step_up: padding rects contain points");

    Rational degree_bound = sched.degree_slack * sample.p * Rational(static_cast<long>(k));
    mpz_class k_next;
    mpz_cdiv_q(k_next.get_mpz_t(), degree_bound.get_num_mpz_t(), degree_bound.get_den_mpz_t());

    StepResult out;
    out.tuple = RealizableTuple{next.points.size(), target, k_next.get_ui(), tuple.d + 1, tuple.g};
    for (std::size_t p = 0; p < next.points.size(); ++p) {
        if (next.point_degree(p) != out.tuple.d) {
            throw ProofInvariantViolated("step_up: a kept point has the wrong degree", {p});
        }
    }
    for (std::size_t r = 0; r < next.rects.size(); ++r) {
        if (next.rect_degree(r) > out.tuple.k) {
            throw ProofInvariantViolated("step_up: rect degree above the new k", {r});
        }
    }
    out.graph = std::move(next);
    out.sample = std::move(sample);
    return out;
}

GirthRun build_girth_construction(std::size_t m, std::size_t girth_half, const ConstantSchedule& sched,
                                  std::uint64_t seed) {
    if (m < 2) throw InvalidParams("build_girth_construction: m must be at least 2");
    if (girth_half < 1) throw InvalidParams("build_girth_construction: g must be positive");
    sched.validate();
    std::mt19937_64 seeds(seed);
    GirthRun run;
    std::vector<IncidenceGraph> graphs{base_star(m)};
    run.tuples.push_back(RealizableTuple{m, 1, m, 1, girth_half});
    while (true) {
        const RealizableTuple& t = run.tuples.back();
        if (!threshold_holds(t.a, t.b, t.k, t.g, sched)) break;
        if (t.a * t.k + 2 * t.k * t.b > sched.vertex_cap) break;
        StepResult step = step_up(t, graphs.back(), sched, seeds());
        run.attempts.push_back(step.sample.attempts);
        run.tuples.push_back(step.tuple);
        graphs.push_back(std::move(step.graph));
    }
    run.iterations = graphs.size() - 1;
    if (run.iterations == 0) {
        run.graph = std::move(graphs.front());
        return run;
    }
    run.feasible = true;
    // The last graph that satisfied the threshold: its points have degree
    // equal to the number of completed steps.
    IncidenceGraph out = std::move(graphs[run.iterations - 1]);
    if (out.points.size() >= out.rects.size()) {
        out.points.resize(out.rects.size());
    } else {
        std::vector<bool> used(out.rects.size(), false);
        for (const auto& e : out.edges) used[e.second] = true;
        std::vector<Box> rects;
        std::size_t removable = out.rects.size() - out.points.size();
        for (std::size_t r = 0; r < out.rects.size(); ++r) {
            if (!used[r] && removable > 0) {
                --removable;
                continue;
            }
            rects.push_back(out.rects[r]);
        }
        out.rects = std::move(rects);
    }
    run.graph = make_incidence(std::move(out.points), std::move(out.rects));
    return run;
}

}  // namespace semilinear
