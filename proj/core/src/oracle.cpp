#include "semilinear/oracle.hpp"

#include "semilinear/errors.hpp"

#include <algorithm>
#include <chrono>
#include <iterator>
#include <cstdint>
#include <queue>
#include <string>

namespace semilinear {

namespace {

void check_budget(const AdjacencyGraph& g, const OracleBudget& budget, const char* who) {
    if (g.size() > budget.max_vertices || g.edge_count() > budget.max_edges) {
        throw OverBudget(std::string(who) + ": " + std::to_string(g.size()) + " vertices / " +
                         std::to_string(g.edge_count()) + " edges exceed the budget");
    }
}

class Deadline {
public:
    Deadline(double seconds, const char* who)
        : end_(std::chrono::steady_clock::now() + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                                      std::chrono::duration<double>(seconds))),
          who_(who) {}

    void tick() {
        if ((++ticks_ & 0x3FF) == 0 && std::chrono::steady_clock::now() > end_) {
            throw OverBudget(std::string(who_) + ": time limit exceeded");
        }
    }

private:
    std::chrono::steady_clock::time_point end_;
    const char* who_;
    std::uint64_t ticks_ = 0;
};

class Bits {
public:
    explicit Bits(std::size_t n = 0) : words_((n + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
    bool any() const {
        return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
    }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }
    Bits operator&(const Bits& o) const {
        Bits r = *this;
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
        return r;
    }
    Bits without(const Bits& o) const {
        Bits r = *this;
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~o.words_[i];
        return r;
    }
    template <class F>
    void for_each(F f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            for (std::uint64_t word = words_[w]; word != 0; word &= word - 1) {
                f(w * 64 + static_cast<std::size_t>(__builtin_ctzll(word)));
            }
        }
    }

private:
    std::vector<std::uint64_t> words_;
};

// Tomita-style search: greedy coloring of the candidates bounds the clique.
class CliqueSearch {
public:
    CliqueSearch(const AdjacencyGraph& g, Deadline& deadline) : g_(g), deadline_(deadline), adj_(g.size()) {
        for (std::size_t v = 0; v < g.size(); ++v) {
            adj_[v] = Bits(g.size());
            for (std::size_t w : g.neighbors(v)) adj_[v].set(w);
        }
    }

    std::vector<std::size_t> run() {
        Bits all(g_.size());
        for (std::size_t v = 0; v < g_.size(); ++v) all.set(v);
        std::vector<std::size_t> current;
        expand(current, all);
        std::sort(best_.begin(), best_.end());
        return best_;
    }

private:
    void expand(std::vector<std::size_t>& current, Bits candidates) {
        deadline_.tick();
        std::vector<std::size_t> order;
        std::vector<std::size_t> bound;
        color_sort(candidates, order, bound);
        for (std::size_t idx = order.size(); idx-- > 0;) {
            if (current.size() + bound[idx] <= best_.size()) return;
            const std::size_t v = order[idx];
            current.push_back(v);
            Bits next = candidates & adj_[v];
            if (next.any()) {
                expand(current, next);
            } else if (current.size() > best_.size()) {
                best_ = current;
            }
            current.pop_back();
            candidates.reset(v);
        }
    }

    void color_sort(const Bits& candidates, std::vector<std::size_t>& order, std::vector<std::size_t>& bound) const {
        Bits uncolored = candidates;
        std::size_t color = 0;
        while (uncolored.any()) {
            ++color;
            Bits available = uncolored;
            while (available.any()) {
                std::size_t v = SIZE_MAX;
                available.for_each([&](std::size_t w) {
                    if (v == SIZE_MAX) v = w;
                });
                available.reset(v);
                available = available.without(adj_[v]);
                uncolored.reset(v);
                order.push_back(v);
                bound.push_back(color);
            }
        }
    }

    const AdjacencyGraph& g_;
    Deadline& deadline_;
    std::vector<Bits> adj_;
    std::vector<std::size_t> best_;
};

class ChromaticSearch {
public:
    ChromaticSearch(const AdjacencyGraph& g, Deadline& deadline)
        : g_(g), deadline_(deadline), color_(g.size(), SIZE_MAX), seen_(g.size()) {}

    std::size_t run(std::size_t lower) {
        const std::size_t n = g_.size();
        if (n == 0) return 0;
        best_ = n;
        lower_ = std::max<std::size_t>(lower, 1);
        for (auto& row : seen_) row.assign(n + 1, 0);
        search(0, 0);
        return best_;
    }

private:
    void search(std::size_t colored, std::size_t used) {
        deadline_.tick();
        if (used >= best_) return;
        if (colored == g_.size()) {
            best_ = used;
            return;
        }
        // Most saturated uncolored vertex, ties by degree then index.
        std::size_t pick = SIZE_MAX;
        std::size_t pick_sat = 0;
        for (std::size_t v = 0; v < g_.size(); ++v) {
            if (color_[v] != SIZE_MAX) continue;
            std::size_t sat = 0;
            for (std::size_t c = 0; c < used; ++c) sat += seen_[v][c] > 0;
            if (pick == SIZE_MAX || sat > pick_sat || (sat == pick_sat && g_.degree(v) > g_.degree(pick))) {
                pick = v;
                pick_sat = sat;
            }
        }
        const std::size_t limit = std::min(used + 1, best_ - 1);
        for (std::size_t c = 0; c < limit; ++c) {
            if (seen_[pick][c] > 0) continue;
            assign(pick, c, 1);
            search(colored + 1, std::max(used, c + 1));
            assign(pick, c, -1);
            if (best_ <= lower_) return;
        }
    }

    void assign(std::size_t v, std::size_t c, int delta) {
        color_[v] = delta > 0 ? c : SIZE_MAX;
        for (std::size_t w : g_.neighbors(v)) seen_[w][c] += delta;
    }

    const AdjacencyGraph& g_;
    Deadline& deadline_;
    std::vector<std::size_t> color_;
    std::vector<std::vector<int>> seen_;
    std::size_t best_ = 0;
    std::size_t lower_ = 1;
};

}  // namespace

std::size_t exact_chromatic(const AdjacencyGraph& g, const OracleBudget& budget) {
    check_budget(g, budget, "exact_chromatic");
    Deadline deadline(budget.timeout_seconds, "exact_chromatic");
    std::size_t lower = 0;
    if (g.size() > 0) {
        CliqueSearch clique(g, deadline);
        lower = clique.run().size();
    }
    ChromaticSearch search(g, deadline);
    return search.run(lower);
}

std::vector<std::size_t> max_clique(const AdjacencyGraph& g, const OracleBudget& budget) {
    check_budget(g, budget, "max_clique");
    if (g.size() == 0) return {};
    Deadline deadline(budget.timeout_seconds, "max_clique");
    CliqueSearch search(g, deadline);
    return search.run();
}

std::vector<std::size_t> max_independent_set(const AdjacencyGraph& g, const OracleBudget& budget) {
    check_budget(g, budget, "max_independent_set");
    return max_clique(g.complement(), OracleBudget{budget.max_vertices, SIZE_MAX, budget.timeout_seconds});
}

std::optional<std::size_t> girth(const AdjacencyGraph& g) {
    const std::size_t n = g.size();
    std::size_t best = SIZE_MAX;
    std::vector<std::size_t> dist(n);
    std::vector<std::size_t> parent(n);
    for (std::size_t root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), SIZE_MAX);
        std::fill(parent.begin(), parent.end(), SIZE_MAX);
        std::queue<std::size_t> queue;
        dist[root] = 0;
        queue.push(root);
        while (!queue.empty()) {
            const std::size_t x = queue.front();
            queue.pop();
            if (2 * dist[x] + 1 >= best) break;
            for (std::size_t y : g.neighbors(x)) {
                if (dist[y] == SIZE_MAX) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push(y);
                } else if (parent[x] != y) {
                    best = std::min(best, dist[x] + dist[y] + 1);
                }
            }
        }
    }
    if (best == SIZE_MAX) return std::nullopt;
    return best;
}

std::optional<std::array<std::size_t, 4>> has_K22(const AdjacencyGraph& g, const std::vector<bool>& in_a) {
    if (in_a.size() != g.size()) throw DomainMismatch("has_K22: side labels do not match the graph");
    // marks[b1] lists (b2, a): the first A-vertex a seen next to both.
    const std::size_t n = g.size();
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> marks(n);
    for (std::size_t a = 0; a < n; ++a) {
        if (!in_a[a]) continue;
        const auto& nb = g.neighbors(a);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                auto& list = marks[nb[i]];
                auto it = std::find_if(list.begin(), list.end(), [&](const auto& m) { return m.first == nb[j]; });
                if (it != list.end()) return std::array<std::size_t, 4>{it->second, a, nb[i], nb[j]};
                list.emplace_back(nb[j], a);
            }
        }
    }
    return std::nullopt;
}

std::optional<std::array<std::size_t, 4>> has_K22(const IncidenceGraph& g) {
    std::vector<bool> in_a(g.points.size() + g.rects.size(), false);
    std::fill(in_a.begin(), in_a.begin() + static_cast<std::ptrdiff_t>(g.points.size()), true);
    return has_K22(bipartite_graph(g), in_a);
}

std::optional<Edge> is_cograph_induced(const AdjacencyGraph& g, const Cotree& c) {
    c.check_structure();
    return c.induced_violation(g);
}

std::optional<std::array<std::size_t, 4>> find_induced_p4(const AdjacencyGraph& g,
                                                          const std::vector<std::size_t>& vertices) {
    std::vector<bool> inside(g.size(), false);
    for (std::size_t v : vertices) inside[v] = true;
    for (std::size_t b : vertices) {
        for (std::size_t c : g.neighbors(b)) {
            if (!inside[c]) continue;
            for (std::size_t a : g.neighbors(b)) {
                if (!inside[a] || a == c || g.has_edge(a, c)) continue;
                for (std::size_t d : g.neighbors(c)) {
                    if (!inside[d] || d == b || d == a || g.has_edge(d, b) || g.has_edge(a, d)) continue;
                    return std::array<std::size_t, 4>{a, b, c, d};
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<Edge> is_proper(const AdjacencyGraph& g, const Coloring& c) {
    if (c.size() != g.size()) throw DomainMismatch("is_proper: coloring and graph differ in size");
    for (const auto& [u, v] : g.edges()) {
        if (c.colors[u] == c.colors[v]) return Edge{u, v};
    }
    return std::nullopt;
}

IncidenceDiff incidence_check(const std::vector<Vector>& points, const std::vector<Box>& rects,
                              const std::vector<Edge>& claimed) {
    const std::vector<Edge> truth = incidence_edges(points, rects);
    std::vector<Edge> sorted = claimed;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    IncidenceDiff diff;
    std::set_difference(truth.begin(), truth.end(), sorted.begin(), sorted.end(), std::back_inserter(diff.missing));
    std::set_difference(sorted.begin(), sorted.end(), truth.begin(), truth.end(), std::back_inserter(diff.extra));
    return diff;
}

}  // namespace semilinear
