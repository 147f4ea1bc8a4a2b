#include "semilinear/construct.hpp"
#include "semilinear/errors.hpp"

#include <algorithm>
#include <iterator>
#include <string>

namespace semilinear {

namespace {

// Increasing k-subsets of {1, ..., m} in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t m, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur(k);
    for (std::size_t i = 0; i < k; ++i) cur[i] = i + 1;
    if (k > m) return out;
    while (true) {
        out.push_back(cur);
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == m - k + i) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

std::vector<Vector> as_points(const std::vector<std::vector<std::size_t>>& sets) {
    std::vector<Vector> out;
    for (const auto& s : sets) {
        Vector v;
        for (std::size_t e : s) v.emplace_back(static_cast<long>(e));
        out.push_back(std::move(v));
    }
    return out;
}

bool is_prime(std::size_t p) {
    if (p < 2) return false;
    for (std::size_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

void check_fw(std::size_t p, std::size_t m) {
    if (!is_prime(p)) throw InvalidParams("frankl_wilson: p = " + std::to_string(p) + " is not prime");
    if (m < p * p - 1) throw InvalidParams("frankl_wilson: m must be at least p^2 - 1");
}

}  // namespace

SemilinearGraph shift_graph(std::size_t m, std::size_t k) {
    if (k < 2 || m < k) throw InvalidParams("shift_graph: need m >= k >= 2");
    std::vector<LinearForm> forms;
    std::vector<Formula> left;
    std::vector<Formula> right;
    for (std::size_t i = 0; i + 1 < k; ++i) {
        LinearForm f{Vector(k, 0), Vector(k, 0), 0};
        f.x_coeffs[i + 1] = 1;
        f.y_coeffs[i] = -1;
        left.push_back(Formula::atom(forms.size(), Relation::EQ));
        forms.push_back(f);
        right.push_back(Formula::atom(forms.size(), Relation::EQ));
        forms.push_back(f.swapped());
    }
    Formula formula =
        Formula::disjunction({Formula::conjunction(std::move(left)), Formula::conjunction(std::move(right))});
    return make_semilinear(k, as_points(combinations(m, k)), std::move(forms), std::move(formula));
}

SemilinearGraph frankl_wilson(std::size_t p, std::size_t m) {
    check_fw(p, m);
    const std::size_t s = p * p - 1;
    std::vector<LinearForm> forms;
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < s; ++j) {
            LinearForm f{Vector(s, 0), Vector(s, 0), 0};
            f.x_coeffs[i] = 1;
            f.y_coeffs[j] = -1;
            forms.push_back(std::move(f));
        }
    }
    auto form = [s](std::size_t i, std::size_t j) { return i * s + j; };

    // Sorted sets meet along a monotone matching of coordinates; list every
    // matching whose size is -1 mod p, with all other row/column pairs unequal.
    std::vector<Formula> terms;
    for (std::size_t r = p - 1; r <= s; r += p) {
        const auto subsets = combinations(s, r);
        for (const auto& rows : subsets) {
            for (const auto& cols : subsets) {
                std::vector<bool> row_used(s, false);
                std::vector<bool> col_used(s, false);
                std::vector<Formula> atoms;
                for (std::size_t t = 0; t < r; ++t) {
                    row_used[rows[t] - 1] = true;
                    col_used[cols[t] - 1] = true;
                    atoms.push_back(Formula::atom(form(rows[t] - 1, cols[t] - 1), Relation::EQ));
                }
                for (std::size_t i = 0; i < s; ++i) {
                    for (std::size_t j = 0; j < s; ++j) {
                        if (!row_used[i] && !col_used[j]) {
                            atoms.push_back(Formula::negation(Formula::atom(form(i, j), Relation::EQ)));
                        }
                    }
                }
                terms.push_back(Formula::conjunction(std::move(atoms)));
            }
        }
    }
    SemilinearGraph g =
        make_semilinear(s, as_points(combinations(m, s)), std::move(forms), Formula::disjunction(std::move(terms)));
    const AdjacencyGraph by_sets = frankl_wilson_by_sets(p, m);
    for (std::size_t u = 0; u < g.vertices.size(); ++u) {
        for (std::size_t v = u + 1; v < g.vertices.size(); ++v) {
            if (eval_edge(g, u, v) != by_sets.has_edge(u, v)) {
                throw ProofInvariantViolated("frankl_wilson: encoding disagrees with set arithmetic", {u, v});
            }
        }
    }
    return g;
}

AdjacencyGraph frankl_wilson_by_sets(std::size_t p, std::size_t m) {
    check_fw(p, m);
    const auto sets = combinations(m, p * p - 1);
    AdjacencyGraph g(sets.size());
    std::vector<std::size_t> common;
    for (std::size_t u = 0; u < sets.size(); ++u) {
        for (std::size_t v = u + 1; v < sets.size(); ++v) {
            common.clear();
            std::set_intersection(sets[u].begin(), sets[u].end(), sets[v].begin(), sets[v].end(),
                                  std::back_inserter(common));
            if (common.size() % p == p - 1) g.add_edge(u, v);
        }
    }
    return g;
}

}  // namespace semilinear
