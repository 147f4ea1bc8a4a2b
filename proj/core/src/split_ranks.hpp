#pragma once

// Internal: sign tables for forms f(x, y) = g(x) + h(y) over a fixed vertex set.

#include "semilinear/formula.hpp"
#include "semilinear/rational.hpp"

#include <cstdint>
#include <vector>

namespace semilinear::detail {

/// For one form: left[u] and right[v] are integer ranks with
/// sign(f(u, v)) = sign(left[u] - right[v]).
struct FormRanks {
    std::vector<std::int64_t> left;
    std::vector<std::int64_t> right;

    int sign(std::size_t u, std::size_t v) const {
        return left[u] < right[v] ? -1 : (left[u] > right[v] ? 1 : 0);
    }
};

/// g(u) = constant + <x_coeffs, u>, and -h(v) = -<y_coeffs, v>.
void split_values(const LinearForm& f, const std::vector<Vector>& vertices, Vector& g,
                  Vector& minus_h);

/// Dense ranks of the merged value lists; equal values share a rank.
FormRanks rank_pair(const Vector& left, const Vector& right);

FormRanks form_ranks(const LinearForm& f, const std::vector<Vector>& vertices);

/// Smallest positive |left[u] - right[v]| over u != v, if any.
bool min_positive_gap(const Vector& left, const Vector& right, Rational& out);

}  // namespace semilinear::detail
