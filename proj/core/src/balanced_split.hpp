#pragma once

// Internal: the endpoint sweep shared by box splitting and cograph pivots.

#include "semilinear/errors.hpp"

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

namespace semilinear::detail {

template <class T>
struct SplitCounts {
    T h{};
    std::size_t below = 0;
    std::size_t above = 0;
};

/// Intervals [lo[i], hi[i]] with lo < hi. below(h) = #{hi <= h},
/// above(h) = #{lo >= h}. Returns the first endpoint h (in increasing order)
/// with 2 below <= n and 2 above <= n, else the first such midpoint of two
/// consecutive distinct endpoints.
template <class T, class Midpoint>
SplitCounts<T> balanced_split(std::span<const T> lo, std::span<const T> hi, Midpoint midpoint) {
    const std::size_t n = lo.size();
    std::vector<T> los(lo.begin(), lo.end());
    std::vector<T> his(hi.begin(), hi.end());
    std::sort(los.begin(), los.end());
    std::sort(his.begin(), his.end());
    std::vector<T> candidates;
    candidates.reserve(2 * n);
    std::merge(los.begin(), los.end(), his.begin(), his.end(), std::back_inserter(candidates));
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    auto counts = [&](const T& h) {
        SplitCounts<T> c;
        c.h = h;
        c.below = static_cast<std::size_t>(std::upper_bound(his.begin(), his.end(), h) - his.begin());
        c.above = static_cast<std::size_t>(los.end() - std::lower_bound(los.begin(), los.end(), h));
        return c;
    };
    auto ok = [n](const SplitCounts<T>& c) { return 2 * c.below <= n && 2 * c.above <= n; };

    for (const auto& h : candidates) {
        auto c = counts(h);
        if (ok(c)) return c;
    }
    for (std::size_t i = 0; i + 1 < candidates.size(); ++i) {
        auto c = counts(midpoint(candidates[i], candidates[i + 1]));
        if (ok(c)) return c;
    }
    throw ProofInvariantViolated("balanced_split: no balanced pivot exists (degenerate intervals?)");
}

}  // namespace semilinear::detail
