#pragma once

// Internal: integer-coordinate kernels behind the coloring pipeline.

#include "semilinear/coloring.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace semilinear::detail {

using LessFn = std::function<bool(std::size_t, std::size_t)>;

struct ChainHeights {
    std::vector<std::uint64_t> height;  // >= 1
    std::vector<std::size_t> pred;      // SIZE_MAX for chain bottoms
    std::uint64_t max_height = 0;
    std::size_t top = 0;

    std::vector<std::size_t> chain_to(std::size_t v) const;
};

/// Longest chain ending at each element. Throws NotPartialOrder.
ChainHeights chain_heights(std::size_t n, const LessFn& less);

/// n boxes in dimension d, row major; lo < hi coordinatewise.
struct IntBoxes {
    std::size_t d = 0;
    std::size_t n = 0;
    std::vector<std::int64_t> lo;
    std::vector<std::int64_t> hi;
};

/// Throws PreconditionViolated carrying a chain (box indices) of length s.
Coloring color_int_boxes(const IntBoxes& boxes, const LessFn& less, std::size_t s,
                         BoxColoringStats* stats);

}  // namespace semilinear::detail
