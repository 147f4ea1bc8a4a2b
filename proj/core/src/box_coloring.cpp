#include "balanced_split.hpp"
#include "box_kernel.hpp"
#include "semilinear/coloring.hpp"
#include "semilinear/errors.hpp"
#include "split_ranks.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace semilinear {

namespace detail {

std::vector<std::size_t> ChainHeights::chain_to(std::size_t v) const {
    std::vector<std::size_t> chain;
    for (std::size_t cur = v; cur != std::numeric_limits<std::size_t>::max(); cur = pred[cur]) {
        chain.push_back(cur);
    }
    std::reverse(chain.begin(), chain.end());
    return chain;
}

ChainHeights chain_heights(std::size_t n, const LessFn& less) {
    constexpr auto none = std::numeric_limits<std::size_t>::max();
    ChainHeights out;
    out.height.assign(n, 1);
    out.pred.assign(n, none);
    for (std::size_t v = 0; v < n; ++v) {
        if (less(v, v)) {
            throw NotPartialOrder("relation is reflexive at " + std::to_string(v));
        }
    }
    // Kahn's algorithm without materializing the relation.
    std::vector<std::size_t> indegree(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t w = 0; w < n; ++w) {
            if (v != w && less(v, w)) ++indegree[w];
        }
    }
    std::vector<bool> done(n, false);
    std::vector<std::size_t> ready;
    for (std::size_t v = 0; v < n; ++v) {
        if (indegree[v] == 0) ready.push_back(v);
    }
    std::size_t processed = 0;
    while (!ready.empty()) {
        const std::size_t v = ready.back();
        ready.pop_back();
        done[v] = true;
        ++processed;
        for (std::size_t w = 0; w < n; ++w) {
            if (done[w] || w == v || !less(v, w)) continue;
            if (out.height[v] + 1 > out.height[w]) {
                out.height[w] = out.height[v] + 1;
                out.pred[w] = v;
            }
            if (--indegree[w] == 0) ready.push_back(w);
        }
    }
    if (processed != n) {
        throw NotPartialOrder("relation contains a cycle");
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (out.height[v] > out.max_height) {
            out.max_height = out.height[v];
            out.top = v;
        }
    }
    return out;
}

namespace {

class BoxKernel {
public:
    BoxKernel(const IntBoxes& boxes, const LessFn& less, std::size_t s, BoxColoringStats& stats)
        : boxes_(boxes), less_(less), s_(s), stats_(stats), colors_(boxes.n, 0) {}

    Coloring run() {
        std::vector<std::size_t> all(boxes_.n);
        std::iota(all.begin(), all.end(), 0);
        const std::uint64_t palette = solve(all, boxes_.d, 1);
        return {std::move(colors_), palette};
    }

private:
    // Endpoints are doubled so that midpoints stay integral.
    std::int64_t lo(std::size_t v, std::size_t c) const { return 2 * boxes_.lo[v * boxes_.d + c]; }
    std::int64_t hi(std::size_t v, std::size_t c) const { return 2 * boxes_.hi[v * boxes_.d + c]; }

    std::uint64_t solve(const std::vector<std::size_t>& set, std::size_t dim, std::size_t depth) {
        if (set.empty()) return 0;
        ++stats_.calls;
        stats_.max_depth = std::max(stats_.max_depth, depth);
        if (dim == 0) return mirsky(set);
        if (set.size() == 1) {
            colors_[set.front()] = 0;
            return 1;
        }
        const std::size_t c = dim - 1;
        std::vector<std::int64_t> los(set.size());
        std::vector<std::int64_t> his(set.size());
        for (std::size_t k = 0; k < set.size(); ++k) {
            los[k] = lo(set[k], c);
            his[k] = hi(set[k], c);
        }
        const auto split = balanced_split<std::int64_t>(
            los, his, [](std::int64_t a, std::int64_t b) { return (a + b) / 2; });

        std::vector<std::size_t> below;
        std::vector<std::size_t> above;
        std::vector<std::size_t> crossing;
        for (std::size_t k = 0; k < set.size(); ++k) {
            if (his[k] <= split.h) {
                below.push_back(set[k]);
            } else if (los[k] >= split.h) {
                above.push_back(set[k]);
            } else {
                crossing.push_back(set[k]);
            }
        }
        const std::uint64_t side = std::max(solve(below, dim, depth + 1), solve(above, dim, depth + 1));
        const std::uint64_t cross = dim == 1 ? mirsky(crossing) : solve(crossing, dim - 1, depth + 1);
        for (std::size_t v : crossing) colors_[v] += side;
        return side + cross;
    }

    // The elements of `set` pairwise intersect, so the order restricted to
    // them is exactly the graph to color.
    std::uint64_t mirsky(const std::vector<std::size_t>& set) {
        if (set.empty()) return 0;
        const ChainHeights heights = chain_heights(
            set.size(), [&](std::size_t a, std::size_t b) { return less_(set[a], set[b]); });
        if (heights.max_height >= s_) {
            std::vector<std::size_t> chain = heights.chain_to(heights.top);
            for (auto& v : chain) v = set[v];
            throw PreconditionViolated("clique of size " + std::to_string(chain.size()) +
                                           " >= s = " + std::to_string(s_),
                                       std::move(chain));
        }
        for (std::size_t k = 0; k < set.size(); ++k) colors_[set[k]] = heights.height[k] - 1;
        return heights.max_height;
    }

    const IntBoxes& boxes_;
    const LessFn& less_;
    std::size_t s_;
    BoxColoringStats& stats_;
    std::vector<std::uint64_t> colors_;
};

}  // namespace

Coloring color_int_boxes(const IntBoxes& boxes, const LessFn& less, std::size_t s,
                         BoxColoringStats* stats) {
    BoxColoringStats local;
    BoxKernel kernel(boxes, less, s, stats ? *stats : local);
    return kernel.run();
}

}  // namespace detail

HyperplaneSplit split_hyperplane(std::span<const Box> boxes, std::size_t dim) {
    if (boxes.empty()) throw InvalidParams("split_hyperplane: no boxes");
    Vector lo(boxes.size());
    Vector hi(boxes.size());
    for (std::size_t i = 0; i < boxes.size(); ++i) {
        boxes[i].validate();
        if (dim >= boxes[i].dim()) throw InvalidParams("split_hyperplane: coordinate out of range");
        lo[i] = boxes[i].lower[dim];
        hi[i] = boxes[i].upper[dim];
    }
    const auto split = detail::balanced_split<Rational>(
        lo, hi, [](const Rational& a, const Rational& b) { return Rational((a + b) / 2); });
    HyperplaneSplit out;
    out.h = split.h;
    for (std::size_t i = 0; i < boxes.size(); ++i) {
        if (hi[i] <= out.h) {
            out.below.push_back(i);
        } else if (lo[i] >= out.h) {
            out.above.push_back(i);
        } else {
            out.crossing.push_back(i);
        }
    }
    return out;
}

Coloring color_box_cap_comparability(std::span<const Box> boxes, const OrderRelation& order,
                                     std::size_t s, BoxColoringStats* stats) {
    if (order.size != boxes.size()) {
        throw DomainMismatch("color_box_cap_comparability: order and boxes differ in size");
    }
    detail::IntBoxes ints;
    ints.n = boxes.size();
    ints.d = boxes.empty() ? 0 : boxes.front().dim();
    ints.lo.resize(ints.n * ints.d);
    ints.hi.resize(ints.n * ints.d);
    for (const auto& b : boxes) {
        b.validate();
        if (b.dim() != ints.d) throw InvalidParams("boxes of different dimensions");
    }
    Vector lo(ints.n);
    Vector hi(ints.n);
    for (std::size_t c = 0; c < ints.d; ++c) {
        for (std::size_t v = 0; v < ints.n; ++v) {
            lo[v] = boxes[v].lower[c];
            hi[v] = boxes[v].upper[c];
        }
        const auto ranks = detail::rank_pair(lo, hi);
        for (std::size_t v = 0; v < ints.n; ++v) {
            ints.lo[v * ints.d + c] = ranks.left[v];
            ints.hi[v * ints.d + c] = ranks.right[v];
        }
    }
    return detail::color_int_boxes(ints, order.less, s, stats);
}

}  // namespace semilinear
