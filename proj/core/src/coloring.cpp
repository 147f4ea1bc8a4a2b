#include "semilinear/coloring.hpp"

#include "box_kernel.hpp"
#include "semilinear/errors.hpp"
#include "semilinear/normalize.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace semilinear {

bool Box::intersects(const Box& other) const {
    if (dim() != other.dim()) throw DomainMismatch("boxes of different dimensions");
    for (std::size_t i = 0; i < dim(); ++i) {
        if (!(lower[i] < other.upper[i] && other.lower[i] < upper[i])) return false;
    }
    return true;
}

void Box::validate() const {
    if (lower.size() != upper.size()) throw InvalidParams("box corners differ in dimension");
    for (std::size_t i = 0; i < dim(); ++i) {
        if (!(lower[i] < upper[i])) {
            throw InvalidParams("box is empty in coordinate " + std::to_string(i));
        }
    }
}

AdjacencyGraph intersection_graph(std::span<const Box> boxes) {
    AdjacencyGraph g(boxes.size());
    for (std::size_t u = 0; u < boxes.size(); ++u) {
        for (std::size_t v = u + 1; v < boxes.size(); ++v) {
            if (boxes[u].intersects(boxes[v])) g.add_edge(u, v);
        }
    }
    return g;
}

AdjacencyGraph comparability_graph(const OrderRelation& order) {
    AdjacencyGraph g(order.size);
    for (std::size_t u = 0; u < order.size; ++u) {
        for (std::size_t v = 0; v < order.size; ++v) {
            if (u != v && order.less(u, v)) g.add_edge(u, v);
        }
    }
    return g;
}

std::vector<std::size_t> longest_chain(const OrderRelation& order) {
    if (order.size == 0) return {};
    const auto heights = detail::chain_heights(order.size, order.less);
    return heights.chain_to(heights.top);
}

Coloring mirsky_color(const OrderRelation& order) {
    const auto heights = detail::chain_heights(order.size, order.less);
    Coloring out;
    out.palette = heights.max_height;
    out.colors.reserve(order.size);
    for (auto h : heights.height) out.colors.push_back(h - 1);
    return out;
}

Coloring product_color(std::span<const Coloring> colorings) {
    if (colorings.empty()) throw InvalidParams("product_color: nothing to combine");
    const std::size_t n = colorings.front().size();
    Coloring out;
    out.colors.assign(n, 0);
    out.palette = 1;
    for (const auto& c : colorings) {
        if (c.size() != n) throw DomainMismatch("product_color: colorings differ in size");
        if (n > 0 && c.palette == 0) throw InvalidParams("product_color: empty palette");
        std::uint64_t radix = std::max<std::uint64_t>(c.palette, 1);
        for (std::size_t v = 0; v < n; ++v) {
            if (c.colors[v] >= radix) throw InvalidParams("product_color: color outside palette");
            out.colors[v] = out.colors[v] * radix + c.colors[v];
        }
        if (__builtin_mul_overflow(out.palette, radix, &out.palette)) {
            throw std::overflow_error("product_color: palette exceeds 64 bits");
        }
    }
    if (n == 0) out.palette = 0;
    return out;
}

Coloring compact(const Coloring& c) {
    std::unordered_map<std::uint64_t, std::uint64_t> relabel;
    Coloring out;
    out.colors.reserve(c.size());
    for (auto color : c.colors) {
        auto [it, inserted] = relabel.try_emplace(color, relabel.size());
        out.colors.push_back(it->second);
    }
    out.palette = relabel.size();
    return out;
}

TypeClassDecomposition::TypeClassDecomposition(const RankedQuasiComp& graph, std::uint32_t plus_mask)
    : graph_(&graph), plus_mask_(plus_mask) {
    // Submasks of plus_mask in increasing order.
    std::uint32_t q = 0;
    do {
        subsets_.push_back(q);
        q = (q - plus_mask_) & plus_mask_;
    } while (q != 0);
}

std::vector<std::size_t> TypeClassDecomposition::box_coordinates(std::uint32_t q) const {
    std::vector<std::size_t> coords;
    for (std::size_t i = 0; i < graph_->t; ++i) {
        if (((plus_mask_ & ~q) >> i) & 1U) coords.push_back(i);
    }
    return coords;
}

bool TypeClassDecomposition::intersects(std::uint32_t q, std::size_t v, std::size_t w) const {
    const auto& g = *graph_;
    for (std::size_t i : box_coordinates(q)) {
        if (!(g.xs(v, i) < g.ys(w, i) && g.xs(w, i) < g.ys(v, i))) return false;
    }
    return true;
}

bool TypeClassDecomposition::less(std::uint32_t q, std::size_t v, std::size_t w) const {
    const auto& g = *graph_;
    bool constrained = false;
    for (std::size_t i = 0; i < g.t; ++i) {
        const bool plus = (plus_mask_ >> i) & 1U;
        if (!plus) {
            constrained = true;
            if (!(g.xs(v, i) < g.ys(w, i))) return false;
        } else if ((q >> i) & 1U) {
            constrained = true;
            if (!(g.ys(v, i) < g.xs(w, i))) return false;
        }
    }
    // With nothing to compare, every pair of boxes is an edge candidate and
    // any linear order makes the comparability graph complete.
    return constrained || v < w;
}

Coloring color_quasicomp(const QuasiCompGraph& q, std::size_t s) {
    q.validate();
    const QuasiCompGraph perturbed = perturb(q);
    const RankedQuasiComp ranked = rank_compress(perturbed);

    std::map<std::uint32_t, std::vector<std::size_t>> classes;
    for (std::size_t v = 0; v < ranked.n; ++v) classes[ranked.type_mask(v)].push_back(v);

    Coloring out;
    out.colors.assign(ranked.n, 0);
    for (const auto& [mask, members] : classes) {
        TypeClassDecomposition dec(ranked, mask);
        Coloring acc;
        bool first = true;
        for (std::uint32_t sub : dec.subsets()) {
            const auto coords = dec.box_coordinates(sub);
            detail::IntBoxes boxes;
            boxes.d = coords.size();
            boxes.n = members.size();
            boxes.lo.reserve(boxes.n * boxes.d);
            boxes.hi.reserve(boxes.n * boxes.d);
            for (std::size_t v : members) {
                for (std::size_t i : coords) {
                    boxes.lo.push_back(ranked.xs(v, i));
                    boxes.hi.push_back(ranked.ys(v, i));
                }
            }
            detail::LessFn less = [&, sub](std::size_t a, std::size_t b) {
                return dec.less(sub, members[a], members[b]);
            };
            Coloring piece;
            try {
                piece = detail::color_int_boxes(boxes, less, s, nullptr);
            } catch (const PreconditionViolated& e) {
                std::vector<std::size_t> chain = e.witness();
                for (auto& v : chain) v = members[v];
                throw PreconditionViolated(e.what(), std::move(chain));
            }
            if (first) {
                acc = std::move(piece);
                first = false;
            } else {
                const Coloring pair[] = {acc, piece};
                acc = compact(product_color(pair));
            }
        }
        for (std::size_t k = 0; k < members.size(); ++k) {
            out.colors[members[k]] = out.palette + acc.colors[k];
        }
        out.palette += acc.palette;
    }
    return out;
}

Coloring color_dnf(const DnfGraph& d, std::size_t s) {
    d.validate();
    const std::size_t n = d.vertices.size();
    const auto pieces = to_quasicomp(d);
    std::vector<Coloring> colorings;
    for (const auto& q : pieces) {
        try {
            colorings.push_back(color_quasicomp(q, s));
        } catch (const PreconditionViolated& e) {
            std::vector<std::size_t> chain = e.witness();
            for (auto& v : chain) v = q.vertices[v].original_index;
            throw PreconditionViolated(e.what(), std::move(chain));
        }
    }
    if (colorings.empty()) {
        Coloring single;
        single.colors.assign(n, 0);
        single.palette = n > 0 ? 1 : 0;
        return single;
    }
    Coloring acc = colorings.front();
    for (std::size_t i = 1; i < colorings.size(); ++i) {
        const Coloring pair[] = {acc, colorings[i]};
        acc = compact(product_color(pair));
    }
    return acc;
}

Coloring color_semilinear(const SemilinearGraph& g, std::size_t s) {
    return color_dnf(to_dnf(g), s);
}

}  // namespace semilinear
