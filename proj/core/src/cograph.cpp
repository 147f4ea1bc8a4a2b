#include "balanced_split.hpp"
#include "semilinear/errors.hpp"
#include "semilinear/ramsey.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace semilinear {

Cotree Cotree::leaf(std::size_t vertex) {
    Cotree c;
    c.op_ = Op::Leaf;
    c.vertex_ = vertex;
    return c;
}

Cotree Cotree::make(Op op, std::vector<Cotree> children) {
    if (op == Op::Leaf) throw InvalidCotree("Cotree::make: a leaf has no children");
    Cotree c;
    c.op_ = op;
    c.children_ = std::move(children);
    return c;
}

std::vector<std::size_t> Cotree::leaves() const {
    std::vector<std::size_t> out;
    std::vector<const Cotree*> stack{this};
    while (!stack.empty()) {
        const Cotree* node = stack.back();
        stack.pop_back();
        if (node->op_ == Op::Leaf) {
            out.push_back(node->vertex_);
            continue;
        }
        for (auto it = node->children_.rbegin(); it != node->children_.rend(); ++it) stack.push_back(&*it);
    }
    return out;
}

std::size_t Cotree::leaf_count() const { return leaves().size(); }

void Cotree::check_structure() const {
    std::set<std::size_t> seen;
    std::vector<const Cotree*> stack{this};
    while (!stack.empty()) {
        const Cotree* node = stack.back();
        stack.pop_back();
        if (node->op_ == Op::Leaf) {
            if (!seen.insert(node->vertex_).second) {
                throw InvalidCotree("vertex " + std::to_string(node->vertex_) + " appears twice");
            }
            continue;
        }
        if (node->children_.empty()) throw InvalidCotree("internal node without children");
        for (const auto& child : node->children_) stack.push_back(&child);
    }
}

std::optional<Edge> Cotree::induced_violation(const AdjacencyGraph& g) const {
    if (op_ == Op::Leaf) {
        if (vertex_ >= g.size()) return Edge{vertex_, vertex_};
        return std::nullopt;
    }
    std::vector<std::vector<std::size_t>> parts;
    for (const auto& child : children_) {
        if (auto bad = child.induced_violation(g)) return bad;
        parts.push_back(child.leaves());
    }
    const bool want_edge = op_ == Op::Join;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
            for (std::size_t u : parts[i]) {
                for (std::size_t v : parts[j]) {
                    if (g.has_edge(u, v) != want_edge) return Edge{u, v};
                }
            }
        }
    }
    return std::nullopt;
}

namespace {

using Members = std::vector<std::size_t>;

Cotree flat(Cotree::Op op, const Members& vs) {
    std::vector<Cotree> leaves;
    leaves.reserve(vs.size());
    for (std::size_t v : vs) leaves.push_back(Cotree::leaf(v));
    return Cotree::make(op, std::move(leaves));
}

class CographBuilder {
public:
    CographBuilder(const RankedQuasiComp& g, std::uint32_t type_mask, CographStats& stats)
        : g_(g), type_mask_(type_mask), stats_(stats) {}

    Cotree build(const Members& vs, const std::vector<std::size_t>& coords, std::size_t depth) {
        stats_.max_depth = std::max(stats_.max_depth, depth);
        if (vs.size() == 1) return Cotree::leaf(vs.front());
        if (coords.empty() || (coords.size() == 1 && plus(coords.front()))) {
            ++stats_.complete_bases;
            require_cross(singletons(vs), true);
            return flat(Cotree::Op::Join, vs);
        }
        if (coords.size() == 1) return interval_base(vs, coords.front());

        const std::size_t n = vs.size();
        const std::size_t tt = coords.size();
        std::vector<std::vector<int>> side(tt, std::vector<int>(n, 0));
        for (std::size_t k = 0; k < tt; ++k) {
            const std::size_t c = coords[k];
            std::vector<std::int64_t> lo(n);
            std::vector<std::int64_t> hi(n);
            for (std::size_t j = 0; j < n; ++j) {
                lo[j] = std::min(g_.xs(vs[j], c), g_.ys(vs[j], c));
                hi[j] = std::max(g_.xs(vs[j], c), g_.ys(vs[j], c));
            }
            const auto split = detail::balanced_split<std::int64_t>(
                lo, hi, [](std::int64_t a, std::int64_t b) { return (a + b) / 2; });
            Members middle;
            for (std::size_t j = 0; j < n; ++j) {
                side[k][j] = hi[j] <= split.h ? -1 : (lo[j] >= split.h ? 1 : 0);
                if (side[k][j] == 0) middle.push_back(vs[j]);
            }
            if (10 * tt * middle.size() >= n) return slab(middle, coords, k, depth);
        }
        return lattice(vs, coords, side, depth);
    }

private:
    bool plus(std::size_t c) const { return (type_mask_ >> c) & 1U; }

    static std::vector<Members> singletons(const Members& vs) {
        std::vector<Members> parts;
        for (std::size_t v : vs) parts.push_back({v});
        return parts;
    }

    void require_cross(const std::vector<Members>& parts, bool want_edge) const {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            for (std::size_t j = i + 1; j < parts.size(); ++j) {
                for (std::size_t u : parts[i]) {
                    for (std::size_t v : parts[j]) {
                        if (g_.has_edge(u, v) != want_edge) {
                            throw ProofInvariantViolated(
                                std::string(want_edge ? "missing" : "unexpected") +
                                    " edge between parts that must be " +
                                    (want_edge ? "joined" : "separated"),
                                {u, v});
                        }
                    }
                }
            }
        }
    }

    // One coordinate with y < x: v ~ w iff the intervals (y, x) are disjoint.
    Cotree interval_base(const Members& vs, std::size_t c) {
        ++stats_.interval_bases;
        Members by_right = vs;
        std::sort(by_right.begin(), by_right.end(), [&](std::size_t a, std::size_t b) {
            return g_.xs(a, c) != g_.xs(b, c) ? g_.xs(a, c) < g_.xs(b, c) : a < b;
        });
        Members disjoint;
        for (std::size_t v : by_right) {
            if (disjoint.empty() || g_.xs(disjoint.back(), c) < g_.ys(v, c)) disjoint.push_back(v);
        }
        Members overlapping;
        for (std::size_t v : vs) {
            Members here;
            for (std::size_t w : vs) {
                if (g_.ys(w, c) <= g_.ys(v, c) && g_.ys(v, c) < g_.xs(w, c)) here.push_back(w);
            }
            if (here.size() > overlapping.size()) overlapping = std::move(here);
        }
        if (disjoint.size() >= overlapping.size()) {
            require_cross(singletons(disjoint), true);
            return flat(Cotree::Op::Join, disjoint);
        }
        require_cross(singletons(overlapping), false);
        return flat(Cotree::Op::Union, overlapping);
    }

    Cotree slab(const Members& middle, const std::vector<std::size_t>& coords, std::size_t k,
                std::size_t depth) {
        const std::size_t c = coords[k];
        if (!plus(c)) {
            ++stats_.empty_slabs;
            require_cross(singletons(middle), false);
            return flat(Cotree::Op::Union, middle);
        }
        // Coordinate c is satisfied by every pair of the slab, so it can go.
        std::size_t arg_x = middle.front();
        std::size_t arg_y = middle.front();
        for (std::size_t v : middle) {
            if (g_.xs(v, c) > g_.xs(arg_x, c)) arg_x = v;
            if (g_.ys(v, c) < g_.ys(arg_y, c)) arg_y = v;
        }
        if (!(g_.xs(arg_x, c) < g_.ys(arg_y, c))) {
            throw ProofInvariantViolated("dropped coordinate does not hold across the slab",
                                         {arg_x, arg_y});
        }
        ++stats_.drops;
        std::vector<std::size_t> rest = coords;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
        return build(middle, rest, depth + 1);
    }

    Cotree lattice(const Members& vs, const std::vector<std::size_t>& coords,
                   const std::vector<std::vector<int>>& side, std::size_t depth) {
        const std::size_t n = vs.size();
        const std::size_t tt = coords.size();
        std::map<SubsetMask, Members> classes;
        for (std::size_t j = 0; j < n; ++j) {
            SubsetMask a = 0;
            for (std::size_t k = 0; k < tt; ++k) {
                if (side[k][j] > 0) a |= SubsetMask{1} << k;
            }
            classes[a].push_back(vs[j]);
        }
        WeightFunction w;
        w.t = tt;
        for (const auto& [a, members] : classes) {
            w.weights[a] = Rational(static_cast<long>(members.size()), static_cast<long>(n));
        }
        EhOutcome outcome;
        try {
            outcome = eh_decompose(w);
        } catch (const PreconditionViolated& e) {
            throw ProofInvariantViolated(std::string("slab weights: ") + e.what());
        }

        if (outcome.kind == EhOutcome::Kind::CaseI) {
            const SubsetMask full = static_cast<SubsetMask>((std::uint64_t{1} << tt) - 1);
            const Members low = classes[0];
            const Members high = classes[full];
            require_cross({low, high}, true);
            ++stats_.joins;
            std::vector<Cotree> children;
            children.push_back(build(low, coords, depth + 1));
            children.push_back(build(high, coords, depth + 1));
            return Cotree::make(Cotree::Op::Join, std::move(children));
        }
        std::vector<Members> parts;
        for (const auto& family : outcome.families) {
            Members part;
            for (SubsetMask a : family) {
                auto it = classes.find(a);
                if (it != classes.end()) part.insert(part.end(), it->second.begin(), it->second.end());
            }
            if (part.empty()) throw ProofInvariantViolated("family without vertices");
            parts.push_back(std::move(part));
        }
        require_cross(parts, false);
        ++stats_.unions;
        std::vector<Cotree> children;
        for (const auto& part : parts) children.push_back(build(part, coords, depth + 1));
        return Cotree::make(Cotree::Op::Union, std::move(children));
    }

    const RankedQuasiComp& g_;
    std::uint32_t type_mask_;
    CographStats& stats_;
};

}  // namespace

Cotree find_cograph(const QuasiCompGraph& q, CographStats* stats) {
    q.validate();
    if (q.size() == 0) throw InvalidParams("find_cograph: empty graph");
    RankedQuasiComp ranked = rank_compress(perturb(q));
    // Even coordinates leave room for integral midpoints.
    for (auto& v : ranked.x) v *= 2;
    for (auto& v : ranked.y) v *= 2;

    std::map<std::uint32_t, Members> classes;
    for (std::size_t v = 0; v < ranked.n; ++v) classes[ranked.type_mask(v)].push_back(v);
    auto best = classes.begin();
    for (auto it = classes.begin(); it != classes.end(); ++it) {
        if (it->second.size() > best->second.size()) best = it;
    }

    CographStats local;
    CographStats& st = stats ? *stats : local;
    st.type_class_size = best->second.size();
    std::vector<std::size_t> coords(ranked.t);
    for (std::size_t i = 0; i < ranked.t; ++i) coords[i] = i;
    CographBuilder builder(ranked, best->first, st);
    return builder.build(best->second, coords, 1);
}

RamseyWitness cograph_witness(const Cotree& c) {
    c.check_structure();
    struct Best {
        std::vector<std::size_t> clique;
        std::vector<std::size_t> independent;
    };
    auto solve = [](auto&& self, const Cotree& node) -> Best {
        if (node.op() == Cotree::Op::Leaf) return {{node.vertex()}, {node.vertex()}};
        Best out;
        const bool join = node.op() == Cotree::Op::Join;
        for (const auto& child : node.children()) {
            Best b = self(self, child);
            auto& summed = join ? out.clique : out.independent;
            auto& maxed = join ? out.independent : out.clique;
            const auto& child_summed = join ? b.clique : b.independent;
            auto& child_maxed = join ? b.independent : b.clique;
            summed.insert(summed.end(), child_summed.begin(), child_summed.end());
            if (child_maxed.size() > maxed.size()) maxed = std::move(child_maxed);
        }
        return out;
    };
    Best best = solve(solve, c);
    RamseyWitness w;
    if (best.clique.size() >= best.independent.size()) {
        w.kind = RamseyWitness::Kind::Clique;
        w.vertices = std::move(best.clique);
    } else {
        w.kind = RamseyWitness::Kind::IndependentSet;
        w.vertices = std::move(best.independent);
    }
    std::sort(w.vertices.begin(), w.vertices.end());
    const std::size_t m = c.leaf_count();
    if (w.size() * w.size() < m) {
        throw ProofInvariantViolated("cograph witness smaller than the square root of its size");
    }
    return w;
}

}  // namespace semilinear
