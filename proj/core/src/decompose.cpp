#include "semilinear/decompose.hpp"

#include "semilinear/errors.hpp"
#include "split_ranks.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace semilinear {

Rational AffineFunction::operator()(std::span<const Rational> z) const {
    Rational value = constant;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (sgn(coeffs[i]) != 0) value += coeffs[i] * z[i];
    }
    return value;
}

std::pair<AffineFunction, AffineFunction> split_linear(const LinearForm& f) {
    return {AffineFunction{f.x_coeffs, f.constant}, AffineFunction{f.y_coeffs, Rational(0)}};
}

bool strictly_below(std::span<const Rational> a, std::span<const Rational> b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!(a[i] < b[i])) return false;
    }
    return true;
}

bool QuasiCompGraph::has_edge(std::size_t v, std::size_t w) const {
    if (v == w) return false;
    const auto& a = vertices[v];
    const auto& b = vertices[w];
    return strictly_below(a.x, b.y) || strictly_below(b.x, a.y);
}

void QuasiCompGraph::validate() const {
    if (t == 0) throw InvalidParams("quasi-comparability graph needs t >= 1");
    for (std::size_t v = 0; v < vertices.size(); ++v) {
        if (vertices[v].x.size() != t || vertices[v].y.size() != t) {
            throw InvalidParams("vertex " + std::to_string(v) + " does not have t coordinates");
        }
    }
}

AdjacencyGraph materialize(const QuasiCompGraph& q) {
    const RankedQuasiComp r = rank_compress(q);
    AdjacencyGraph out(q.size());
    for (std::size_t v = 0; v < q.size(); ++v) {
        for (std::size_t w = v + 1; w < q.size(); ++w) {
            if (r.has_edge(v, w)) out.add_edge(v, w);
        }
    }
    return out;
}

std::vector<QuasiCompGraph> to_quasicomp(const DnfGraph& d) {
    d.validate();
    const std::size_t t = d.term_length();
    std::vector<QuasiCompGraph> out;
    out.reserve(d.terms.size());
    for (const auto& term : d.terms) {
        QuasiCompGraph q;
        q.t = t;
        q.vertices.resize(d.size());
        for (std::size_t v = 0; v < d.size(); ++v) {
            q.vertices[v].original_index = v;
            q.vertices[v].x.resize(t);
            q.vertices[v].y.resize(t);
        }
        for (std::size_t j = 0; j < t; ++j) {
            const auto [g, h] = split_linear(d.forms[term[j]]);
            for (std::size_t v = 0; v < d.size(); ++v) {
                q.vertices[v].x[j] = g(d.vertices[v]);
                q.vertices[v].y[j] = -h(d.vertices[v]);
            }
        }
        out.push_back(std::move(q));
    }
    return out;
}

QuasiCompGraph perturb(const QuasiCompGraph& q) {
    Rational delta;
    bool found = false;
    for (std::size_t i = 0; i < q.t; ++i) {
        Vector xs(q.size());
        Vector ys(q.size());
        for (std::size_t v = 0; v < q.size(); ++v) {
            xs[v] = q.vertices[v].x[i];
            ys[v] = q.vertices[v].y[i];
        }
        // smallest positive y_w - x_v over all (v, w), including v = w
        std::sort(ys.begin(), ys.end());
        for (const auto& xv : xs) {
            auto it = std::upper_bound(ys.begin(), ys.end(), xv);
            if (it != ys.end()) {
                Rational gap = *it - xv;
                if (!found || gap < delta) delta = gap, found = true;
            }
        }
    }
    delta = found ? Rational(delta / 2) : Rational(1);
    QuasiCompGraph out = q;
    for (auto& v : out.vertices) {
        for (auto& c : v.y) c -= delta;
    }
    return out;
}

bool is_perturbed(const QuasiCompGraph& q) {
    for (const auto& v : q.vertices) {
        for (std::size_t i = 0; i < q.t; ++i) {
            if (v.x[i] == v.y[i]) return false;
        }
    }
    return true;
}

TypeVector type_of(const QuasiCompVertex& v) {
    TypeVector out;
    out.t = v.x.size();
    for (std::size_t i = 0; i < v.x.size(); ++i) {
        if (v.y[i] > v.x[i]) out.plus_mask |= (1U << i);
    }
    return out;
}

std::map<TypeVector, std::vector<std::size_t>> type_partition(const QuasiCompGraph& q) {
    if (q.t > 31) throw InvalidParams("type_partition supports t <= 31");
    if (!is_perturbed(q)) {
        throw NotPerturbed("type_partition: some vertex has x(i) = y(i)");
    }
    std::map<TypeVector, std::vector<std::size_t>> out;
    for (std::size_t v = 0; v < q.size(); ++v) {
        out[type_of(q.vertices[v])].push_back(v);
    }
    return out;
}

std::uint32_t RankedQuasiComp::type_mask(std::size_t v) const {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < t; ++i) {
        if (ys(v, i) > xs(v, i)) mask |= (1U << i);
    }
    return mask;
}

RankedQuasiComp rank_compress(const QuasiCompGraph& q) {
    RankedQuasiComp out;
    out.t = q.t;
    out.n = q.size();
    out.x.resize(out.n * out.t);
    out.y.resize(out.n * out.t);
    Vector xs(out.n);
    Vector ys(out.n);
    for (std::size_t i = 0; i < q.t; ++i) {
        for (std::size_t v = 0; v < out.n; ++v) {
            xs[v] = q.vertices[v].x[i];
            ys[v] = q.vertices[v].y[i];
        }
        const detail::FormRanks r = detail::rank_pair(xs, ys);
        for (std::size_t v = 0; v < out.n; ++v) {
            out.x[v * out.t + i] = r.left[v];
            out.y[v * out.t + i] = r.right[v];
        }
    }
    return out;
}

}  // namespace semilinear
