#include "semilinear/errors.hpp"
#include "semilinear/ramsey.hpp"

#include <set>
#include <string>

namespace semilinear {

namespace {

using Weights = std::map<SubsetMask, Rational>;

SubsetMask full_mask(std::size_t t) {
    return t >= 32 ? ~SubsetMask{0} : static_cast<SubsetMask>((std::uint64_t{1} << t) - 1);
}

Rational lookup(const Weights& w, SubsetMask a) {
    auto it = w.find(a);
    return it == w.end() ? Rational(0) : it->second;
}

// Removes bit b and closes the gap.
SubsetMask squeeze(SubsetMask a, std::size_t b) {
    const SubsetMask low = a & ((SubsetMask{1} << b) - 1);
    return low | ((a >> (b + 1)) << b);
}

// Inverse of squeeze with a zero at bit b.
SubsetMask unsqueeze(SubsetMask a, std::size_t b) {
    const SubsetMask low = a & ((SubsetMask{1} << b) - 1);
    return low | ((a >> b) << (b + 1));
}

bool exact_tenth_root(const Rational& v, Rational& root) {
    const Integer num = v.get_num();
    const Integer den = v.get_den();
    Integer rn = floor_root(num, 10);
    Integer rd = floor_root(den, 10);
    Integer pn;
    Integer pd;
    mpz_pow_ui(pn.get_mpz_t(), rn.get_mpz_t(), 10);
    mpz_pow_ui(pd.get_mpz_t(), rd.get_mpz_t(), 10);
    if (pn != num || pd != den) return false;
    root = Rational(rn, rd);
    root.canonicalize();
    return true;
}

EhOutcome solve(const Weights& w, std::size_t t) {
    const Rational fifth(1, 5);
    if (t == 2) {
        if (lookup(w, 0) >= fifth && lookup(w, 3) >= fifth) return {EhOutcome::Kind::CaseI, {}};
        return {EhOutcome::Kind::CaseII, {{1}, {2}}};
    }
    const Rational threshold = pow(Rational(2, static_cast<long>(t)), 10);
    const SubsetMask full = full_mask(t);
    const std::size_t needed = (t + 1) / 2;

    std::vector<SubsetMask> heavy_singletons;
    std::vector<SubsetMask> heavy_cosingletons;
    for (std::size_t b = 0; b < t; ++b) {
        const SubsetMask single = SubsetMask{1} << b;
        if (lookup(w, single) >= threshold) heavy_singletons.push_back(single);
        if (lookup(w, full ^ single) >= threshold) heavy_cosingletons.push_back(full ^ single);
    }
    for (const auto* heavy : {&heavy_singletons, &heavy_cosingletons}) {
        if (2 * heavy->size() >= t) {
            EhOutcome out{EhOutcome::Kind::CaseII, {}};
            for (std::size_t j = 0; j < needed; ++j) out.families.push_back({(*heavy)[j]});
            return out;
        }
    }

    // Fewer than t/2 heavy on each side, so some coordinate is light on both.
    std::size_t light = t;
    for (std::size_t b = 0; b < t && light == t; ++b) {
        const SubsetMask single = SubsetMask{1} << b;
        if (lookup(w, single) < threshold && lookup(w, full ^ single) < threshold) light = b;
    }
    if (light == t) throw ProofInvariantViolated("eh_decompose: no coordinate is light on both sides");

    Weights contracted;
    for (const auto& [a, value] : w) contracted[squeeze(a, light)] += value;
    EhOutcome inner = solve(contracted, t - 1);
    for (auto& family : inner.families) {
        std::vector<SubsetMask> lifted;
        for (SubsetMask a : family) {
            const SubsetMask base = unsqueeze(a, light);
            lifted.push_back(base);
            lifted.push_back(base | (SubsetMask{1} << light));
        }
        family = std::move(lifted);
    }
    return inner;
}

}  // namespace

Rational WeightFunction::weight(SubsetMask a) const { return lookup(weights, a); }

Rational WeightFunction::weight(const std::vector<SubsetMask>& family) const {
    Rational sum = 0;
    for (SubsetMask a : family) sum += weight(a);
    return sum;
}

Rational WeightFunction::total() const {
    Rational sum = 0;
    for (const auto& [a, value] : weights) sum += value;
    return sum;
}

Rational WeightFunction::missing(std::size_t i) const {
    Rational sum = 0;
    for (const auto& [a, value] : weights) {
        if (!((a >> (i - 1)) & 1U)) sum += value;
    }
    return sum;
}

Rational WeightFunction::containing(std::size_t i) const {
    Rational sum = 0;
    for (const auto& [a, value] : weights) {
        if ((a >> (i - 1)) & 1U) sum += value;
    }
    return sum;
}

bool WeightFunction::balanced() const {
    const Rational half(1, 2);
    for (std::size_t i = 1; i <= t; ++i) {
        if (missing(i) > half || containing(i) > half) return false;
    }
    return true;
}

void WeightFunction::validate() const {
    if (t > 31) throw InvalidParams("weight function: t > 31 is not supported");
    const SubsetMask full = full_mask(t);
    for (const auto& [a, value] : weights) {
        if ((a & ~full) != 0) throw InvalidParams("weight function: set outside [t]");
        if (value < 0) throw InvalidParams("weight function: negative weight");
    }
}

bool tenth_roots_reach_one(const std::vector<Rational>& values) {
    for (unsigned long bits : {64UL, 512UL}) {
        Rational sum = 0;
        for (const auto& v : values) {
            if (v < 0) return false;
            Rational root;
            sum += exact_tenth_root(v, root) ? root : root_lower_bound(v, 10, bits);
        }
        if (sum >= 1) return true;
    }
    return false;
}

void check_eh_outcome(const WeightFunction& w, const EhOutcome& outcome) {
    const Rational tenth(1, 10);
    if (outcome.kind == EhOutcome::Kind::CaseI) {
        if (w.weight(0) < tenth || w.weight(full_mask(w.t)) < tenth) {
            throw ProofInvariantViolated("CaseI with an extreme set lighter than 1/10");
        }
        return;
    }
    std::set<SubsetMask> seen;
    std::vector<Rational> family_weights;
    for (std::size_t i = 0; i < outcome.families.size(); ++i) {
        for (SubsetMask a : outcome.families[i]) {
            if ((a & ~full_mask(w.t)) != 0) throw ProofInvariantViolated("family set outside [t]");
            if (!seen.insert(a).second) throw ProofInvariantViolated("families are not disjoint");
        }
        for (std::size_t j = i + 1; j < outcome.families.size(); ++j) {
            for (SubsetMask a : outcome.families[i]) {
                for (SubsetMask b : outcome.families[j]) {
                    if ((a & ~b) == 0 || (b & ~a) == 0) {
                        throw ProofInvariantViolated("sets " + std::to_string(a) + " and " +
                                                     std::to_string(b) + " are comparable");
                    }
                }
            }
        }
        family_weights.push_back(w.weight(outcome.families[i]));
    }
    if (!tenth_roots_reach_one(family_weights)) {
        throw ProofInvariantViolated("family weights: sum of tenth roots is below 1");
    }
}

EhOutcome eh_decompose(const WeightFunction& w) {
    w.validate();
    if (w.t < 2) throw PreconditionViolated("eh_decompose: t must be at least 2");
    if (!w.balanced()) throw PreconditionViolated("eh_decompose: weights are not balanced");
    if (w.total() < Rational(9, 10)) throw PreconditionViolated("eh_decompose: total below 9/10");
    EhOutcome out = solve(w.weights, w.t);
    check_eh_outcome(w, out);
    return out;
}

}  // namespace semilinear
