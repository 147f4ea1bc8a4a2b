#include "semilinear/formula.hpp"

#include <algorithm>
#include <cassert>

namespace semilinear {

Rational LinearForm::operator()(std::span<const Rational> x, std::span<const Rational> y) const {
    assert(x.size() == x_coeffs.size() && y.size() == y_coeffs.size());
    Rational value = constant;
    for (std::size_t i = 0; i < x_coeffs.size(); ++i) {
        if (sgn(x_coeffs[i]) != 0) {
            value += x_coeffs[i] * x[i];
        }
    }
    for (std::size_t j = 0; j < y_coeffs.size(); ++j) {
        if (sgn(y_coeffs[j]) != 0) {
            value += y_coeffs[j] * y[j];
        }
    }
    return value;
}

LinearForm LinearForm::swapped() const { return {y_coeffs, x_coeffs, constant}; }

LinearForm LinearForm::negated() const {
    LinearForm out{x_coeffs, y_coeffs, -constant};
    for (auto& c : out.x_coeffs) c = -c;
    for (auto& c : out.y_coeffs) c = -c;
    return out;
}

LinearForm LinearForm::shifted(const Rational& delta) const {
    LinearForm out = *this;
    out.constant += delta;
    return out;
}

LinearForm LinearForm::constant_form(std::size_t d, const Rational& c) {
    return {Vector(d), Vector(d), c};
}

bool holds(Relation rel, const Rational& value) {
    switch (rel) {
        case Relation::LT: return sgn(value) < 0;
        case Relation::LE: return sgn(value) <= 0;
        case Relation::EQ: return sgn(value) == 0;
    }
    return false;
}

bool holds_sign(Relation rel, int sign) {
    switch (rel) {
        case Relation::LT: return sign < 0;
        case Relation::LE: return sign <= 0;
        case Relation::EQ: return sign == 0;
    }
    return false;
}

Formula Formula::atom(std::size_t form, Relation rel) {
    Formula f;
    f.kind_ = Kind::Atom;
    f.atom_ = {form, rel};
    return f;
}

Formula Formula::negation(Formula child) {
    Formula f;
    f.kind_ = Kind::Not;
    f.children_.push_back(std::move(child));
    return f;
}

Formula Formula::conjunction(std::vector<Formula> children) {
    Formula f;
    f.kind_ = Kind::And;
    f.children_ = std::move(children);
    return f;
}

Formula Formula::disjunction(std::vector<Formula> children) {
    Formula f;
    f.kind_ = Kind::Or;
    f.children_ = std::move(children);
    return f;
}

bool Formula::evaluate(std::span<const Rational> values) const {
    switch (kind_) {
        case Kind::Atom: return holds(atom_.relation, values[atom_.form]);
        case Kind::Not: return !children_.front().evaluate(values);
        case Kind::And:
            return std::all_of(children_.begin(), children_.end(),
                               [&](const Formula& c) { return c.evaluate(values); });
        case Kind::Or:
            return std::any_of(children_.begin(), children_.end(),
                               [&](const Formula& c) { return c.evaluate(values); });
    }
    return false;
}

bool Formula::evaluate_signs(std::span<const int> signs) const {
    switch (kind_) {
        case Kind::Atom: return holds_sign(atom_.relation, signs[atom_.form]);
        case Kind::Not: return !children_.front().evaluate_signs(signs);
        case Kind::And:
            return std::all_of(children_.begin(), children_.end(),
                               [&](const Formula& c) { return c.evaluate_signs(signs); });
        case Kind::Or:
            return std::any_of(children_.begin(), children_.end(),
                               [&](const Formula& c) { return c.evaluate_signs(signs); });
    }
    return false;
}

long Formula::max_form_index() const {
    if (kind_ == Kind::Atom) {
        return static_cast<long>(atom_.form);
    }
    long best = -1;
    for (const auto& c : children_) {
        best = std::max(best, c.max_form_index());
    }
    return best;
}

}  // namespace semilinear
