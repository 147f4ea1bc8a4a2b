#pragma once

#include "semilinear/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace semilinear {

/// f(x, y) = constant + <x_coeffs, x> + <y_coeffs, y>.
struct LinearForm {
    Vector x_coeffs;
    Vector y_coeffs;
    Rational constant;

    std::size_t dim() const { return x_coeffs.size(); }

    Rational operator()(std::span<const Rational> x, std::span<const Rational> y) const;

    /// The form with the roles of x and y exchanged.
    LinearForm swapped() const;
    LinearForm negated() const;
    LinearForm shifted(const Rational& delta) const;

    /// The always-true padding atom (-1 < 0) in dimension d.
    static LinearForm constant_form(std::size_t d, const Rational& c);

    bool operator==(const LinearForm&) const = default;
};

enum class Relation { LT, LE, EQ };

bool holds(Relation rel, const Rational& value);
bool holds_sign(Relation rel, int sign);

struct SignAtom {
    std::size_t form = 0;
    Relation relation = Relation::LT;

    bool operator==(const SignAtom&) const = default;
};

/// Boolean combination of sign atoms. An empty `and` is true, an empty `or`
/// is false.
class Formula {
public:
    enum class Kind { Atom, Not, And, Or };

    static Formula atom(std::size_t form, Relation rel);
    static Formula negation(Formula child);
    static Formula conjunction(std::vector<Formula> children);
    static Formula disjunction(std::vector<Formula> children);

    Kind kind() const { return kind_; }
    const SignAtom& atom() const { return atom_; }
    const std::vector<Formula>& children() const { return children_; }

    /// Evaluates with `values[i]` = f_i(x, y).
    bool evaluate(std::span<const Rational> values) const;
    /// Same, from the signs (-1, 0, +1) of the form values.
    bool evaluate_signs(std::span<const int> signs) const;

    /// Largest form index referenced, or -1 for a formula without atoms.
    long max_form_index() const;

    bool operator==(const Formula&) const = default;

private:
    Kind kind_ = Kind::And;
    SignAtom atom_{};
    std::vector<Formula> children_;
};

}  // namespace semilinear
