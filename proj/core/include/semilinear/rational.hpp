#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace semilinear {

/// Exact rational scalar. GMP keeps every value canonical (reduced, positive
/// denominator) after each arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;
using Vector = std::vector<Rational>;

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& q);

/// Parses "p", "p/q", "-p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

Rational make_rational(long num, long den = 1);

/// Largest integer r with r^k <= n, for n >= 0.
Integer floor_root(const Integer& n, unsigned long k);

/// A dyadic lower bound r <= q^(1/k) with denominator 2^bits, q >= 0.
Rational root_lower_bound(const Rational& q, unsigned long k, unsigned long bits = 64);

Rational pow(const Rational& q, unsigned long e);

}  // namespace semilinear
