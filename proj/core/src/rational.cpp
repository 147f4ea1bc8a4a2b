#include "semilinear/rational.hpp"

#include <stdexcept>

namespace semilinear {

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) {
        return q.get_num().get_str();
    }
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool valid_integer(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (c < '0' || c > '9') {
            return false;
        }
    }
    return true;
}

Integer parse_integer(std::string_view s) {
    if (!valid_integer(s)) {
        throw std::invalid_argument("malformed integer: '" + std::string(s) + "'");
    }
    if (s.front() == '+') {
        s.remove_prefix(1);
    }
    return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text));
    }
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) {
        throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational make_rational(long num, long den) {
    if (den == 0) {
        throw std::invalid_argument("zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Integer floor_root(const Integer& n, unsigned long k) {
    if (n < 0) {
        throw std::invalid_argument("floor_root of a negative number");
    }
    Integer r;
    mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

Rational root_lower_bound(const Rational& q, unsigned long k, unsigned long bits) {
    if (q < 0) {
        throw std::invalid_argument("root_lower_bound of a negative number");
    }
    // floor((num * 2^(bits*k) / den)^(1/k)) / 2^bits
    Integer scaled = q.get_num();
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), bits * k);
    Integer quotient = scaled / q.get_den();
    Integer r = floor_root(quotient, k);
    Integer den = 1;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
    Rational out(r, den);
    out.canonicalize();
    return out;
}

Rational pow(const Rational& q, unsigned long e) {
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), q.get_num_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), q.get_den_mpz_t(), e);
    out.canonicalize();
    return out;
}

}  // namespace semilinear
