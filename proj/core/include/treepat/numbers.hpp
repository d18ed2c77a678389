#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "treepat/errors.hpp"

namespace treepat {

using BigInt = mpz_class;

// Arbitrary-precision rational, always reduced with positive denominator.
// GMP's mpq_class maintains canonical form through arithmetic; the helpers
// below canonicalize anything built from raw parts.
using Rational = mpq_class;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rational_from_string(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0)
        throw ParseError("invalid rational '" + text + "'", 0);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const BigInt& z) { return z.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

BigInt binomial(std::int64_t n, std::int64_t k);
BigInt catalan(std::int64_t n);

}  // namespace treepat
