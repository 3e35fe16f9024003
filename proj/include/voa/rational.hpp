#pragma once

#include <gmpxx.h>
#include <string>
#include <stdexcept>

namespace voa {

// Exact rational scalar. mpq_class keeps values canonical (reduced, positive
// denominator) as long as construction goes through the helpers below.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational parse_rational(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("parse_rational: bad literal '" + s + "'");
    q.canonicalize();
    return q;
}

inline Rational pow_rational(const Rational& base, unsigned e) {
    Rational acc = 1;
    for (unsigned i = 0; i < e; ++i) acc *= base;
    return acc;
}

// Generalized binomial C(x, m) = x(x-1)...(x-m+1)/m! for rational x.
inline Rational gen_binomial(const Rational& x, unsigned m) {
    Rational acc = 1;
    Rational f = x;
    for (unsigned i = 0; i < m; ++i) {
        acc *= f;
        acc /= static_cast<long>(i + 1);
        f -= 1;
    }
    return acc;
}

} // namespace voa
