#pragma once

#include <gmpxx.h>

#include <string>

namespace paraboson {

// All scalar arithmetic is exact. Rationals are kept canonical
// (reduced, positive denominator) by the underlying GMP type.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational parse_rational(const std::string& s) {
    Rational q(s);
    q.canonicalize();
    return q;
}

// "num/den" for non-unit denominators, plain "num" otherwise.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Integer factorial(unsigned long n) {
    Integer z;
    mpz_fac_ui(z.get_mpz_t(), n);
    return z;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer z;
    mpz_bin_uiui(z.get_mpz_t(), n, k);
    return z;
}

// (x)_k = x (x+1) ... (x+k-1), with (x)_0 = 1.
inline Rational pochhammer(const Rational& x, unsigned k) {
    Rational r = 1;
    for (unsigned t = 0; t < k; ++t) r *= x + t;
    return r;
}

// [x]_2: parity of x in {0,1}, defined for negative arguments too.
inline long parity2(long x) {
    long r = x % 2;
    return r < 0 ? r + 2 : r;
}

}  // namespace paraboson
