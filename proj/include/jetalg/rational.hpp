#ifndef JETALG_RATIONAL_HPP
#define JETALG_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace jetalg {

// Exact rational coefficients. All arithmetic in the library is over Q;
// fixed-width integers never appear in a coefficient path.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Integer factorial(int n) {
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

inline Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

} // namespace jetalg

#endif
