#pragma once

#include <gmpxx.h>

#include <string>

namespace wedgelab {

// Exact rational coefficients. All arithmetic in the library is exact; there
// is no floating point anywhere.
using Rational = mpq_class;
using Integer = mpz_class;

// mpq_class(n, d) does not canonicalize on its own.
inline Rational rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace wedgelab
