#pragma once

#include <gmpxx.h>
#include <string>

namespace hypsum {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline bool is_nonpositive_integer(const Rational& r) {
    return is_integer(r) && r <= 0;
}

// r^e for integer e (e < 0 requires r != 0).
Rational rational_pow(const Rational& r, long e);

std::string rational_to_string(const Rational& r);

} // namespace hypsum
