#pragma once

#include "hypsum/bigfloat.hpp"

namespace hypsum {

struct PrecisionConfig {
    long mantissa_bits = 128; // >= 64
    long k_max = 100000;      // partial-sum cutoff

    // Default acceptance tolerance: 2^(-mantissa/2).
    BigFloat tolerance() const {
        BigFloat t = BigFloat::from_long(1, working_bits());
        mpfr_mul_2si(t.raw(), t.raw(), -mantissa_bits / 2, MPFR_RNDN);
        return t;
    }
    long working_bits() const { return mantissa_bits + 64; }
};

// Gamma via the Spouge series, whose a-term truncation carries the explicit
// relative error bound a^(-1/2) * (2*pi)^(-(a+1/2)); a is chosen from the
// config so the bound sits far below the tolerance.  Reflection handles
// x < 1/2.  Throws PoleError at nonpositive integers.
BigFloat gamma_hp(const BigFloat& x, const PrecisionConfig& cfg);

// Exact Gamma(x) for a positive integer x, i.e. (x-1)!.
Rational gamma_exact_integer(long x);

} // namespace hypsum
