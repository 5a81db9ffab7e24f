#include <doctest.h>

#include <random>

#include "hypsum/gamma.hpp"

using namespace hypsum;

namespace {

bool close_rel(const BigFloat& x, const BigFloat& y, const BigFloat& tol) {
    return cmp((x - y).abs(), tol * y.abs()) <= 0;
}

} // namespace

TEST_CASE("gamma: known values") {
    PrecisionConfig cfg;
    const auto w = cfg.working_bits();
    BigFloat tol = cfg.tolerance();

    BigFloat ghalf = gamma_hp(BigFloat::from_rational(Rational(1, 2), w), cfg);
    CHECK(close_rel(ghalf * ghalf, pi_value(w), tol));

    BigFloat g5 = gamma_hp(BigFloat::from_long(5, w), cfg);
    CHECK(close_rel(g5, BigFloat::from_long(24, w), tol));

    // Kummer's closed form at a=1, b=1/2 reduces to pi/4.
    BigFloat v = gamma_hp(BigFloat::from_rational(Rational(3, 2), w), cfg);
    BigFloat rhs = v * v /
                   (gamma_hp(BigFloat::from_long(2, w), cfg) * gamma_hp(BigFloat::from_long(1, w), cfg));
    CHECK(close_rel(rhs, pi_value(w) / BigFloat::from_long(4, w), tol));
}

TEST_CASE("gamma: poles throw") {
    PrecisionConfig cfg;
    CHECK_THROWS_AS(gamma_hp(BigFloat::from_long(0, 128), cfg), PoleError);
    CHECK_THROWS_AS(gamma_hp(BigFloat::from_long(-3, 128), cfg), PoleError);
    CHECK_NOTHROW(gamma_hp(BigFloat::from_rational(Rational(-7, 2), 128), cfg));
}

TEST_CASE("gamma: recurrence Gamma(x+1) = x Gamma(x) on random points") {
    PrecisionConfig cfg;
    const auto w = cfg.working_bits();
    BigFloat tol = cfg.tolerance();
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> num(1, 50 * 16);
    for (int i = 0; i < 1000; ++i) {
        BigFloat x = BigFloat::from_rational(Rational(num(rng), 16), w);
        BigFloat lhs = gamma_hp(x + BigFloat::from_long(1, w), cfg);
        BigFloat rhs = x * gamma_hp(x, cfg);
        CHECK(close_rel(lhs, rhs, tol));
    }
}

TEST_CASE("gamma: agrees with the library gamma at scattered points") {
    PrecisionConfig cfg;
    const auto w = cfg.working_bits();
    BigFloat tol = cfg.tolerance();
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<long> num(-400, 400);
    for (int i = 0; i < 100; ++i) {
        Rational q(num(rng), 8);
        q.canonicalize();
        if (is_nonpositive_integer(q)) continue;
        BigFloat x = BigFloat::from_rational(q, w);
        BigFloat mine = gamma_hp(x, cfg);
        BigFloat ref(w);
        mpfr_gamma(ref.raw(), x.raw(), MPFR_RNDN);
        CHECK(close_rel(mine, ref, tol));
    }
}

TEST_CASE("gamma: doubling the mantissa shrinks the error by 2^16 or better") {
    PrecisionConfig lo, hi, ref;
    lo.mantissa_bits = 64;
    hi.mantissa_bits = 128;
    ref.mantissa_bits = 512;
    BigFloat x = BigFloat::from_rational(Rational(73, 10), ref.working_bits());
    BigFloat exact = gamma_hp(x, ref);
    auto err = [&](const PrecisionConfig& cfg) {
        BigFloat xx = BigFloat::from_rational(Rational(73, 10), cfg.working_bits());
        BigFloat diff = (gamma_hp(xx, cfg) - exact).abs() / exact;
        return diff;
    };
    BigFloat e_lo = err(lo), e_hi = err(hi);
    // e_hi * 2^16 <= e_lo (allowing e_hi = 0)
    BigFloat scaled = e_hi * BigFloat::from_long(65536, ref.working_bits());
    CHECK(cmp(scaled, e_lo) <= 0);
}

TEST_CASE("gamma: exact integer factorials") {
    CHECK(gamma_exact_integer(1) == 1);
    CHECK(gamma_exact_integer(5) == 24);
    CHECK(gamma_exact_integer(8) == 5040);
    CHECK_THROWS_AS(gamma_exact_integer(0), PoleError);
}
