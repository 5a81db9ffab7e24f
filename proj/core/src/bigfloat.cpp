#include "hypsum/bigfloat.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace hypsum {

BigFloat BigFloat::from_long(long x, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_si(r.v_, x, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_double(double x, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_d(r.v_, x, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_rational(const Rational& q, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
    return r;
}

static mpfr_prec_t join(const BigFloat& a, const BigFloat& b) {
    return std::max(a.precision(), b.precision());
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join(a, b));
    mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join(a, b));
    mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join(a, b));
    mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join(a, b));
    mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator-() const {
    BigFloat r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::abs() const {
    BigFloat r(precision());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::sqrt() const {
    BigFloat r(precision());
    mpfr_sqrt(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::exp() const {
    BigFloat r(precision());
    mpfr_exp(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::log() const {
    BigFloat r(precision());
    mpfr_log(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pow_si(long e) const {
    BigFloat r(precision());
    mpfr_pow_si(r.v_, v_, e, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pow(const BigFloat& e) const {
    BigFloat r(join(*this, e));
    mpfr_pow(r.v_, v_, e.raw(), MPFR_RNDN);
    return r;
}

std::string BigFloat::str(int digits) const {
    char fmt[32];
    std::snprintf(fmt, sizeof(fmt), "%%.%dRg", digits);
    char* out = nullptr;
    mpfr_asprintf(&out, fmt, v_);
    std::string s(out);
    mpfr_free_str(out);
    return s;
}

BigFloat pi_value(mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

BigFloat sin_pi(const BigFloat& x) {
    mpfr_prec_t prec = x.precision();
    // Reduce mod 2 exactly, then sin(pi*r) with r in [-1, 1].
    BigFloat two = BigFloat::from_long(2, prec);
    BigFloat r(prec);
    mpfr_remainder(r.raw(), x.raw(), two.raw(), MPFR_RNDN);
    BigFloat arg = pi_value(prec) * r;
    BigFloat out(prec);
    mpfr_sin(out.raw(), arg.raw(), MPFR_RNDN);
    return out;
}

} // namespace hypsum
