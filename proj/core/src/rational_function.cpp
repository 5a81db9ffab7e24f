#include "hypsum/rational_function.hpp"

#include "hypsum/errors.hpp"
#include "hypsum/expr.hpp"

namespace hypsum {

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den)
    : num_(num), den_(den) {
    if (den_.is_zero()) throw Error("rational function with zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial(Rational(1));
        return;
    }
    Polynomial g = poly_gcd(num_, den_);
    if (!g.is_one()) {
        num_ = *Polynomial::divide_exact(num_, g);
        den_ = *Polynomial::divide_exact(den_, g);
    }
    Rational lc = den_.leading_coefficient();
    if (lc != 1) {
        Rational inv = Rational(1) / lc;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw Error("inverse of zero rational function");
    RationalFunction r;
    r.num_ = den_;
    r.den_ = num_;
    Rational lc = r.den_.leading_coefficient();
    if (lc != 1) {
        Rational inv = Rational(1) / lc;
        r.num_ = r.num_ * inv;
        r.den_ = r.den_ * inv;
    }
    return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    // Common-denominator form with a gcd to keep intermediates small.
    Polynomial g = poly_gcd(den_, o.den_);
    Polynomial da = *Polynomial::divide_exact(den_, g);
    Polynomial db = *Polynomial::divide_exact(o.den_, g);
    num_ = num_ * db + o.num_ * da;
    den_ = den_ * db;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
    return *this += -o;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    // Cross-cancel before multiplying.
    Polynomial g1 = poly_gcd(num_, o.den_);
    Polynomial g2 = poly_gcd(o.num_, den_);
    Polynomial n1 = *Polynomial::divide_exact(num_, g1);
    Polynomial d2 = *Polynomial::divide_exact(o.den_, g1);
    Polynomial n2 = *Polynomial::divide_exact(o.num_, g2);
    Polynomial d1 = *Polynomial::divide_exact(den_, g2);
    num_ = n1 * n2;
    den_ = d1 * d2;
    if (num_.is_zero()) {
        den_ = Polynomial(Rational(1));
        return *this;
    }
    Rational lc = den_.leading_coefficient();
    if (lc != 1) {
        Rational inv = Rational(1) / lc;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    return *this *= o.inverse();
}

RationalFunction RationalFunction::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    RationalFunction r(Rational(1));
    RationalFunction base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

RationalFunction RationalFunction::substitute(const std::string& var,
                                              const Polynomial& value) const {
    if (!depends_on(var)) return *this;
    return RationalFunction(num_.substitute(var, value), den_.substitute(var, value));
}

RationalFunction RationalFunction::shift(const std::string& var, const Rational& delta) const {
    if (delta == 0) return *this;
    return substitute(var, Polynomial::variable(var) + Polynomial(delta));
}

Rational RationalFunction::eval(const std::map<std::string, Rational>& assignment) const {
    Rational d = den_.eval(assignment);
    if (d == 0) throw PoleError("rational function pole");
    return num_.eval(assignment) / d;
}

std::string RationalFunction::str() const { return rf_to_string(*this); }

} // namespace hypsum
