#pragma once

#include "hypsum/polynomial.hpp"

namespace hypsum {

// Quotient of polynomials in canonical form: numerator and denominator
// coprime, denominator monic under the global lexicographic order.  Equality
// of values is equality of representations.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Rational(1)) {}
    RationalFunction(const Polynomial& p) : num_(p), den_(Rational(1)) {}
    RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}
    RationalFunction(long c) : num_(c), den_(Rational(1)) {}
    RationalFunction(const Polynomial& num, const Polynomial& den);

    static RationalFunction variable(const std::string& name) {
        return RationalFunction(Polynomial::variable(name));
    }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const { return num_.constant_value() / den_.constant_value(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool depends_on(const std::string& var) const {
        return num_.depends_on(var) || den_.depends_on(var);
    }

    RationalFunction operator-() const;
    RationalFunction inverse() const; // requires nonzero
    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    RationalFunction pow(int e) const;

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }

    RationalFunction substitute(const std::string& var, const Polynomial& value) const;
    RationalFunction shift(const std::string& var, const Rational& delta) const;
    // Exact evaluation; throws PoleError when the denominator vanishes.
    Rational eval(const std::map<std::string, Rational>& assignment) const;

    int degree_diff(const std::string& var) const {
        return num_.degree(var) - den_.degree(var);
    }

    std::string str() const;

private:
    Polynomial num_, den_;
    void normalize();
};

} // namespace hypsum
