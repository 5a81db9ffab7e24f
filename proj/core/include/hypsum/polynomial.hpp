#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hypsum/rational.hpp"

namespace hypsum {

// Global variable order: n, then k, then everything else by name.  The
// canonical monomial order is lexicographic with this variable order,
// earlier variables being more significant.
int variable_rank(const std::string& name);
bool variable_less(const std::string& a, const std::string& b);

// Sparse multivariate polynomial over Q.  Term variables (n, k) and symbolic
// parameters share one exponent vector.  Canonical form: no zero
// coefficients, no unused variables.
class Polynomial {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Rational>;

    Polynomial() = default; // zero
    explicit Polynomial(const Rational& c);
    explicit Polynomial(long c);

    static Polynomial variable(const std::string& name);
    static Polynomial constant(const Rational& c) { return Polynomial(c); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return vars_.empty(); }
    bool is_one() const;
    // Value of a constant polynomial (zero polynomial gives 0).
    Rational constant_value() const;

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool depends_on(const std::string& var) const;
    std::size_t term_count() const { return terms_.size(); }

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    Polynomial operator*(const Rational& c) const;
    Polynomial pow(int e) const; // e >= 0

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }
    // Deterministic total order (for canonical sorting of containers).
    static int compare(const Polynomial& a, const Polynomial& b);

    // Leading term under the global lexicographic order.
    std::pair<Exponents, Rational> leading_term() const; // requires nonzero
    Rational leading_coefficient() const;                // requires nonzero
    // Divide by the leading coefficient.
    Polynomial monic() const;

    int degree(const std::string& var) const; // -1 for the zero polynomial
    int total_degree() const;
    // Coefficient of var^power, a polynomial in the remaining variables.
    Polynomial coeff_of(const std::string& var, int power) const;
    Polynomial leading_coeff_in(const std::string& var) const;
    // Coefficients [c0..cd] with p = sum ci * var^i.
    std::vector<Polynomial> univariate_coeffs(const std::string& var) const;
    static Polynomial from_univariate(const std::string& var,
                                      const std::vector<Polynomial>& coeffs);

    Polynomial substitute(const std::string& var, const Polynomial& value) const;
    // var -> var + delta
    Polynomial shift(const std::string& var, const Rational& delta) const;
    Rational eval(const std::map<std::string, Rational>& assignment) const;
    // Evaluate the variables present in point, keep the rest (single pass).
    Polynomial eval_partial(const std::map<std::string, Rational>& point) const;

    // Positive rational c such that p/c has coprime integer coefficients.
    Rational rational_content() const; // requires nonzero
    // p / rational_content(), sign preserved.
    Polynomial primitive_rational() const;

    // Exact division; nullopt when b does not divide a.
    static std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

    std::string str() const;

private:
    std::vector<std::string> vars_; // sorted by variable_less, unique
    TermMap terms_;                 // exponent vectors aligned with vars_

    void normalize();
    Polynomial reindexed(const std::vector<std::string>& new_vars) const;
    friend Polynomial align_add(const Polynomial&, const Polynomial&, int sign);
    friend Polynomial align_mul(const Polynomial&, const Polynomial&);
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

// GCD, canonically normalized (monic under the global order); gcd(0,0) = 0.
Polynomial poly_gcd(const Polynomial& p, const Polynomial& q);

// Resultant with respect to var, convention
//   res(p, q) = lc(p)^deg(q) * prod_{p(alpha)=0} q(alpha),
// computed as the Sylvester determinant by fraction-free elimination.
// Both inputs constant in var gives 1.
Polynomial resultant(const Polynomial& p, const Polynomial& q, const std::string& var);

// All integers j >= 0 with gcd(q(k), s(k+j)) nonconstant, via integer roots
// of res_k(q(k), s(k+j)) in j.  Parameters are allowed in the coefficients;
// only parameter-free nonnegative integer roots qualify.
std::set<long> dispersion_set(const Polynomial& q, const Polynomial& s,
                              const std::string& var);

// Fraction-free determinant (Bareiss) of a square polynomial matrix.
Polynomial determinant(std::vector<std::vector<Polynomial>> m);

} // namespace hypsum
