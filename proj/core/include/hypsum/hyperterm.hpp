#pragma once

#include <map>
#include <string>
#include <vector>

#include "hypsum/condition.hpp"
#include "hypsum/gamma.hpp"
#include "hypsum/rational_function.hpp"

namespace hypsum {

// Affine Gamma argument c_n*n + c_k*k + constant(parameters).
struct AffineArg {
    int coeff_n = 0;
    int coeff_k = 0;
    Polynomial constant; // parameters only, rational coefficients

    Polynomial as_polynomial() const;
    friend bool operator==(const AffineArg& a, const AffineArg& b) {
        return a.coeff_n == b.coeff_n && a.coeff_k == b.coeff_k && a.constant == b.constant;
    }
    static int compare(const AffineArg& a, const AffineArg& b);
};

struct GammaFactor {
    AffineArg arg;
    int exponent = 1; // sign: numerator/denominator; magnitude: multiplicity
    friend bool operator==(const GammaFactor& a, const GammaFactor& b) {
        return a.arg == b.arg && a.exponent == b.exponent;
    }
};

// Symbolic constant base^exponent, e.g. 2^b.
struct ConstBase {
    Rational base;       // positive
    Polynomial exponent; // parameters (and possibly k)
    friend bool operator==(const ConstBase& a, const ConstBase& b) {
        return a.base == b.base && a.exponent == b.exponent;
    }
};

// A proper hypergeometric term: z^k times a signed product of Gamma factors
// with affine arguments, a rational prefactor in (n, k), and symbolic
// constant powers.  Construction merges equal arguments and drops zero
// exponents, so equal terms have identical representations.
class HyperTerm {
public:
    HyperTerm();

    static HyperTerm one();
    // prod (u_i)_k / prod (l_j)_k * z^k / k! in Gamma form.
    static HyperTerm from_pfq(const std::vector<Polynomial>& upper,
                              const std::vector<Polynomial>& lower, const Rational& z);
    static HyperTerm gamma_product(const std::vector<GammaFactor>& gammas);

    const Rational& base() const { return base_; }
    const std::vector<GammaFactor>& gammas() const { return gammas_; }
    const RationalFunction& prefactor() const { return prefactor_; }
    const std::vector<ConstBase>& const_bases() const { return const_bases_; }

    HyperTerm with_base(const Rational& z) const;
    HyperTerm with_prefactor(const RationalFunction& p) const;
    HyperTerm times_gamma(const AffineArg& arg, int exponent) const;
    HyperTerm times_const_base(const Rational& base, const Polynomial& exponent) const;
    HyperTerm operator*(const HyperTerm& o) const;
    HyperTerm inverse() const; // requires nonzero prefactor
    bool depends_on_n() const;

    friend bool operator==(const HyperTerm& a, const HyperTerm& b) {
        return a.base_ == b.base_ && a.gammas_ == b.gammas_ &&
               a.prefactor_ == b.prefactor_ && a.const_bases_ == b.const_bases_;
    }
    friend bool operator!=(const HyperTerm& a, const HyperTerm& b) { return !(a == b); }

    std::string str() const;

private:
    Rational base_ = 1;                  // z
    std::vector<GammaFactor> gammas_;    // sorted, merged
    RationalFunction prefactor_;         // in n, k, parameters
    std::vector<ConstBase> const_bases_; // sorted by base, merged

    void canonicalize();
};

// T(var+1)/T(var) as a rational function; var is "n", "k" or a parameter
// occurring with integer coefficients in every Gamma argument.  Throws
// UnsupportedError("improper term ...") otherwise.
RationalFunction shift_quotient(const HyperTerm& t, const std::string& var);

// Same quotient as numerator/denominator factor lists (rising linear factors
// kept separate); the product of each list is the quotient's num/den up to
// the cancellations shift_quotient would perform.
struct QuotientFactors {
    std::vector<Polynomial> num, den;
};
QuotientFactors shift_quotient_factors(const HyperTerm& t, const std::string& var);

// Replace param by param + step*n in every Gamma argument (and prefactor);
// the geometric base is untouched.  Throws when a non-integer n-coefficient
// would arise.  Absent parameter: returns the term unchanged.
HyperTerm substitute_shift(const HyperTerm& t, const std::string& param, int step);

// Substitute an exact value for a variable ("n" -> 0 and the like).
HyperTerm specialize(const HyperTerm& t, const std::string& var, const Rational& value);

// Numeric evaluation at k, with all symbols (parameters and n if present)
// assigned.  Throws PoleError at Gamma poles.
BigFloat evaluate(const HyperTerm& t, const std::map<std::string, BigFloat>& assignment,
                  long k, const PrecisionConfig& cfg);

// Exact rational evaluation through the Pochhammer structure; available when
// Gamma factors cancel pairwise at k = 0 and no symbolic constant bases
// remain.  Terms that terminate (Pochhammer of a nonpositive integer) give 0
// beyond the last index.
std::optional<Rational> evaluate_exact(const HyperTerm& t,
                                       const std::map<std::string, Rational>& assignment,
                                       long k);

// A summation theorem sum_k lhs(k) = rhs with rhs a pure Gamma product.
struct TheoremSpec {
    std::string name;
    std::vector<std::string> parameters;
    std::vector<Polynomial> upper, lower;
    Rational z = 1;
    HyperTerm rhs; // Gamma factors only, no k or n dependence
    std::vector<Condition> stated_conditions;

    HyperTerm lhs_term() const { return HyperTerm::from_pfq(upper, lower, z); }
};

} // namespace hypsum
