#include "hypsum/hyperterm.hpp"

#include <algorithm>
#include <sstream>

#include "hypsum/errors.hpp"
#include "hypsum/expr.hpp"

namespace hypsum {

Polynomial AffineArg::as_polynomial() const {
    Polynomial p = constant;
    if (coeff_n != 0) p += Polynomial::variable("n") * Rational(coeff_n);
    if (coeff_k != 0) p += Polynomial::variable("k") * Rational(coeff_k);
    return p;
}

int AffineArg::compare(const AffineArg& a, const AffineArg& b) {
    if (a.coeff_n != b.coeff_n) return a.coeff_n < b.coeff_n ? -1 : 1;
    if (a.coeff_k != b.coeff_k) return a.coeff_k < b.coeff_k ? -1 : 1;
    return Polynomial::compare(a.constant, b.constant);
}

HyperTerm::HyperTerm() : prefactor_(Rational(1)) {}

HyperTerm HyperTerm::one() { return HyperTerm(); }

void HyperTerm::canonicalize() {
    std::sort(gammas_.begin(), gammas_.end(), [](const GammaFactor& a, const GammaFactor& b) {
        return AffineArg::compare(a.arg, b.arg) < 0;
    });
    std::vector<GammaFactor> merged;
    for (const auto& gf : gammas_) {
        if (!merged.empty() && merged.back().arg == gf.arg)
            merged.back().exponent += gf.exponent;
        else
            merged.push_back(gf);
        if (!merged.empty() && merged.back().exponent == 0) merged.pop_back();
    }
    gammas_ = std::move(merged);

    std::sort(const_bases_.begin(), const_bases_.end(), [](const ConstBase& a, const ConstBase& b) {
        return a.base < b.base;
    });
    std::vector<ConstBase> mb;
    for (const auto& cb : const_bases_) {
        if (cb.base <= 0) throw UnsupportedError("constant base must be positive");
        if (!mb.empty() && mb.back().base == cb.base)
            mb.back().exponent += cb.exponent;
        else
            mb.push_back(cb);
        if (!mb.empty() && (mb.back().exponent.is_zero() || mb.back().base == 1)) mb.pop_back();
    }
    const_bases_ = std::move(mb);
}

HyperTerm HyperTerm::from_pfq(const std::vector<Polynomial>& upper,
                              const std::vector<Polynomial>& lower, const Rational& z) {
    HyperTerm t;
    t.base_ = z;
    for (const auto& u : upper) {
        t.gammas_.push_back({AffineArg{0, 1, u}, 1});
        t.gammas_.push_back({AffineArg{0, 0, u}, -1});
    }
    for (const auto& l : lower) {
        if (l.is_constant() && is_nonpositive_integer(l.constant_value()))
            throw PoleError("lower parameter is a nonpositive integer: " + l.str());
        t.gammas_.push_back({AffineArg{0, 0, l}, 1});
        t.gammas_.push_back({AffineArg{0, 1, l}, -1});
    }
    t.gammas_.push_back({AffineArg{0, 1, Polynomial(Rational(1))}, -1}); // 1/k!
    t.canonicalize();
    return t;
}

HyperTerm HyperTerm::gamma_product(const std::vector<GammaFactor>& gammas) {
    HyperTerm t;
    t.gammas_ = gammas;
    t.canonicalize();
    return t;
}

HyperTerm HyperTerm::with_base(const Rational& z) const {
    HyperTerm t = *this;
    t.base_ = z;
    return t;
}

HyperTerm HyperTerm::with_prefactor(const RationalFunction& p) const {
    HyperTerm t = *this;
    t.prefactor_ = p;
    return t;
}

HyperTerm HyperTerm::times_gamma(const AffineArg& arg, int exponent) const {
    HyperTerm t = *this;
    t.gammas_.push_back({arg, exponent});
    t.canonicalize();
    return t;
}

HyperTerm HyperTerm::times_const_base(const Rational& base, const Polynomial& exponent) const {
    HyperTerm t = *this;
    t.const_bases_.push_back({base, exponent});
    t.canonicalize();
    return t;
}

HyperTerm HyperTerm::operator*(const HyperTerm& o) const {
    HyperTerm t = *this;
    t.base_ *= o.base_;
    t.gammas_.insert(t.gammas_.end(), o.gammas_.begin(), o.gammas_.end());
    t.prefactor_ *= o.prefactor_;
    t.const_bases_.insert(t.const_bases_.end(), o.const_bases_.begin(), o.const_bases_.end());
    t.canonicalize();
    return t;
}

HyperTerm HyperTerm::inverse() const {
    if (base_ == 0) throw Error("inverse of term with zero base");
    HyperTerm t;
    t.base_ = Rational(1) / base_;
    t.gammas_ = gammas_;
    for (auto& gf : t.gammas_) gf.exponent = -gf.exponent;
    t.prefactor_ = prefactor_.inverse();
    t.const_bases_ = const_bases_;
    for (auto& cb : t.const_bases_) cb.exponent = -cb.exponent;
    t.canonicalize();
    return t;
}

bool HyperTerm::depends_on_n() const {
    for (const auto& gf : gammas_)
        if (gf.arg.coeff_n != 0) return true;
    if (prefactor_.depends_on("n")) return true;
    for (const auto& cb : const_bases_)
        if (cb.exponent.depends_on("n")) return true;
    return false;
}

std::string HyperTerm::str() const {
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
        if (!first) os << " * ";
        first = false;
    };
    if (base_ != 1) {
        sep();
        os << "(" << rational_to_string(base_) << ")^k";
    }
    std::ostringstream num, den;
    bool any_num = false, any_den = false;
    for (const auto& gf : gammas_) {
        std::ostringstream& side = gf.exponent > 0 ? num : den;
        bool& any = gf.exponent > 0 ? any_num : any_den;
        if (any) side << " ";
        side << "G(" << poly_to_string(gf.arg.as_polynomial()) << ")";
        int mag = gf.exponent > 0 ? gf.exponent : -gf.exponent;
        if (mag != 1) side << "^" << mag;
        any = true;
    }
    if (any_num || any_den) {
        sep();
        os << (any_num ? num.str() : "1");
        if (any_den) os << " / [" << den.str() << "]";
    }
    if (!prefactor_.is_one()) {
        sep();
        os << "(" << prefactor_.str() << ")";
    }
    for (const auto& cb : const_bases_) {
        sep();
        os << rational_to_string(cb.base) << "^(" << poly_to_string(cb.exponent) << ")";
    }
    if (first) os << "1";
    return os.str();
}

// ---------------------------------------------------------------------------

namespace {

long integer_coefficient_of(const Polynomial& p, const std::string& var,
                            const std::string& what) {
    if (!p.depends_on(var)) return 0;
    if (p.degree(var) > 1)
        throw UnsupportedError("improper term: " + what + " nonlinear in " + var);
    Polynomial c = p.coeff_of(var, 1);
    if (!c.is_constant())
        throw UnsupportedError("improper term: " + what + " has non-constant coefficient of " + var);
    Rational rc = c.constant_value();
    if (!is_integer(rc))
        throw UnsupportedError("improper term: " + what + " has non-integer coefficient of " + var);
    return rc.get_num().get_si();
}

} // namespace

RationalFunction shift_quotient(const HyperTerm& t, const std::string& var) {
    RationalFunction result{Rational(1)};
    for (const auto& gf : t.gammas()) {
        long c;
        if (var == "n")
            c = gf.arg.coeff_n;
        else if (var == "k")
            c = gf.arg.coeff_k;
        else
            c = integer_coefficient_of(gf.arg.constant, var, "Gamma argument");
        if (c == 0) continue;
        Polynomial argpoly = gf.arg.as_polynomial();
        Polynomial prod(Rational(1));
        if (c > 0) {
            for (long i = 0; i < c; ++i) prod *= argpoly + Polynomial(Rational(i));
            result *= RationalFunction(prod).pow(gf.exponent);
        } else {
            for (long i = 1; i <= -c; ++i) prod *= argpoly - Polynomial(Rational(i));
            result *= RationalFunction(prod).pow(-gf.exponent);
        }
    }
    if (var == "k" && t.base() != 1) result *= RationalFunction(t.base());
    if (t.prefactor().depends_on(var))
        result *= t.prefactor().shift(var, 1) / t.prefactor();
    for (const auto& cb : t.const_bases()) {
        long e = integer_coefficient_of(cb.exponent, var, "constant-base exponent");
        if (e != 0) result *= RationalFunction(rational_pow(cb.base, e));
    }
    return result;
}

QuotientFactors shift_quotient_factors(const HyperTerm& t, const std::string& var) {
    QuotientFactors out;
    Rational scalar(1);
    for (const auto& gf : t.gammas()) {
        long c;
        if (var == "n")
            c = gf.arg.coeff_n;
        else if (var == "k")
            c = gf.arg.coeff_k;
        else
            c = integer_coefficient_of(gf.arg.constant, var, "Gamma argument");
        if (c == 0) continue;
        Polynomial argpoly = gf.arg.as_polynomial();
        auto& mine = (c > 0) == (gf.exponent > 0) ? out.num : out.den;
        int mult = gf.exponent > 0 ? gf.exponent : -gf.exponent;
        if (c > 0) {
            for (long i = 0; i < c; ++i)
                for (int m = 0; m < mult; ++m) mine.push_back(argpoly + Polynomial(Rational(i)));
        } else {
            for (long i = 1; i <= -c; ++i)
                for (int m = 0; m < mult; ++m) mine.push_back(argpoly - Polynomial(Rational(i)));
        }
    }
    if (var == "k" && t.base() != 1) scalar *= t.base();
    if (t.prefactor().depends_on(var)) {
        RationalFunction shifted = t.prefactor().shift(var, 1);
        out.num.push_back(shifted.num());
        out.den.push_back(shifted.den());
        out.num.push_back(t.prefactor().den());
        out.den.push_back(t.prefactor().num());
    }
    for (const auto& cb : t.const_bases()) {
        long e = integer_coefficient_of(cb.exponent, var, "constant-base exponent");
        if (e != 0) scalar *= rational_pow(cb.base, e);
    }
    if (scalar != 1) out.num.push_back(Polynomial(scalar));
    return out;
}

HyperTerm substitute_shift(const HyperTerm& t, const std::string& param, int step) {
    bool present = false;
    std::vector<GammaFactor> gammas = t.gammas();
    for (auto& gf : gammas) {
        if (!gf.arg.constant.depends_on(param)) continue;
        present = true;
        Polynomial c = gf.arg.constant.coeff_of(param, 1);
        if (gf.arg.constant.degree(param) > 1 || !c.is_constant())
            throw UnsupportedError("substitute_shift: Gamma argument nonlinear in " + param);
        Rational add = c.constant_value() * step;
        if (!is_integer(add))
            throw UnsupportedError("substitute_shift: step " + std::to_string(step) +
                                   " gives non-integer n-coefficient for " + param);
        gf.arg.coeff_n += int(add.get_num().get_si());
    }
    Polynomial replacement =
        Polynomial::variable(param) + Polynomial::variable("n") * Rational(step);
    RationalFunction pref = t.prefactor();
    if (pref.depends_on(param)) {
        present = true;
        pref = pref.substitute(param, replacement);
    }
    std::vector<ConstBase> bases = t.const_bases();
    for (auto& cb : bases) {
        if (!cb.exponent.depends_on(param)) continue;
        present = true;
        cb.exponent = cb.exponent.substitute(param, replacement);
    }
    if (!present) return t;
    HyperTerm out = HyperTerm::gamma_product(gammas).with_base(t.base()).with_prefactor(pref);
    for (const auto& cb : bases) out = out.times_const_base(cb.base, cb.exponent);
    return out;
}

HyperTerm specialize(const HyperTerm& t, const std::string& var, const Rational& value) {
    std::vector<GammaFactor> gammas = t.gammas();
    Polynomial vp(value);
    for (auto& gf : gammas) {
        if (var == "n") {
            gf.arg.constant += Polynomial(Rational(gf.arg.coeff_n) * value);
            gf.arg.coeff_n = 0;
        } else if (var == "k") {
            gf.arg.constant += Polynomial(Rational(gf.arg.coeff_k) * value);
            gf.arg.coeff_k = 0;
        } else {
            gf.arg.constant = gf.arg.constant.substitute(var, vp);
        }
    }
    RationalFunction pref = t.prefactor().substitute(var, vp);
    HyperTerm out = HyperTerm::gamma_product(gammas).with_base(t.base()).with_prefactor(pref);
    for (auto cb : t.const_bases()) {
        cb.exponent = cb.exponent.substitute(var, vp);
        out = out.times_const_base(cb.base, cb.exponent);
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

BigFloat eval_poly_bf(const Polynomial& p, const std::map<std::string, BigFloat>& asgn,
                      mpfr_prec_t prec) {
    BigFloat total(prec);
    for (const auto& [e, c] : p.terms()) {
        BigFloat t = BigFloat::from_rational(c, prec);
        for (std::size_t i = 0; i < p.vars().size(); ++i) {
            if (e[i] == 0) continue;
            auto it = asgn.find(p.vars()[i]);
            if (it == asgn.end()) throw Error("evaluate: no value for " + p.vars()[i]);
            t *= it->second.pow_si(e[i]);
        }
        total += t;
    }
    return total;
}

} // namespace

BigFloat evaluate(const HyperTerm& t, const std::map<std::string, BigFloat>& assignment,
                  long k, const PrecisionConfig& cfg) {
    const mpfr_prec_t w = cfg.working_bits();
    std::map<std::string, BigFloat> asgn = assignment;
    asgn.insert_or_assign("k", BigFloat::from_long(k, w));
    BigFloat result = BigFloat::from_long(1, w);
    for (const auto& gf : t.gammas()) {
        BigFloat x = eval_poly_bf(gf.arg.as_polynomial(), asgn, w);
        result *= gamma_hp(x, cfg).pow_si(gf.exponent);
    }
    if (t.base() != 1) result *= BigFloat::from_rational(rational_pow(t.base(), k), w);
    if (!t.prefactor().is_one()) {
        BigFloat den = eval_poly_bf(t.prefactor().den(), asgn, w);
        if (den.is_zero()) throw PoleError("prefactor pole");
        result *= eval_poly_bf(t.prefactor().num(), asgn, w) / den;
    }
    for (const auto& cb : t.const_bases()) {
        BigFloat e = eval_poly_bf(cb.exponent, asgn, w);
        BigFloat b = BigFloat::from_rational(cb.base, w);
        result *= (e * b.log()).exp();
    }
    return result;
}

std::optional<Rational> evaluate_exact(const HyperTerm& t,
                                       const std::map<std::string, Rational>& assignment,
                                       long k) {
    if (k < 0) return std::nullopt;
    // Gamma factors must cancel pairwise at k = 0, or land on positive
    // integers where Gamma is an exact factorial.
    HyperTerm at0 = specialize(t, "k", Rational(0));
    Rational value(1);
    std::map<std::string, Rational> asgn = assignment;
    asgn["k"] = Rational(0);
    for (const auto& gf : at0.gammas()) {
        Rational x;
        try {
            x = gf.arg.as_polynomial().eval(asgn);
        } catch (const Error&) {
            return std::nullopt;
        }
        if (!is_integer(x) || x <= 0) return std::nullopt;
        value *= rational_pow(gamma_exact_integer(x.get_num().get_si()), gf.exponent);
    }
    try {
        value *= t.prefactor().eval(asgn);
    } catch (const PoleError&) {
        return std::nullopt;
    }
    for (const auto& cb : t.const_bases()) {
        Rational e = cb.exponent.eval(asgn);
        if (!is_integer(e)) return std::nullopt;
        value *= rational_pow(cb.base, e.get_num().get_si());
    }
    if (k == 0) return value;
    RationalFunction ratio = shift_quotient(t, "k");
    for (long i = 0; i < k; ++i) {
        asgn["k"] = Rational(i);
        Rational den = ratio.den().eval(asgn);
        if (den == 0) return std::nullopt;
        value *= ratio.num().eval(asgn) / den;
        if (value == 0) return Rational(0);
    }
    return value;
}

} // namespace hypsum
