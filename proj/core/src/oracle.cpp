#include "hypsum/oracle.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "hypsum/asympt.hpp"
#include "hypsum/errors.hpp"
#include "hypsum/expr.hpp"

namespace hypsum {

namespace {

// Substitute all symbols numerically, leaving a univariate function of k
// whose values drive the term recurrence.
struct NumericQuotient {
    std::vector<BigFloat> num_coeffs, den_coeffs; // in k
    BigFloat at(long k, mpfr_prec_t prec, bool numerator) const {
        const auto& cs = numerator ? num_coeffs : den_coeffs;
        BigFloat x = BigFloat::from_long(k, prec);
        BigFloat acc(prec);
        for (std::size_t i = cs.size(); i-- > 0;) acc = acc * x + cs[i];
        return acc;
    }
};

NumericQuotient numeric_quotient(const RationalFunction& r,
                                 const std::map<std::string, BigFloat>& assignment,
                                 mpfr_prec_t prec) {
    NumericQuotient out;
    auto eval_side = [&](const Polynomial& p, std::vector<BigFloat>& coeffs) {
        int d = std::max(0, p.degree("k"));
        coeffs.assign(d + 1, BigFloat(prec));
        for (int i = 0; i <= d; ++i) {
            Polynomial c = p.coeff_of("k", i);
            BigFloat acc(prec);
            for (const auto& [e, q] : c.terms()) {
                BigFloat t = BigFloat::from_rational(q, prec);
                for (std::size_t v = 0; v < c.vars().size(); ++v) {
                    if (e[v] == 0) continue;
                    auto it = assignment.find(c.vars()[v]);
                    if (it == assignment.end())
                        throw Error("numeric quotient: no value for " + c.vars()[v]);
                    t *= it->second.pow_si(e[v]);
                }
                acc += t;
            }
            coeffs[i] = acc;
        }
    };
    eval_side(r.num(), out.num_coeffs);
    eval_side(r.den(), out.den_coeffs);
    return out;
}

// Cohen-Rodriguez Villegas-Zagier acceleration for sum (-1)^j a_j with
// a_j >= 0; the error shrinks like (3+sqrt(8))^(-terms).
BigFloat cvz_alternating(const std::vector<BigFloat>& a, mpfr_prec_t prec) {
    const long n = long(a.size());
    BigFloat d = BigFloat::from_long(3, prec) + BigFloat::from_long(8, prec).sqrt();
    d = d.pow_si(n);
    d = (d + BigFloat::from_long(1, prec) / d) / BigFloat::from_long(2, prec);
    BigFloat b = -BigFloat::from_long(1, prec);
    BigFloat c = -d;
    BigFloat s(prec);
    for (long k = 0; k < n; ++k) {
        c = b - c;
        s += c * a[k];
        // b *= (k+n)(k-n) / ((k+1/2)(k+1))
        b = b * BigFloat::from_long(k + n, prec) * BigFloat::from_long(k - n, prec) /
            (BigFloat::from_rational(Rational(2 * k + 1, 2), prec) *
             BigFloat::from_long(k + 1, prec));
    }
    return s / d;
}

// Levin u-transform from partial sums s_0..s_n and terms t_0..t_n, direct
// formula with exact binomial weights and remainder model
// omega_j = (beta + j) * t_j, beta = 1:
//   e = sum_j (-1)^j C(n,j) (1+j)^(n-1) s_j/omega_j
//     / sum_j (-1)^j C(n,j) (1+j)^(n-1) 1/omega_j.
BigFloat levin_u(const std::vector<BigFloat>& s, const std::vector<BigFloat>& t,
                 mpfr_prec_t prec) {
    const long n = long(s.size()) - 1;
    // The weights C(n,j)(1+j)^(n-1) grow to ~(n+1)^(n-1) and cancel almost
    // completely; compute with enough guard bits to survive that.
    mpfr_prec_t wp = prec + mpfr_prec_t(double(n + 2) * std::log2(double(n + 2))) + 32;
    BigFloat num(wp), den(wp);
    for (long j = 0; j <= n; ++j) {
        BigFloat tj(wp);
        mpfr_set(tj.raw(), t[j].raw(), MPFR_RNDN);
        BigFloat sj(wp);
        mpfr_set(sj.raw(), s[j].raw(), MPFR_RNDN);
        BigFloat omega = BigFloat::from_long(j + 1, wp) * tj;
        if (omega.is_zero()) throw Error("levin: zero remainder estimate");
        Integer binom;
        mpz_bin_uiui(binom.get_mpz_t(), n, j);
        BigFloat weight = BigFloat::from_rational(Rational(binom), wp) *
                          BigFloat::from_long(1 + j, wp).pow_si(n - 1) / omega;
        if (j & 1) weight = -weight;
        num += weight * sj;
        den += weight;
    }
    if (den.is_zero()) throw Error("levin: vanishing denominator");
    BigFloat out(prec);
    BigFloat q = num / den;
    mpfr_set(out.raw(), q.raw(), MPFR_RNDN);
    return out;
}

// Index after which every linear factor of the term stays one sign.
long head_cut(const HyperTerm& t, const std::map<std::string, BigFloat>& assignment,
              mpfr_prec_t prec) {
    long cut = 0;
    auto consider = [&](const BigFloat& root_at) {
        // factor (value + k): negative beyond k > -value
        double v = root_at.to_double();
        long c = v < 0 ? long(-v) + 1 : 0;
        cut = std::max(cut, c);
    };
    for (const auto& gf : t.gammas()) {
        if (gf.arg.coeff_k == 0) continue;
        BigFloat base(prec);
        for (const auto& [e, q] : gf.arg.constant.terms()) {
            BigFloat term = BigFloat::from_rational(q, prec);
            for (std::size_t v = 0; v < gf.arg.constant.vars().size(); ++v) {
                if (e[v] == 0) continue;
                term *= assignment.at(gf.arg.constant.vars()[v]).pow_si(e[v]);
            }
            base += term;
        }
        if (gf.arg.coeff_n != 0) base += assignment.at("n") * BigFloat::from_long(gf.arg.coeff_n, prec);
        consider(base);
    }
    return cut;
}

} // namespace

BigFloat partial_sum(const HyperTerm& t, const std::map<std::string, BigFloat>& assignment,
                     long k_max, const PrecisionConfig& cfg) {
    const mpfr_prec_t w = cfg.working_bits();
    BigFloat term = evaluate(t, assignment, 0, cfg);
    NumericQuotient q = numeric_quotient(shift_quotient(t, "k"), assignment, w);
    BigFloat sum(w), comp(w);
    for (long k = 0;; ++k) {
        // Kahan step
        BigFloat y = term - comp;
        BigFloat snew = sum + y;
        comp = (snew - sum) - y;
        sum = snew;
        if (k == k_max) break;
        BigFloat den = q.at(k, w, false);
        if (den.is_zero()) throw PoleError("partial_sum: pole at k = " + std::to_string(k + 1));
        term = term * q.at(k, w, true) / den;
    }
    return sum;
}

std::optional<Rational> partial_sum_exact(const HyperTerm& t,
                                          const std::map<std::string, Rational>& assignment,
                                          long k_max) {
    auto first = evaluate_exact(t, assignment, 0);
    if (!first) return std::nullopt;
    Rational sum = *first;
    Rational term = *first;
    RationalFunction ratio = shift_quotient(t, "k");
    std::map<std::string, Rational> asgn = assignment;
    for (long k = 0; k < k_max; ++k) {
        if (term == 0) {
            // Terminated: check the quotient stays finite, then we are done.
            break;
        }
        asgn["k"] = Rational(k);
        Rational den = ratio.den().eval(asgn);
        if (den == 0) return std::nullopt;
        term *= ratio.num().eval(asgn) / den;
        sum += term;
    }
    return sum;
}

BigFloat sum_accelerated(const HyperTerm& t, const std::map<std::string, Rational>& point,
                         const PrecisionConfig& cfg) {
    const mpfr_prec_t w = cfg.working_bits();
    const Rational z = t.base();

    auto assignment_at = [&](mpfr_prec_t prec) {
        std::map<std::string, BigFloat> out;
        for (const auto& [name, v] : point) out[name] = BigFloat::from_rational(v, prec);
        return out;
    };
    auto tail_terms = [&](long cut, long count, mpfr_prec_t prec) {
        PrecisionConfig pc;
        pc.mantissa_bits = prec - 64;
        auto asgn = assignment_at(prec);
        NumericQuotient q = numeric_quotient(shift_quotient(t, "k"), asgn, prec);
        std::vector<BigFloat> terms;
        terms.reserve(count);
        BigFloat term = evaluate(t, asgn, cut, pc);
        for (long j = 0; j < count; ++j) {
            terms.push_back(term);
            long k = cut + j;
            BigFloat den = q.at(k, prec, false);
            if (den.is_zero()) throw PoleError("sum: pole at k = " + std::to_string(k + 1));
            term = term * q.at(k, prec, true) / den;
        }
        return terms;
    };

    auto asgn_w = assignment_at(w);
    long cut = head_cut(t, asgn_w, w);
    BigFloat head(w);
    if (cut > 0) head = partial_sum(t, asgn_w, cut - 1, cfg);

    Rational zabs = z < 0 ? Rational(-z) : z;
    // Internal cutoff well below the reporting tolerance.
    BigFloat tol = BigFloat::from_long(1, w);
    mpfr_mul_2si(tol.raw(), tol.raw(), -(cfg.mantissa_bits + 24), MPFR_RNDN);

    if (zabs < 1) {
        // Geometric tail: |t_{k+1}/t_k| -> |z| < 1.
        NumericQuotient q = numeric_quotient(shift_quotient(t, "k"), asgn_w, w);
        BigFloat sum(w), comp(w);
        BigFloat term = evaluate(t, asgn_w, cut, cfg);
        BigFloat zb = BigFloat::from_rational(zabs, w);
        BigFloat geo = BigFloat::from_long(1, w) / (BigFloat::from_long(1, w) - zb);
        for (long k = cut;; ++k) {
            BigFloat y = term - comp;
            BigFloat snew = sum + y;
            comp = (snew - sum) - y;
            sum = snew;
            BigFloat bound = term.abs() * geo;
            if (k > cut + 8 && cmp(bound, tol * (sum.abs() + BigFloat::from_long(1, w))) < 0)
                break;
            if (k - cut > cfg.k_max) throw Error("sum: geometric tail did not converge");
            BigFloat den = q.at(k, w, false);
            if (den.is_zero()) throw PoleError("sum: pole at k = " + std::to_string(k + 1));
            term = term * q.at(k, w, true) / den;
        }
        return head + sum;
    }
    if (z == -1) {
        long n_terms = long(0.40 * double(cfg.mantissa_bits + 64)) + 12;
        mpfr_prec_t wp = w + n_terms + 64;
        auto terms = tail_terms(cut, n_terms, wp);
        // The tail alternates in sign starting at the cut; feed magnitudes.
        int sign0 = terms[0].sign() >= 0 ? 1 : -1;
        std::vector<BigFloat> mags;
        mags.reserve(terms.size());
        for (const auto& x : terms) mags.push_back(x.abs());
        BigFloat tail = cvz_alternating(mags, wp);
        if (sign0 < 0) tail = -tail;
        BigFloat out(w);
        mpfr_set(out.raw(), tail.raw(), MPFR_RNDN);
        return head + out;
    }
    if (z == 1) {
        // Levin u on the tail partial sums; each tier gets the precision its
        // weight growth (n+1)^(n-1) demands, terms re-evaluated exactly.
        BigFloat best(w), prev(w);
        BigFloat best_diff(w);
        bool have_prev = false, have_best = false;
        for (long n : {24L, 36L, 54L, 81L, 121L, 181L}) {
            mpfr_prec_t wp = w + mpfr_prec_t(double(n + 2) * std::log2(double(n + 2))) + 64;
            auto terms = tail_terms(cut, n + 1, wp);
            std::vector<BigFloat> s(n + 1, BigFloat(wp));
            BigFloat acc(wp);
            for (long j = 0; j <= n; ++j) {
                acc += terms[j];
                s[j] = acc;
            }
            BigFloat est_full = levin_u(s, terms, wp);
            BigFloat est(w);
            mpfr_set(est.raw(), est_full.raw(), MPFR_RNDN);
            if (have_prev) {
                BigFloat diff = (est - prev).abs();
                if (!have_best || cmp(diff, best_diff) < 0) {
                    best = est;
                    best_diff = diff;
                    have_best = true;
                }
                if (cmp(diff, tol * (est.abs() + BigFloat::from_long(1, w))) < 0)
                    return head + est;
            }
            prev = est;
            have_prev = true;
        }
        return head + (have_best ? best : prev);
    }
    throw UnsupportedError("sum: divergent geometric base |z| > 1");
}

NumericReport check_theorem_numeric(const TheoremSpec& spec, int samples,
                                    const PrecisionConfig& cfg, const WZData* wz,
                                    const std::map<std::string, Rational>* fixed_point) {
    NumericReport report;
    const mpfr_prec_t w = cfg.working_bits();
    std::mt19937_64 rng(0xC0FFEE);
    std::uniform_int_distribution<long> num_dist(-24, 24);

    auto admissible = [&](const std::map<std::string, Rational>& pt) {
        for (const auto& c : spec.stated_conditions) {
            Rational v = c.linear.eval(pt);
            if (!(v <= Rational(-1, 4))) return false; // margin 1/4
        }
        HyperTerm lhs = spec.lhs_term();
        for (const auto& gf : lhs.gammas()) {
            Rational v = gf.arg.constant.eval(pt);
            if (gf.arg.coeff_k == 0 && is_nonpositive_integer(v)) return false;
            // lower Pochhammer pole: (l)_k hits zero when l is a nonpositive integer
            if (gf.arg.coeff_k == 1 && gf.exponent < 0 && is_nonpositive_integer(v))
                return false;
        }
        for (const auto& gf : spec.rhs.gammas())
            if (is_nonpositive_integer(gf.arg.constant.eval(pt))) return false;
        return true;
    };

    auto is_terminating = [&](const std::map<std::string, Rational>& pt) {
        for (const auto& u : spec.upper)
            if (is_nonpositive_integer(u.eval(pt))) return true;
        return false;
    };

    auto rhs_exact = [&](const std::map<std::string, Rational>& pt) -> std::optional<Rational> {
        Rational value(1);
        for (const auto& gf : spec.rhs.gammas()) {
            Rational x = gf.arg.constant.eval(pt);
            if (!is_integer(x) || x <= 0) return std::nullopt;
            value *= rational_pow(gamma_exact_integer(x.get_num().get_si()), gf.exponent);
        }
        return value;
    };

    int produced = 0, attempts = 0;
    while (produced < samples) {
        std::map<std::string, Rational> pt;
        if (fixed_point) {
            pt = *fixed_point;
        } else {
            for (const auto& p : spec.parameters) {
                Rational v(num_dist(rng), 8);
                v.canonicalize();
                pt[p] = v;
            }
            if (!admissible(pt)) {
                if (++attempts > 20000) throw Error("empty admissible sample region");
                continue;
            }
        }
        ++produced;

        CheckRecord rec;
        rec.name = spec.name + " identity";
        {
            std::ostringstream in;
            for (const auto& [k2, v] : pt) in << k2 << "=" << rational_to_string(v) << " ";
            rec.inputs = in.str();
        }
        if (fixed_point && is_terminating(pt)) {
            // Exact route for terminating instances.
            long cutoff = 0;
            for (const auto& u : spec.upper) {
                Rational v = u.eval(pt);
                if (is_nonpositive_integer(v)) cutoff = std::max(cutoff, -v.get_num().get_si() + 1);
            }
            auto lhs = partial_sum_exact(spec.lhs_term(), pt, cutoff + 2);
            auto rhs = rhs_exact(pt);
            rec.exact = true;
            if (lhs && rhs) {
                rec.lhs = rational_to_string(*lhs);
                rec.rhs = rational_to_string(*rhs);
                rec.pass = *lhs == *rhs;
            } else if (lhs) {
                // Closed form needs Gamma at non-integers: compare numerically.
                std::map<std::string, BigFloat> bpt;
                for (const auto& [k2, v] : pt) bpt[k2] = BigFloat::from_rational(v, w);
                BigFloat rv = BigFloat::from_long(1, w);
                for (const auto& gf : spec.rhs.gammas()) {
                    BigFloat x = BigFloat::from_rational(gf.arg.constant.eval(pt), w);
                    rv *= gamma_hp(x, cfg).pow_si(gf.exponent);
                }
                BigFloat lv = BigFloat::from_rational(*lhs, w);
                rec.exact = false;
                rec.lhs = lv.str(25);
                rec.rhs = rv.str(25);
                BigFloat diff = (lv - rv).abs();
                rec.abs_err = diff.to_double();
                rec.rel_err = (diff / rv.abs()).to_double();
                rec.pass = cmp(diff, cfg.tolerance() * rv.abs()) <= 0;
            } else {
                rec.pass = false;
                rec.lhs = "(no exact path)";
            }
        } else {
            BigFloat lhs = sum_accelerated(spec.lhs_term(), pt, cfg);
            BigFloat rhs = BigFloat::from_long(1, w);
            for (const auto& gf : spec.rhs.gammas()) {
                BigFloat x = BigFloat::from_rational(gf.arg.constant.eval(pt), w);
                rhs *= gamma_hp(x, cfg).pow_si(gf.exponent);
            }
            rec.lhs = lhs.str(25);
            rec.rhs = rhs.str(25);
            BigFloat diff = (lhs - rhs).abs();
            rec.abs_err = diff.to_double();
            rec.rel_err = (diff / rhs.abs()).to_double();
            rec.pass = cmp(diff, cfg.tolerance() * rhs.abs()) <= 0;
        }
        report.checks.push_back(rec);

        // Certificate replay at exact integer points.
        if (wz) {
            static const std::pair<long, long> points[] = {{1, 1}, {2, 3}, {5, 2}};
            RationalFunction qn = shift_quotient(wz->big_f, "n");
            RationalFunction qk = shift_quotient(wz->big_f, "k");
            for (auto [nn, kk] : points) {
                CheckRecord cr;
                cr.name = spec.name + " certificate identity";
                cr.exact = true;
                std::map<std::string, Rational> ipt = pt;
                ipt["n"] = Rational(nn);
                ipt["k"] = Rational(kk);
                {
                    std::ostringstream in;
                    in << rec.inputs << "n=" << nn << " k=" << kk;
                    cr.inputs = in.str();
                }
                try {
                    Rational lhs = Rational(1) - qn.eval(ipt);
                    std::map<std::string, Rational> ipt1 = ipt;
                    ipt1["k"] = Rational(kk + 1);
                    Rational rhs = wz->cert.c.eval(ipt1) * qk.eval(ipt) - wz->cert.c.eval(ipt);
                    cr.lhs = rational_to_string(lhs);
                    cr.rhs = rational_to_string(rhs);
                    cr.pass = lhs == rhs;
                } catch (const PoleError&) {
                    continue; // unlucky pole at the replay point
                }
                report.checks.push_back(cr);
            }
        }
        if (fixed_point) break;
    }
    return report;
}

} // namespace hypsum
