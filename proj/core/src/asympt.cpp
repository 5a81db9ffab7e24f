#include "hypsum/asympt.hpp"

#include <algorithm>
#include <map>

#include "hypsum/errors.hpp"

namespace hypsum {

namespace {

// Sign of log(|z| * prod base_i^(c_i)) by exact rational comparison:
// raise to the common denominator of the exponents and compare with 1.
int geometric_log_sign(const Rational& z, const std::vector<std::pair<Rational, Rational>>& powers) {
    Rational zabs = z < 0 ? Rational(-z) : z;
    if (zabs == 0) throw UnsupportedError("zero geometric base");
    long lcm_den = 1;
    for (const auto& [base, exp] : powers) {
        Integer l;
        mpz_lcm(l.get_mpz_t(), Integer(lcm_den).get_mpz_t(), exp.get_den().get_mpz_t());
        if (!l.fits_slong_p()) throw UnsupportedError("exponent denominator too large");
        lcm_den = l.get_si();
    }
    Rational prod = rational_pow(zabs, lcm_den);
    for (const auto& [base, exp] : powers) {
        Rational e = exp * lcm_den;
        prod *= rational_pow(base, e.get_num().get_si());
    }
    return cmp(prod, Rational(1));
}

Rational coeff_of_var(const Polynomial& p, const std::string& var) {
    Polynomial c = p.coeff_of(var, 1);
    if (p.degree(var) > 1 || !c.is_constant())
        throw UnsupportedError("expected affine dependence on " + var);
    return c.is_zero() ? Rational(0) : c.constant_value();
}

} // namespace

GrowthEstimate k_growth_exponent(const HyperTerm& t) {
    GrowthEstimate out;
    out.has_positive_factor = t.depends_on_n();

    // Geometric part: z together with constant bases carrying k.
    std::vector<std::pair<Rational, Rational>> powers;
    for (const auto& cb : t.const_bases()) {
        Rational ck = coeff_of_var(cb.exponent, "k");
        if (ck != 0) powers.emplace_back(cb.base, ck);
    }
    int zsign = geometric_log_sign(t.base(), powers);
    if (zsign < 0) {
        out.kind = GrowthEstimate::SuperDecay;
        return out;
    }
    if (zsign > 0) {
        out.kind = GrowthEstimate::SuperGrowth;
        return out;
    }

    int balance = 0;
    Polynomial exponent;
    for (const auto& gf : t.gammas()) {
        if (gf.arg.coeff_k == 0) continue;
        if (gf.arg.coeff_k != 1)
            throw UnsupportedError("non-unit k-coefficient in Gamma argument");
        balance += gf.exponent;
        Polynomial part = gf.arg.constant;
        if (gf.arg.coeff_n != 0)
            part += Polynomial::variable("n") * Rational(gf.arg.coeff_n);
        exponent += part * Rational(gf.exponent);
    }
    if (balance != 0) throw UnsupportedError("exponential Gamma growth (unbalanced factors)");
    exponent += Polynomial(Rational(t.prefactor().degree_diff("k")));
    out.kind = GrowthEstimate::PolynomialGrowth;
    out.exponent = exponent;
    return out;
}

std::pair<bool, std::vector<Condition>> k_limit_zero(const HyperTerm& t) {
    GrowthEstimate g = k_growth_exponent(t);
    if (g.kind == GrowthEstimate::SuperDecay) return {true, {}};
    if (g.kind == GrowthEstimate::SuperGrowth) return {false, {}};
    Rational cn = coeff_of_var(g.exponent, "n");
    if (cn > 0) return {false, {}};
    // Worst case over n >= 0 sits at n = 0.
    Polynomial l = g.exponent.substitute("n", Polynomial());
    if (l.is_constant()) {
        bool zero = l.is_zero() ? false : l.constant_value() < 0;
        return {zero, {}};
    }
    return {true, {Condition(l, true)}};
}

LimitResult n_limit(const HyperTerm& t) {
    LimitResult out;
    for (const auto& cb : t.const_bases())
        if (cb.exponent.depends_on("n"))
            throw UnsupportedError("constant base with n-dependent exponent");

    std::map<int, Polynomial> group_exponent;
    for (const auto& gf : t.gammas()) {
        int m = gf.arg.coeff_n;
        if (m == 0) continue;
        if (m < 0) throw UnsupportedError("negative n-coefficient in Gamma argument");
        Polynomial part = gf.arg.constant;
        if (gf.arg.coeff_k != 0)
            part += Polynomial::variable("k") * Rational(gf.arg.coeff_k);
        group_exponent[m] += part * Rational(gf.exponent);
    }
    int pref_deg = t.prefactor().depends_on("n") ? t.prefactor().degree_diff("n") : 0;
    Polynomial total{Rational(pref_deg)};
    for (const auto& [m, e] : group_exponent) total += e;

    if (total.is_zero()) {
        // Finite limit: k-only Gamma factors survive, each group m
        // contributes the constant m^(e_m), the prefactor its n-leading
        // coefficient ratio.
        std::vector<GammaFactor> kept;
        for (const auto& gf : t.gammas())
            if (gf.arg.coeff_n == 0) kept.push_back(gf);
        HyperTerm lim = HyperTerm::gamma_product(kept);
        Rational z = t.base();
        RationalFunction pref = t.prefactor();
        if (pref.depends_on("n")) {
            Polynomial ln = pref.num().leading_coeff_in("n");
            Polynomial ld = pref.den().leading_coeff_in("n");
            pref = RationalFunction(ln, ld);
        }
        lim = lim.with_prefactor(pref);
        for (const auto& cb : t.const_bases()) lim = lim.times_const_base(cb.base, cb.exponent);
        for (const auto& [m, e] : group_exponent) {
            if (m == 1 || e.is_zero()) continue;
            Rational ck = coeff_of_var(e, "k");
            Polynomial e_rest = e - Polynomial::variable("k") * ck;
            if (ck != 0) {
                // m^(ck*k) folds into the geometric base.
                if (!is_integer(ck))
                    throw UnsupportedError("non-integer k-multiple in group exponent");
                z *= rational_pow(Rational(m), ck.get_num().get_si());
            }
            if (!e_rest.is_zero()) lim = lim.times_const_base(Rational(m), e_rest);
        }
        lim = lim.with_base(z);
        out.kind = LimitResult::Finite;
        out.limit_term = lim;
        return out;
    }

    Rational ck = coeff_of_var(total, "k");
    Polynomial rest = total - Polynomial::variable("k") * ck;
    if (rest.is_zero() && ck != 0) {
        // n^(c*k): Kronecker delta when Re(c) < 0.
        Condition cond{Polynomial(ck), true};
        if (cond.is_trivially_false()) {
            out.kind = LimitResult::Divergent;
            return out;
        }
        out.kind = LimitResult::DeltaK0;
        out.conditions.push_back(cond);
        return out;
    }
    if (rest.is_constant()) {
        out.kind = rest.constant_value() < 0 && ck <= 0 ? LimitResult::Zero
                                                        : LimitResult::Divergent;
        return out;
    }
    // Symbolic constant part: classify as zero under its negativity.
    out.kind = LimitResult::Zero;
    out.conditions.emplace_back(rest, true);
    if (ck != 0) out.conditions.emplace_back(Polynomial(ck), false);
    return out;
}

std::vector<Condition> DominationReport::conditions() const {
    std::vector<Condition> out;
    for (const auto& p : pairs)
        if (p.condition) out.push_back(*p.condition);
    if (summability) out.push_back(*summability);
    return out;
}

DominationReport domination_check(const HyperTerm& f, const HyperTerm& s_term,
                                  const LimitResult& limit) {
    if (limit.kind != LimitResult::Finite && limit.kind != LimitResult::DeltaK0)
        throw Error("domination_check: termwise limit must be finite or delta");
    DominationReport rep;

    // 1/S(n) stays bounded for large n exactly when its n-limit is finite.
    LimitResult sinv = n_limit(s_term.inverse());
    if (sinv.kind != LimitResult::Finite) {
        rep.failure = "no majorant found: 1/S(n) unbounded";
        return rep;
    }
    rep.s_bound_note = "1/S(n) has a finite n-limit, so |1/S(n)| < A for all large n";

    // Reconstruct Pochhammer pairs: each k-carrying Gamma factor with its
    // k-free partner of equal argument.
    struct Poch {
        int m;              // n-coefficient
        Polynomial base;    // k-free constant
        int sign;           // +1 numerator, -1 denominator
    };
    std::vector<Poch> pochs;
    std::vector<GammaFactor> leftovers; // k-only factors without n
    std::vector<GammaFactor> gammas = f.gammas();
    std::vector<bool> used(gammas.size(), false);
    for (std::size_t i = 0; i < gammas.size(); ++i) {
        if (used[i] || gammas[i].arg.coeff_k == 0) continue;
        if (gammas[i].arg.coeff_k != 1)
            throw UnsupportedError("non-unit k-coefficient in Gamma argument");
        // find the partner
        bool found = false;
        for (std::size_t j = 0; j < gammas.size() && !found; ++j) {
            if (used[j] || i == j) continue;
            if (gammas[j].arg.coeff_k != 0) continue;
            if (gammas[j].arg.coeff_n != gammas[i].arg.coeff_n) continue;
            if (!(gammas[j].arg.constant == gammas[i].arg.constant)) continue;
            if (gammas[j].exponent + gammas[i].exponent != 0) continue;
            used[i] = used[j] = true;
            found = true;
            for (int copy = 0; copy < std::abs(gammas[i].exponent); ++copy)
                pochs.push_back({gammas[i].arg.coeff_n, gammas[i].arg.constant,
                                 gammas[i].exponent > 0 ? 1 : -1});
        }
        if (!found && gammas[i].arg.coeff_n == 0 && gammas[i].arg.constant.is_constant()) {
            // Gamma of a plain rational (like the Gamma(1) behind k!) is a
            // nonzero constant; the partner is implicit.
            used[i] = true;
            found = true;
            for (int copy = 0; copy < std::abs(gammas[i].exponent); ++copy)
                pochs.push_back({0, gammas[i].arg.constant, gammas[i].exponent > 0 ? 1 : -1});
        }
        if (!found) {
            rep.failure = "no majorant found: unpaired Gamma factor " +
                          gammas[i].arg.as_polynomial().str();
            return rep;
        }
    }
    for (std::size_t i = 0; i < gammas.size(); ++i)
        if (!used[i]) {
            if (gammas[i].arg.coeff_n != 0) {
                rep.failure = "no majorant found: n-dependent factor without Pochhammer partner";
                return rep;
            }
            leftovers.push_back(gammas[i]);
        }

    auto poch_less = [](const Poch& a, const Poch& b) {
        if (a.m != b.m) return a.m < b.m;
        return Polynomial::compare(a.base, b.base) < 0;
    };
    std::vector<Poch> num_n, den_n, num_k;
    for (const auto& p : pochs) {
        if (p.m > 0) {
            (p.sign > 0 ? num_n : den_n).push_back(p);
        } else if (p.sign > 0) {
            num_k.push_back(p);
        } else {
            // Denominator k-Pochhammer: back into the remainder bound.
            leftovers.push_back({AffineArg{0, 1, p.base}, -1});
            leftovers.push_back({AffineArg{0, 0, p.base}, 1});
        }
    }
    std::sort(num_n.begin(), num_n.end(), poch_less);
    std::sort(den_n.begin(), den_n.end(), poch_less);
    std::sort(num_k.begin(), num_k.end(), poch_less);

    // Pair numerator n-Pochhammers with denominator ones of the same m.
    Polynomial excess; // rational excess exponents folded into the bound
    std::vector<bool> den_used(den_n.size(), false);
    for (const auto& np : num_n) {
        bool matched = false;
        for (std::size_t j = 0; j < den_n.size() && !matched; ++j) {
            if (den_used[j] || den_n[j].m != np.m) continue;
            den_used[j] = true;
            matched = true;
            Polynomial delta = np.base - den_n[j].base;
            DominationPair pair{np.base, den_n[j].base, std::nullopt};
            if (delta.is_constant()) {
                // Constant excess: ratio ~ k^delta uniformly for large n.
                if (!delta.is_zero() && delta.constant_value() > 0)
                    excess += delta;
            } else {
                pair.condition = Condition(delta, false);
            }
            rep.pairs.push_back(pair);
        }
        if (!matched) {
            rep.failure = "no majorant found: numerator Pochhammer " + np.base.str() +
                          " has no denominator partner";
            return rep;
        }
    }
    // Remaining denominator n-Pochhammers absorb k-only numerator
    // Pochhammers (their ratio is below 1 for large n) or are dropped.
    std::size_t absorb = 0;
    for (std::size_t j = 0; j < den_n.size(); ++j) {
        if (den_used[j]) continue;
        if (absorb < num_k.size()) {
            rep.pairs.push_back({num_k[absorb].base, den_n[j].base, std::nullopt});
            ++absorb;
        }
    }
    for (std::size_t i = absorb; i < num_k.size(); ++i) {
        leftovers.push_back({AffineArg{0, 1, num_k[i].base}, 1});
        leftovers.push_back({AffineArg{0, 0, num_k[i].base}, -1});
    }

    // k-only remainder bound.
    HyperTerm remainder = HyperTerm::gamma_product(leftovers)
                              .with_base(f.base())
                              .with_prefactor(f.prefactor());
    GrowthEstimate g = k_growth_exponent(remainder);
    if (g.kind == GrowthEstimate::SuperGrowth) {
        rep.failure = "no majorant found: remainder grows geometrically";
        return rep;
    }
    if (g.kind == GrowthEstimate::SuperDecay) {
        rep.bound_decays = true;
    } else {
        rep.bound_exponent = g.exponent + excess;
        if (rep.bound_exponent.depends_on("n")) {
            rep.failure = "no majorant found: bound still depends on n";
            return rep;
        }
        rep.summability = Condition(rep.bound_exponent + Polynomial(Rational(1)), true);
    }
    rep.ok = true;
    return rep;
}

} // namespace hypsum
