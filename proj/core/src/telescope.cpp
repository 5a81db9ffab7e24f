#include "hypsum/telescope.hpp"

#include <cassert>
#include <set>

#include "hypsum/errors.hpp"

namespace hypsum {

namespace {

Polynomial expand(const std::vector<Polynomial>& factors) {
    Polynomial out{Rational(1)};
    for (const auto& f : factors) out *= f;
    return out;
}

// Factored Gosper normal form.  The products of q_factors / s_factors /
// p_factors are the q, s, p of GosperForm; keeping the factor lists makes
// every gcd in the decomposition a small pairwise computation.
struct CoreForm {
    std::vector<Polynomial> q_factors, s_factors, p_factors;
    Polynomial q, s, p; // expanded products
};

CoreForm normal_form_factored(const std::vector<Polynomial>& numf,
                              const std::vector<Polynomial>& denf, const std::string& k) {
    CoreForm out;
    out.q_factors = numf;
    for (const auto& d : denf) out.s_factors.push_back(d.shift(k, Rational(-1)));

    std::set<long> js;
    for (const auto& qi : out.q_factors)
        for (const auto& sj : out.s_factors) {
            auto d = dispersion_set(qi, sj, k);
            js.insert(d.begin(), d.end());
        }
    for (long j : js) {
        if (j == 0) continue; // cannot be compensated polynomially
        for (auto& qi : out.q_factors)
            for (auto& sj : out.s_factors) {
                for (;;) {
                    if (qi.is_constant() || sj.is_constant()) break;
                    Polynomial g = poly_gcd(qi, sj.shift(k, Rational(j)));
                    if (g.is_constant()) break;
                    qi = *Polynomial::divide_exact(qi, g);
                    sj = *Polynomial::divide_exact(sj, g.shift(k, Rational(-j)));
                    for (long i = 1; i <= j - 1; ++i)
                        out.p_factors.push_back(g.shift(k, Rational(-i)));
                }
            }
    }
    out.q = expand(out.q_factors);
    out.s = expand(out.s_factors);
    out.p = expand(out.p_factors);
    return out;
}

// Degree bound for the polynomial unknown x in
//   fp(k)*x(k+1) - fm(k)*x(k) = (rhs of degree rhs_deg).
// Two standard cases: distinct leading data, and the cancellation case with
// its integer-root candidate; the larger bound wins on ambiguity.
int gosper_degree_bound(const Polynomial& fp, const Polynomial& fm, int rhs_deg,
                        const std::string& k) {
    int dp = fp.degree(k), dm = fm.degree(k);
    int l = std::max(dp, dm);
    Polynomial lp = fp.coeff_of(k, l);
    Polynomial lm = fm.coeff_of(k, l);
    if (lp != lm) return rhs_deg - l;
    Polynomial next_p = fp.coeff_of(k, l - 1);
    Polynomial next_m = fm.coeff_of(k, l - 1);
    int d0 = rhs_deg - l + 1;
    int d_special = -1;
    RationalFunction cand = RationalFunction(next_m - next_p) / RationalFunction(lp);
    if (cand.is_constant()) {
        Rational rv = cand.constant_value();
        if (is_integer(rv) && rv >= 0 && rv.get_num().fits_slong_p())
            d_special = int(rv.get_num().get_si());
    }
    return std::max(d0, d_special);
}

// Linear form c_0*sigma_0 + ... + c_{m-1}*sigma_{m-1} + c_m over the
// parameter field (the last slot is the constant part).
using LinForm = RFVector;

struct TriangularSolution {
    bool applicable = false;            // degrees not strictly increasing
    std::vector<LinForm> x;             // x_0..x_d as linear forms
    std::vector<LinForm> constraints;   // residual rows that must vanish
};

// Solve q(k)*x(k+1) - s(k)*x(k) = sum_m sigma_m * rhs_m(k) + rhs_const(k)
// by descending-degree back-substitution.  The column polynomials
// phi_j = q*(k+1)^j - s*k^j have strictly increasing degrees in the generic
// and the equal-leading-coefficient cases, which makes the system
// triangular; each unknown costs one division by a small leading
// coefficient, so parameter expressions stay compact.
TriangularSolution solve_triangular(const Polynomial& q, const Polynomial& s,
                                    const std::vector<Polynomial>& rhs_sigma,
                                    const Polynomial& rhs_const, int d,
                                    const std::string& k) {
    TriangularSolution out;
    const std::size_t m = rhs_sigma.size();
    Polynomial kv = Polynomial::variable(k);
    Polynomial k1 = kv + Polynomial(Rational(1));
    std::vector<Polynomial> col(d + 1);
    Polynomial pow_k(Rational(1)), pow_k1(Rational(1));
    for (int i = 0; i <= d; ++i) {
        col[i] = q * pow_k1 - s * pow_k;
        pow_k *= kv;
        pow_k1 *= k1;
    }
    for (int i = 0; i + 1 <= d; ++i)
        if (col[i].degree(k) >= col[i + 1].degree(k)) return out; // fallback
    out.applicable = true;

    int max_deg = rhs_const.degree(k);
    for (const auto& p : rhs_sigma) max_deg = std::max(max_deg, p.degree(k));
    for (const auto& c : col) max_deg = std::max(max_deg, c.degree(k));

    // residual[e] = linear form at degree e, initialized from the rhs.
    std::vector<LinForm> residual(max_deg + 1, LinForm(m + 1));
    for (int e = 0; e <= max_deg; ++e) {
        for (std::size_t i = 0; i < m; ++i)
            residual[e][i] = RationalFunction(rhs_sigma[i].coeff_of(k, e));
        residual[e][m] = RationalFunction(rhs_const.coeff_of(k, e));
    }

    out.x.assign(d + 1, LinForm(m + 1));
    for (int j = d; j >= 0; --j) {
        int e = col[j].degree(k);
        RationalFunction pivot{col[j].coeff_of(k, e)};
        LinForm xj(m + 1);
        if (e <= max_deg)
            for (std::size_t i = 0; i <= m; ++i) xj[i] = residual[e][i] / pivot;
        out.x[j] = xj;
        auto coeffs = col[j].univariate_coeffs(k);
        for (std::size_t deg = 0; deg < coeffs.size(); ++deg) {
            if (coeffs[deg].is_zero() || int(deg) > max_deg) continue;
            RationalFunction c{coeffs[deg]};
            for (std::size_t i = 0; i <= m; ++i) residual[deg][i] -= c * xj[i];
        }
    }
    for (int e = 0; e <= max_deg; ++e) {
        bool nonzero = false;
        for (std::size_t i = 0; i <= m; ++i)
            if (!residual[e][i].is_zero()) nonzero = true;
        if (nonzero) out.constraints.push_back(residual[e]);
    }
    return out;
}

// Solve fp(k)*x(k+1) - fm(k)*x(k) = rhs(k) for x of degree <= d in k with
// parameter-field coefficients (denominator free of k).
std::optional<RationalFunction> solve_gosper_equation(const Polynomial& fp,
                                                      const Polynomial& fm,
                                                      const Polynomial& rhs, int d,
                                                      const std::string& k) {
    if (d < 0) return std::nullopt;
    Polynomial kv = Polynomial::variable(k);

    TriangularSolution tri = solve_triangular(fp, fm, {}, rhs, d, k);
    if (tri.applicable) {
        for (const auto& c : tri.constraints)
            if (!c[0].is_zero()) return std::nullopt;
        RationalFunction x;
        Polynomial pk(Rational(1));
        for (int i = 0; i <= d; ++i) {
            if (!tri.x[i][0].is_zero()) x += tri.x[i][0] * RationalFunction(pk);
            pk *= kv;
        }
        if (x.den().degree(k) != 0) return std::nullopt;
        return x;
    }

    // Degenerate column degrees: full elimination.
    Polynomial k1 = kv + Polynomial(Rational(1));
    std::vector<Polynomial> col(d + 1);
    Polynomial pow_k(Rational(1)), pow_k1(Rational(1));
    for (int i = 0; i <= d; ++i) {
        col[i] = fp * pow_k1 - fm * pow_k;
        pow_k *= kv;
        pow_k1 *= k1;
    }
    int max_deg = rhs.degree(k);
    for (const auto& c : col) max_deg = std::max(max_deg, c.degree(k));
    RFMatrix a(max_deg + 1, RFVector(d + 1));
    RFVector b(max_deg + 1);
    for (int row = 0; row <= max_deg; ++row) {
        for (int i = 0; i <= d; ++i) a[row][i] = RationalFunction(col[i].coeff_of(k, row));
        b[row] = RationalFunction(rhs.coeff_of(k, row));
    }
    auto sol = linear_solve(std::move(a), std::move(b));
    if (!sol) return std::nullopt;
    RationalFunction x;
    Polynomial pk(Rational(1));
    for (int i = 0; i <= d; ++i) {
        if (!(*sol)[i].is_zero()) x += (*sol)[i] * RationalFunction(pk);
        pk *= kv;
    }
    if (x.den().degree(k) != 0) return std::nullopt;
    return x;
}

// R = prod(s_factors) * x / prod(p_factors), cancelling factor by factor.
RationalFunction assemble_r(const CoreForm& gf, const RationalFunction& x) {
    RationalFunction r = x;
    for (const auto& f : gf.s_factors) r *= RationalFunction(f);
    for (const auto& f : gf.p_factors) r /= RationalFunction(f);
    return r;
}

// Exact check of R(k+1) * (N/D) - R(k) = 1 by pure polynomial expansion.
bool check_gosper_identity(const RationalFunction& r, const Polynomial& n_poly,
                           const Polynomial& d_poly, const std::string& k) {
    Polynomial rn = r.num(), rd = r.den();
    Polynomial rn1 = rn.shift(k, Rational(1));
    Polynomial rd1 = rd.shift(k, Rational(1));
    Polynomial lhs = rn1 * rd * n_poly - rn * rd1 * d_poly;
    Polynomial rhs = rd * rd1 * d_poly;
    return lhs == rhs;
}

// Callers verify the telescoping identity on their own terms (gosper via
// check_gosper_identity, wz_pair via verify_certificate, zeilberger via
// verify_recurrence), so no check happens here.
std::optional<RationalFunction> gosper_factored(const std::vector<Polynomial>& numf,
                                                const std::vector<Polynomial>& denf,
                                                const std::string& k) {
    CoreForm gf = normal_form_factored(numf, denf, k);
    int d = gosper_degree_bound(gf.q, gf.s, gf.p.degree(k), k);
    auto x = solve_gosper_equation(gf.q, gf.s, gf.p, d, k);
    if (!x) return std::nullopt;
    return assemble_r(gf, *x);
}

} // namespace

GosperForm gosper_form(const RationalFunction& r, const std::string& k) {
    CoreForm core = normal_form_factored({r.num()}, {r.den()}, k);
    GosperForm out;
    out.p = core.p;
    out.q = core.q;
    out.s = core.s;
    // Present the unit separately: pull the rational content out of q and s.
    Rational zq(1), zs(1);
    if (!out.q.is_zero()) {
        zq = out.q.rational_content();
        if (out.q.leading_coefficient() < 0) zq = -zq;
        out.q = out.q * (Rational(1) / zq);
    }
    if (!out.s.is_zero()) {
        zs = out.s.rational_content();
        if (out.s.leading_coefficient() < 0) zs = -zs;
        out.s = out.s * (Rational(1) / zs);
    }
    out.z_const = RationalFunction(zq / zs);
    return out;
}

std::optional<RationalFunction> gosper(const RationalFunction& r, const std::string& k) {
    if (r.is_zero()) throw Error("gosper: zero shift quotient");
    auto rr = gosper_factored({r.num()}, {r.den()}, k);
    if (!rr) return std::nullopt;
    if (!check_gosper_identity(*rr, r.num(), r.den(), k)) return std::nullopt;
    return rr;
}

namespace {

// Cancel common factors between two factor lists pairwise; every gcd stays
// factor-sized.
void reduce_lists(std::vector<Polynomial>& num, std::vector<Polynomial>& den) {
    for (auto& d : den) {
        if (d.is_constant()) continue;
        for (auto& nf : num) {
            if (nf.is_constant()) continue;
            for (;;) {
                Polynomial g = poly_gcd(nf, d);
                if (g.is_constant()) break;
                nf = *Polynomial::divide_exact(nf, g);
                d = *Polynomial::divide_exact(d, g);
                if (d.is_constant()) break;
            }
            if (d.is_constant()) break;
        }
    }
}

RationalFunction quotient_of_lists(std::vector<Polynomial> num, std::vector<Polynomial> den) {
    reduce_lists(num, den);
    return RationalFunction(expand(num), expand(den));
}

} // namespace

std::optional<Certificate> wz_pair(const HyperTerm& f) {
    const std::string k = "k";
    QuotientFactors qn = shift_quotient_factors(f, "n");
    // Well-poised terms repeat factors between the two lists; cancelling
    // them first keeps rho and everything downstream small.
    reduce_lists(qn.num, qn.den);
    Polynomial n_poly = expand(qn.num);
    Polynomial d_poly = expand(qn.den);
    Polynomial rho_num = d_poly - n_poly; // rho = 1 - q_n = rho_num / d_poly
    if (rho_num.is_zero()) return Certificate{RationalFunction(), true};

    // Split off the k-free content of rho_num; it cancels between
    // rho(k+1) and rho(k) and would otherwise force a huge gcd.
    Polynomial rho_content;
    for (const auto& coeff : rho_num.univariate_coeffs(k)) {
        if (coeff.is_zero()) continue;
        rho_content = poly_gcd(rho_content, coeff);
        if (rho_content.is_one()) break;
    }
    Polynomial rho_pp = *Polynomial::divide_exact(rho_num, rho_content);

    QuotientFactors qk = shift_quotient_factors(f, "k");
    // r_H = q_k * rho(k+1)/rho(k), assembled as factor lists.
    std::vector<Polynomial> numf = qk.num;
    numf.push_back(rho_pp.shift(k, Rational(1)));
    for (const auto& d : qn.den) numf.push_back(d);
    std::vector<Polynomial> denf = qk.den;
    denf.push_back(rho_pp);
    for (const auto& d : qn.den) denf.push_back(d.shift(k, Rational(1)));

    CoreForm gf = normal_form_factored(numf, denf, k);
    int d = gosper_degree_bound(gf.q, gf.s, gf.p.degree(k), k);
    auto x = solve_gosper_equation(gf.q, gf.s, gf.p, d, k);
    if (!x) return std::nullopt;

    // C = R * rho = (s*x/p) * rho_content * rho_pp / prod(qn.den),
    // cancelled list-against-list before any expansion.
    std::vector<Polynomial> cnum = gf.s_factors;
    cnum.push_back(x->num());
    cnum.push_back(rho_pp);
    cnum.push_back(rho_content);
    std::vector<Polynomial> cden = gf.p_factors;
    cden.push_back(x->den());
    for (const auto& df : qn.den) cden.push_back(df);
    Certificate cert{quotient_of_lists(std::move(cnum), std::move(cden)), false};
    if (!verify_certificate(f, cert)) return std::nullopt;
    return cert;
}

bool verify_certificate(const HyperTerm& f, const Certificate& cert) {
    RationalFunction qn = shift_quotient(f, "n");
    RationalFunction qk = shift_quotient(f, "k");
    RationalFunction lhs = RationalFunction(Rational(1)) - qn;
    RationalFunction rhs = cert.c.shift("k", 1) * qk - cert.c;
    return lhs == rhs;
}

std::optional<Recurrence> zeilberger(const HyperTerm& m, const std::string& param,
                                     int max_order) {
    const std::string k = "k";
    RationalFunction qp = shift_quotient(m, param);
    QuotientFactors qkf = shift_quotient_factors(m, k);

    for (int order = 1; order <= max_order; ++order) {
        // Ratios M(param+i,k)/M(param,k), i = 0..order.
        std::vector<RationalFunction> ratio(order + 1);
        ratio[0] = RationalFunction(Rational(1));
        for (int i = 1; i <= order; ++i)
            ratio[i] = ratio[i - 1] * qp.shift(param, Rational(i - 1));
        // Common denominator Q and numerators P_i.
        Polynomial qden(Rational(1));
        for (int i = 0; i <= order; ++i) {
            Polynomial g = poly_gcd(qden, ratio[i].den());
            qden = qden * (*Polynomial::divide_exact(ratio[i].den(), g));
        }
        std::vector<Polynomial> pnum(order + 1);
        for (int i = 0; i <= order; ++i)
            pnum[i] = ratio[i].num() * (*Polynomial::divide_exact(qden, ratio[i].den()));

        // u = M/Q with quotient r_u = q_k * Q(k)/Q(k+1).
        std::vector<Polynomial> numf = qkf.num;
        numf.push_back(qden);
        std::vector<Polynomial> denf = qkf.den;
        denf.push_back(qden.shift(k, Rational(1)));
        CoreForm gf = normal_form_factored(numf, denf, k);

        int rhs_deg = 0;
        for (const auto& p : pnum) rhs_deg = std::max(rhs_deg, p.degree(k));
        rhs_deg += gf.p.degree(k);
        int d = gosper_degree_bound(gf.q, gf.s, rhs_deg, k);
        if (d < 0) continue;
        Polynomial kv = Polynomial::variable(k);

        // System q(k)*x(k+1) - s(k)*x(k) = sum_i sigma_i * (p*P_i)(k):
        // triangularize in x; the residual constraints form a small
        // homogeneous system in sigma alone.
        std::vector<std::pair<RationalFunction, RFVector>> candidates; // (x, sigma)
        std::vector<Polynomial> rhs_sigma(order + 1);
        for (int i = 0; i <= order; ++i) rhs_sigma[i] = gf.p * pnum[i];
        TriangularSolution tri = solve_triangular(gf.q, gf.s, rhs_sigma, Polynomial(), d, k);
        if (tri.applicable) {
            RFMatrix cons(tri.constraints.size(), RFVector(order + 1));
            for (std::size_t r = 0; r < tri.constraints.size(); ++r)
                for (int i = 0; i <= order; ++i) cons[r][i] = tri.constraints[r][i];
            for (const auto& sig : kernel_basis(std::move(cons))) {
                RationalFunction x;
                Polynomial pk(Rational(1));
                for (int i = 0; i <= d; ++i) {
                    RationalFunction xi = tri.x[i][order + 1];
                    for (int mth = 0; mth <= order; ++mth) xi += tri.x[i][mth] * sig[mth];
                    if (!xi.is_zero()) x += xi * RationalFunction(pk);
                    pk *= kv;
                }
                candidates.emplace_back(x, sig);
            }
        } else {
            // Degenerate degrees: joint kernel in (x, sigma).
            Polynomial k1 = kv + Polynomial(Rational(1));
            std::vector<Polynomial> cols;
            Polynomial pow_k(Rational(1)), pow_k1(Rational(1));
            for (int i = 0; i <= d; ++i) {
                cols.push_back(gf.q * pow_k1 - gf.s * pow_k);
                pow_k *= kv;
                pow_k1 *= k1;
            }
            for (int i = 0; i <= order; ++i) cols.push_back(-rhs_sigma[i]);
            int max_deg = 0;
            for (const auto& c : cols) max_deg = std::max(max_deg, c.degree(k));
            RFMatrix a(max_deg + 1, RFVector(cols.size()));
            for (int row = 0; row <= max_deg; ++row)
                for (std::size_t i = 0; i < cols.size(); ++i)
                    a[row][i] = RationalFunction(cols[i].coeff_of(k, row));
            for (const auto& vec : kernel_basis(std::move(a))) {
                RationalFunction x;
                Polynomial pk(Rational(1));
                for (int i = 0; i <= d; ++i) {
                    if (!vec[i].is_zero()) x += vec[i] * RationalFunction(pk);
                    pk *= kv;
                }
                candidates.emplace_back(x, RFVector(vec.begin() + d + 1, vec.end()));
            }
        }

        for (const auto& [x_sol, sigma_raw] : candidates) {
            bool sigma_nonzero = false;
            for (int i = 0; i <= order; ++i)
                if (!sigma_raw[i].is_zero()) sigma_nonzero = true;
            if (!sigma_nonzero) continue;

            // Normalize sigma: clear denominators, divide by the polynomial
            // gcd and rational content, first nonzero leading coefficient
            // positive.
            std::vector<RationalFunction> sigma = sigma_raw;
            Polynomial den_lcm(Rational(1));
            for (const auto& sg : sigma) {
                Polynomial g = poly_gcd(den_lcm, sg.den());
                den_lcm = den_lcm * (*Polynomial::divide_exact(sg.den(), g));
            }
            std::vector<Polynomial> signum(sigma.size());
            Polynomial num_gcd;
            for (std::size_t i = 0; i < sigma.size(); ++i) {
                signum[i] = sigma[i].num() * (*Polynomial::divide_exact(den_lcm, sigma[i].den()));
                num_gcd = poly_gcd(num_gcd, signum[i]);
            }
            for (std::size_t i = 0; i < sigma.size(); ++i)
                if (!num_gcd.is_one() && !signum[i].is_zero())
                    signum[i] = *Polynomial::divide_exact(signum[i], num_gcd);
            Rational content(0);
            for (const auto& s : signum) {
                if (s.is_zero()) continue;
                Rational c = s.rational_content();
                content = content == 0 ? c
                                       : Rational(gcd(content.get_num() * c.get_den(),
                                                      c.get_num() * content.get_den()),
                                                  content.get_den() * c.get_den());
            }
            if (content != 0 && content != 1)
                for (auto& s : signum) s = s * (Rational(1) / content);
            int lead_sign = 0;
            for (const auto& s : signum)
                if (!s.is_zero()) {
                    lead_sign = s.leading_coefficient() > 0 ? 1 : -1;
                    break;
                }
            if (lead_sign < 0)
                for (auto& s : signum) s = -s;

            RationalFunction lambda;
            for (std::size_t i = 0; i < sigma.size(); ++i)
                if (!sigma[i].is_zero()) {
                    lambda = RationalFunction(signum[i]) / sigma[i];
                    break;
                }

            RationalFunction cprime = assemble_r(gf, x_sol * lambda);
            cprime /= RationalFunction(qden);

            Recurrence rec;
            rec.shift_var = param;
            rec.order = order;
            for (auto& s : signum) rec.sigma.push_back(RationalFunction(s));
            rec.cert = Certificate{cprime, false};
            if (verify_recurrence(m, rec)) return rec;
        }
    }
    return std::nullopt;
}

bool verify_recurrence(const HyperTerm& m, const Recurrence& rec) {
    RationalFunction qp = shift_quotient(m, rec.shift_var);
    RationalFunction qk = shift_quotient(m, "k");
    RationalFunction lhs;
    RationalFunction ratio(Rational(1));
    for (int i = 0; i <= rec.order; ++i) {
        lhs += rec.sigma[i] * ratio;
        ratio = ratio * qp.shift(rec.shift_var, Rational(i));
    }
    RationalFunction rhs = rec.cert.c.shift("k", 1) * qk - rec.cert.c;
    return lhs == rhs;
}

} // namespace hypsum
