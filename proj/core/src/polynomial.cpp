#include "hypsum/polynomial.hpp"

#include <algorithm>
#include <cassert>

#include "hypsum/errors.hpp"
#include "hypsum/expr.hpp"

namespace hypsum {

int variable_rank(const std::string& name) {
    if (name == "n") return 0;
    if (name == "k") return 1;
    return 2;
}

bool variable_less(const std::string& a, const std::string& b) {
    int ra = variable_rank(a), rb = variable_rank(b);
    if (ra != rb) return ra < rb;
    return a < b;
}

Polynomial::Polynomial(const Rational& c) {
    if (c != 0) terms_[{}] = c;
}

Polynomial::Polynomial(long c) {
    if (c != 0) terms_[{}] = Rational(c);
}

Polynomial Polynomial::variable(const std::string& name) {
    Polynomial p;
    p.vars_ = {name};
    p.terms_[{1}] = Rational(1);
    return p;
}

bool Polynomial::is_one() const {
    return vars_.empty() && terms_.size() == 1 && terms_.begin()->second == 1;
}

Rational Polynomial::constant_value() const {
    if (is_zero()) return Rational(0);
    if (!is_constant()) throw Error("constant_value: polynomial is not constant");
    return terms_.begin()->second;
}

bool Polynomial::depends_on(const std::string& var) const {
    return std::find(vars_.begin(), vars_.end(), var) != vars_.end();
}

void Polynomial::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
    if (vars_.empty()) return;
    std::vector<bool> used(vars_.size(), false);
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) used[i] = true;
    if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
    std::vector<std::string> nv;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (used[i]) nv.push_back(vars_[i]);
    TermMap nt;
    for (const auto& [e, c] : terms_) {
        Exponents ne;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (used[i]) ne.push_back(e[i]);
        nt[ne] = c;
    }
    vars_ = std::move(nv);
    terms_ = std::move(nt);
}

Polynomial Polynomial::reindexed(const std::vector<std::string>& new_vars) const {
    Polynomial r;
    r.vars_ = new_vars;
    std::vector<int> pos(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(new_vars.begin(), new_vars.end(), vars_[i]);
        assert(it != new_vars.end());
        pos[i] = int(it - new_vars.begin());
    }
    for (const auto& [e, c] : terms_) {
        Exponents ne(new_vars.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
        r.terms_[ne] = c;
    }
    return r;
}

static std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                           const std::vector<std::string>& b) {
    std::vector<std::string> out;
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
               variable_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Polynomial align_add(const Polynomial& a, const Polynomial& b, int sign) {
    auto vars = merge_vars(a.vars_, b.vars_);
    Polynomial ra = a.reindexed(vars);
    Polynomial rb = b.reindexed(vars);
    for (const auto& [e, c] : rb.terms_) {
        auto it = ra.terms_.find(e);
        if (it == ra.terms_.end())
            ra.terms_[e] = sign > 0 ? c : -c;
        else {
            if (sign > 0)
                it->second += c;
            else
                it->second -= c;
        }
    }
    ra.normalize();
    return ra;
}

Polynomial align_mul(const Polynomial& a, const Polynomial& b) {
    auto vars = merge_vars(a.vars_, b.vars_);
    Polynomial ra = a.reindexed(vars);
    Polynomial rb = b.reindexed(vars);
    Polynomial out;
    out.vars_ = vars;
    for (const auto& [ea, ca] : ra.terms_)
        for (const auto& [eb, cb] : rb.terms_) {
            Polynomial::Exponents e(vars.size());
            for (std::size_t i = 0; i < vars.size(); ++i) e[i] = ea[i] + eb[i];
            out.terms_[e] += ca * cb;
        }
    out.normalize();
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    *this = align_add(*this, o, +1);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    *this = align_add(*this, o, -1);
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    *this = align_mul(*this, o);
    return *this;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    if (c == 0) return Polynomial();
    Polynomial r = *this;
    for (auto& [e, cc] : r.terms_) cc *= c;
    return r;
}

Polynomial Polynomial::pow(int e) const {
    assert(e >= 0);
    Polynomial r(Rational(1));
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

int Polynomial::compare(const Polynomial& a, const Polynomial& b) {
    if (a.vars_ != b.vars_) return a.vars_ < b.vars_ ? -1 : 1;
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
        int c = cmp(ia->second, ib->second);
        if (c != 0) return c;
    }
    if (ia != a.terms_.end()) return 1;
    if (ib != b.terms_.end()) return -1;
    return 0;
}

std::pair<Polynomial::Exponents, Rational> Polynomial::leading_term() const {
    assert(!is_zero());
    auto it = terms_.rbegin();
    return {it->first, it->second};
}

Rational Polynomial::leading_coefficient() const { return leading_term().second; }

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return *this * (Rational(1) / leading_coefficient());
}

int Polynomial::degree(const std::string& var) const {
    if (is_zero()) return -1;
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) return 0;
    std::size_t idx = it - vars_.begin();
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
    return d;
}

int Polynomial::total_degree() const {
    if (is_zero()) return -1;
    int d = 0;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

Polynomial Polynomial::coeff_of(const std::string& var, int power) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) return power == 0 ? *this : Polynomial();
    std::size_t idx = it - vars_.begin();
    Polynomial r;
    r.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
        if (e[idx] != power) continue;
        Exponents ne = e;
        ne[idx] = 0;
        r.terms_[ne] = c;
    }
    r.normalize();
    return r;
}

Polynomial Polynomial::leading_coeff_in(const std::string& var) const {
    return coeff_of(var, degree(var));
}

std::vector<Polynomial> Polynomial::univariate_coeffs(const std::string& var) const {
    int d = std::max(0, degree(var));
    std::vector<Polynomial> out;
    out.reserve(d + 1);
    for (int i = 0; i <= d; ++i) out.push_back(coeff_of(var, i));
    return out;
}

Polynomial Polynomial::from_univariate(const std::string& var,
                                       const std::vector<Polynomial>& coeffs) {
    Polynomial x = Polynomial::variable(var);
    Polynomial r;
    for (std::size_t i = coeffs.size(); i-- > 0;) r = r * x + coeffs[i];
    return r;
}

Polynomial Polynomial::substitute(const std::string& var, const Polynomial& value) const {
    if (!depends_on(var)) return *this;
    auto coeffs = univariate_coeffs(var);
    Polynomial r;
    for (std::size_t i = coeffs.size(); i-- > 0;) r = r * value + coeffs[i];
    return r;
}

Polynomial Polynomial::shift(const std::string& var, const Rational& delta) const {
    if (delta == 0) return *this;
    return substitute(var, Polynomial::variable(var) + Polynomial(delta));
}

Rational Polynomial::eval(const std::map<std::string, Rational>& assignment) const {
    Rational total(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0) continue;
            auto it = assignment.find(vars_[i]);
            if (it == assignment.end())
                throw Error("eval: no value for variable " + vars_[i]);
            t *= rational_pow(it->second, e[i]);
        }
        total += t;
    }
    return total;
}

Polynomial Polynomial::eval_partial(const std::map<std::string, Rational>& point) const {
    std::vector<int> keep; // indices of variables kept symbolic
    std::vector<const Rational*> vals(vars_.size(), nullptr);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = point.find(vars_[i]);
        if (it == point.end())
            keep.push_back(int(i));
        else
            vals[i] = &it->second;
    }
    if (keep.size() == vars_.size()) return *this;
    Polynomial out;
    for (int i : keep) out.vars_.push_back(vars_[i]);
    for (const auto& [e, c] : terms_) {
        Rational v = c;
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vals[i] && e[i] != 0) v *= rational_pow(*vals[i], e[i]);
        if (v == 0) continue;
        Exponents ne(keep.size());
        for (std::size_t j = 0; j < keep.size(); ++j) ne[j] = e[keep[j]];
        out.terms_[ne] += v;
    }
    out.normalize();
    return out;
}

Rational Polynomial::rational_content() const {
    assert(!is_zero());
    Integer num_gcd(0), den_lcm(1);
    for (const auto& [e, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational c(num_gcd, den_lcm);
    c.canonicalize();
    if (c < 0) c = -c;
    return c;
}

Polynomial Polynomial::primitive_rational() const {
    if (is_zero()) return *this;
    return *this * (Rational(1) / rational_content());
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return Polynomial();
    if (b.is_constant()) return a * (Rational(1) / b.constant_value());
    auto vars = merge_vars(a.vars_, b.vars_);
    Polynomial r = a.reindexed(vars);
    Polynomial d = b.reindexed(vars);
    auto [lbe, lbc] = d.leading_term();
    Polynomial q;
    q.vars_ = vars;
    while (!r.terms_.empty()) {
        auto it = r.terms_.rbegin();
        Exponents qe(vars.size());
        for (std::size_t i = 0; i < vars.size(); ++i) {
            qe[i] = it->first[i] - lbe[i];
            if (qe[i] < 0) return std::nullopt;
        }
        Rational qc = it->second / lbc;
        Polynomial t;
        t.vars_ = vars;
        t.terms_[qe] = qc;
        q.terms_[qe] += qc;
        r = align_add(r, align_mul(t, d), -1);
        if (!r.is_zero() && r.vars_ != vars) r = r.reindexed(vars);
    }
    q.normalize();
    return q;
}

std::string Polynomial::str() const { return poly_to_string(*this); }

// ---------------------------------------------------------------------------
// GCD: primitive-part subresultant PRS.

namespace {

// Pseudo-remainder of a by b with respect to var: lc(b)^(da-db+1) * a mod b.
Polynomial pseudo_rem(const Polynomial& a, const Polynomial& b, const std::string& var) {
    int db = b.degree(var);
    Polynomial lb = b.leading_coeff_in(var);
    Polynomial r = a;
    int e = a.degree(var) - db + 1;
    while (!r.is_zero() && r.degree(var) >= db) {
        int dr = r.degree(var);
        Polynomial lr = r.leading_coeff_in(var);
        Polynomial shift_mono = Polynomial::variable(var).pow(dr - db);
        r = r * lb - lr * shift_mono * b;
        --e;
    }
    if (e > 0) r = r * lb.pow(e);
    return r;
}

// GCD of univariate polynomials over Q: primitive Euclid (content stripped
// after each pseudo-remainder, keeping the integer coefficients small).
Polynomial univariate_gcd(Polynomial a, Polynomial b, const std::string& var) {
    if (!a.is_zero()) a = a.primitive_rational();
    if (!b.is_zero()) b = b.primitive_rational();
    while (!b.is_zero()) {
        if (a.degree(var) < b.degree(var)) {
            std::swap(a, b);
            continue;
        }
        Polynomial r = pseudo_rem(a, b, var);
        a = b;
        b = r.is_zero() ? r : r.primitive_rational();
    }
    return a.monic();
}

std::map<std::string, Rational> probe_point(const std::vector<std::string>& vars,
                                            int attempt) {
    static const long nums[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
    std::map<std::string, Rational> point;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        long num = nums[(i + attempt * 3) % (sizeof(nums) / sizeof(long))];
        point[vars[i]] = Rational(num, 2 + long(i) + 3 * attempt);
    }
    return point;
}

// Sound coprimality probe: evaluate everything but var at a rational point.
// When both degrees survive and the univariate images are coprime, the gcd
// has no var-dependence (its leading coefficient divides the inputs' leading
// coefficients, so it cannot vanish at a degree-preserving point).
bool coprime_in_var_probe(const Polynomial& p, const Polynomial& q, const std::string& var) {
    std::vector<std::string> others;
    for (const auto& v : p.vars())
        if (v != var) others.push_back(v);
    for (const auto& v : q.vars())
        if (v != var && std::find(others.begin(), others.end(), v) == others.end())
            others.push_back(v);
    if (others.empty()) return false; // already univariate
    int shared_factor_seen = 0;
    for (int attempt = 0; attempt < 5; ++attempt) {
        auto point = probe_point(others, attempt);
        Polynomial ph = p.eval_partial(point);
        Polynomial qh = q.eval_partial(point);
        if (ph.degree(var) != p.degree(var) || qh.degree(var) != q.degree(var)) continue;
        Polynomial g = univariate_gcd(ph, qh, var);
        if (g.degree(var) == 0) return true;
        // One unlucky point on the resultant variety is possible; a second
        // independent hit means the factor is almost surely real, so stop
        // probing and let the PRS find it.
        if (++shared_factor_seen >= 2) return false;
    }
    return false;
}

// Probe that the gcd of a coefficient family is 1: for every symbol y the
// univariate images in y must be coprime (with a degree-preservation witness
// for soundness, as above).
bool family_coprime_probe(const std::vector<const Polynomial*>& polys) {
    std::vector<std::string> all_vars;
    for (const auto* p : polys)
        for (const auto& v : p->vars())
            if (std::find(all_vars.begin(), all_vars.end(), v) == all_vars.end())
                all_vars.push_back(v);
    if (all_vars.empty()) return true;
    for (const auto& y : all_vars) {
        std::vector<std::string> others;
        for (const auto& v : all_vars)
            if (v != y) others.push_back(v);
        bool y_free = false;
        for (int attempt = 0; attempt < 2 && !y_free; ++attempt) {
            auto point = probe_point(others, attempt);
            Polynomial g;
            bool degree_witness = false;
            for (const auto* p : polys) {
                Polynomial image = p->eval_partial(point);
                if (image.degree(y) == p->degree(y)) degree_witness = true;
                g = g.is_zero() ? image : univariate_gcd(g, image, y);
                if (degree_witness && !g.is_zero() && g.degree(y) == 0) break;
            }
            if (degree_witness && !g.is_zero() && g.degree(y) == 0) y_free = true;
        }
        if (!y_free) return false;
    }
    return true;
}

Polynomial content_in(const Polynomial& p, const std::string& var) {
    std::vector<Polynomial> coeffs = p.univariate_coeffs(var);
    std::vector<const Polynomial*> nonzero;
    for (const auto& c : coeffs)
        if (!c.is_zero()) nonzero.push_back(&c);
    if (nonzero.empty()) return Polynomial();
    if (nonzero.size() == 1) return nonzero.front()->monic();
    for (const auto* c : nonzero)
        if (c->is_constant()) return Polynomial(Rational(1));
    if (family_coprime_probe(nonzero)) return Polynomial(Rational(1));
    Polynomial c;
    for (const auto* coeff : nonzero) {
        c = poly_gcd(c, *coeff);
        if (c.is_one()) break;
    }
    return c;
}

} // namespace

Polynomial poly_gcd(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero()) return q.monic();
    if (q.is_zero()) return p.monic();
    if (p.is_constant() || q.is_constant()) return Polynomial(Rational(1));
    if (p == q) return p.monic();

    // Main variable: the most significant variable present in both (a common
    // factor only involves shared variables; none shared means gcd 1).
    std::string var;
    {
        std::vector<std::string> shared;
        std::set_intersection(p.vars().begin(), p.vars().end(), q.vars().begin(),
                              q.vars().end(), std::back_inserter(shared), variable_less);
        if (shared.empty()) return Polynomial(Rational(1));
        var = shared.front();
    }

    int dp = p.degree(var), dq = q.degree(var);
    if (dp == 0) return poly_gcd(p, content_in(q, var));
    if (dq == 0) return poly_gcd(content_in(p, var), q);

    // Univariate over Q: plain monic Euclid.
    if (p.vars().size() == 1 && q.vars().size() == 1 && p.vars() == q.vars())
        return univariate_gcd(p, q, var);

    if (coprime_in_var_probe(p, q, var)) {
        // No var-dependence in the gcd; only the contents can contribute.
        // Work on the smaller operand first: a constant content there makes
        // the expensive content of the big one unnecessary.
        const bool p_small = p.term_count() <= q.term_count();
        Polynomial cs = content_in(p_small ? p : q, var);
        if (cs.is_constant()) return Polynomial(Rational(1));
        return poly_gcd(cs, content_in(p_small ? q : p, var));
    }

    Polynomial cp = content_in(p, var);
    Polynomial cq = content_in(q, var);
    Polynomial c = poly_gcd(cp, cq);
    Polynomial A = *Polynomial::divide_exact(p, cp);
    Polynomial B = *Polynomial::divide_exact(q, cq);
    if (A.degree(var) < B.degree(var)) std::swap(A, B);

    // Primitive-part PRS: stripping the full content after each
    // pseudo-remainder keeps the coefficients near-minimal.
    for (;;) {
        Polynomial R = pseudo_rem(A, B, var);
        if (R.is_zero()) {
            Polynomial ppB = *Polynomial::divide_exact(B, content_in(B, var));
            return (c * ppB).monic();
        }
        if (R.degree(var) == 0) return c.monic();
        A = B;
        R = R.primitive_rational();
        B = *Polynomial::divide_exact(R, content_in(R, var));
    }
}

// ---------------------------------------------------------------------------
// Resultant and dispersion.

Polynomial determinant(std::vector<std::vector<Polynomial>> m) {
    const std::size_t n = m.size();
    if (n == 0) return Polynomial(Rational(1));
    int sign = 1;
    Polynomial prev(Rational(1));
    for (std::size_t c = 0; c + 1 < n; ++c) {
        if (m[c][c].is_zero()) {
            std::size_t r = c + 1;
            while (r < n && m[r][c].is_zero()) ++r;
            if (r == n) return Polynomial();
            std::swap(m[c], m[r]);
            sign = -sign;
        }
        for (std::size_t i = c + 1; i < n; ++i)
            for (std::size_t j = c + 1; j < n; ++j) {
                Polynomial t = m[c][c] * m[i][j] - m[i][c] * m[c][j];
                auto d = Polynomial::divide_exact(t, prev);
                assert(d.has_value());
                m[i][j] = *d;
            }
        prev = m[c][c];
    }
    Polynomial det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

Polynomial resultant(const Polynomial& p, const Polynomial& q, const std::string& var) {
    if (p.is_zero() || q.is_zero()) return Polynomial();
    int m = p.degree(var), n = q.degree(var);
    if (m == 0 && n == 0) return Polynomial(Rational(1));
    if (m == 0) return p.pow(n);
    if (n == 0) return q.pow(m);
    auto pc = p.univariate_coeffs(var); // pc[i] = coeff of var^i
    auto qc = q.univariate_coeffs(var);
    std::size_t size = m + n;
    std::vector<std::vector<Polynomial>> syl(size, std::vector<Polynomial>(size));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) syl[r][r + i] = pc[m - i];
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) syl[n + r][r + i] = qc[n - i];
    return determinant(std::move(syl));
}

namespace {

// Nonnegative integer roots of a univariate rational polynomial inside
// [0, bound], by exact evaluation.
std::vector<long> integer_roots_bounded(const Polynomial& g, const std::string& var,
                                        long bound) {
    std::vector<long> out;
    if (g.is_zero() || g.is_constant()) return out;
    auto coeffs = g.univariate_coeffs(var);
    for (long cand = 0; cand <= bound; ++cand) {
        Rational value(0);
        for (std::size_t i = coeffs.size(); i-- > 0;) {
            value *= cand;
            if (!coeffs[i].is_zero()) value += coeffs[i].constant_value();
        }
        if (value == 0) out.push_back(cand);
    }
    return out;
}

// Cauchy root bound 1 + max |a_i| / |a_d| of a univariate rational poly.
long cauchy_bound(const Polynomial& p, const std::string& var, long cap) {
    auto coeffs = p.univariate_coeffs(var);
    Rational lead = coeffs.back().constant_value();
    if (lead < 0) lead = -lead;
    Rational m(0);
    for (std::size_t i = 0; i + 1 < coeffs.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        Rational c = coeffs[i].constant_value();
        if (c < 0) c = -c;
        if (c > m) m = c;
    }
    Rational bound = Rational(1) + m / lead;
    Integer ceil_b = (bound.get_num() + bound.get_den() - 1) / bound.get_den();
    if (!ceil_b.fits_slong_p() || ceil_b.get_si() > cap) return cap;
    return ceil_b.get_si();
}

} // namespace

std::set<long> dispersion_set(const Polynomial& q, const Polynomial& s,
                              const std::string& var) {
    std::set<long> out;
    if (q.is_zero() || s.is_zero()) return out;
    if (q.degree(var) == 0 || s.degree(var) == 0) return out;

    const std::string j = "_j";
    Polynomial shifted_sym = s.substitute(var, Polynomial::variable(var) + Polynomial::variable(j));

    // Collect the symbols other than var.
    std::vector<std::string> others;
    for (const auto& v : q.vars())
        if (v != var) others.push_back(v);
    for (const auto& v : s.vars())
        if (v != var && std::find(others.begin(), others.end(), v) == others.end())
            others.push_back(v);

    // Integer-root candidates come from the resultant in j.  Computing it
    // with the symbols left in is exact but expensive; an evaluation
    // homomorphism at a degree-preserving rational point gives a univariate
    // image whose integer roots contain every true dispersion element
    // (res(j0) = 0 identically implies res(j0) = 0 at the point).  Every
    // candidate is then verified by a symbolic gcd, so false positives from
    // an unlucky point are filtered out.
    std::vector<long> candidates;
    bool have_candidates = false;
    static const long primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    for (int attempt = 0; attempt < 4 && !have_candidates; ++attempt) {
        std::map<std::string, Rational> point;
        for (std::size_t i = 0; i < others.size(); ++i) {
            long p = primes[(i + attempt * others.size()) % (sizeof(primes) / sizeof(long))];
            point[others[i]] = Rational(p, 2 + long(i) + attempt);
        }
        // Evaluate everything except var (and j, absent from q and s).
        Polynomial qh = q.eval_partial(point);
        Polynomial sh = shifted_sym.eval_partial(point);
        if (qh.degree(var) != q.degree(var) || sh.degree(var) != s.degree(var))
            continue; // degree dropped, try another point
        Polynomial res = resultant(qh, sh, var);
        if (res.is_zero()) continue;
        // Integer roots of res(j) are differences of roots of qh and of sh,
        // so the Cauchy bounds of the two images bound the scan.
        Polynomial sh0 = sh.substitute(j, Polynomial());
        long bound = cauchy_bound(qh, var, 1000000) + cauchy_bound(sh0, var, 1000000) + 1;
        candidates = integer_roots_bounded(res, j, bound);
        have_candidates = true;
    }
    if (!have_candidates) {
        // Degenerate inputs: fall back to the fully symbolic resultant.
        Polynomial res = resultant(q, shifted_sym, var);
        // A candidate must annihilate every parameter-monomial component.
        std::map<std::string, Polynomial> components;
        Polynomial jvar = Polynomial::variable(j);
        std::size_t j_idx = 0;
        bool has_j = false;
        for (std::size_t i = 0; i < res.vars().size(); ++i)
            if (res.vars()[i] == j) {
                j_idx = i;
                has_j = true;
            }
        for (const auto& [e, coeff] : res.terms()) {
            std::string key;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (has_j && i == j_idx) continue;
                if (e[i] != 0) key += res.vars()[i] + "^" + std::to_string(e[i]) + " ";
            }
            int jpow = has_j ? e[j_idx] : 0;
            components[key] += Polynomial(coeff) * jvar.pow(jpow);
        }
        Polynomial g;
        for (auto& [key, comp] : components) {
            g = poly_gcd(g, comp);
            if (g.is_constant()) break;
        }
        candidates = integer_roots_bounded(g, j, 4096);
    }

    for (long cand : candidates) {
        if (cand < 0) continue;
        Polynomial sj = s.shift(var, Rational(cand));
        Polynomial gg = poly_gcd(q, sj);
        if (!gg.is_constant()) out.insert(cand);
    }
    return out;
}

} // namespace hypsum
