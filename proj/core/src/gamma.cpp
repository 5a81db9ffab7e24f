#include "hypsum/gamma.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "hypsum/errors.hpp"

namespace hypsum {

namespace {

struct SpougeTable {
    long a;
    mpfr_prec_t prec;
    std::vector<BigFloat> c; // c[0] = sqrt(2*pi), c[1..a-1]
};

long spouge_a_for(long bits) {
    // Want a^(-1/2) * (2*pi)^(-(a+1/2)) <= 2^-(bits+8).
    const double l2pi = std::log2(2.0 * M_PI);
    long a = 3;
    while (0.5 * std::log2(double(a)) + (double(a) + 0.5) * l2pi < double(bits) + 8.0) ++a;
    return a;
}

std::shared_ptr<const SpougeTable> spouge_table(long bits) {
    static std::mutex mu;
    static std::map<long, std::shared_ptr<const SpougeTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(bits);
    if (it != cache.end()) return it->second;

    auto t = std::make_shared<SpougeTable>();
    t->a = spouge_a_for(bits);
    t->prec = bits + 64;
    const mpfr_prec_t w = t->prec;
    BigFloat two_pi = pi_value(w) * BigFloat::from_long(2, w);
    t->c.push_back(two_pi.sqrt());
    BigFloat factorial = BigFloat::from_long(1, w); // (j-1)!
    for (long j = 1; j < t->a; ++j) {
        if (j > 1) factorial *= BigFloat::from_long(j - 1, w);
        BigFloat base = BigFloat::from_long(t->a - j, w);
        BigFloat half = BigFloat::from_rational(Rational(2 * j - 1, 2), w);
        BigFloat term = base.pow(half) * base.exp() / factorial;
        if (j % 2 == 0) term = -term;
        t->c.push_back(term);
    }
    cache[bits] = t;
    return t;
}

} // namespace

BigFloat gamma_hp(const BigFloat& x, const PrecisionConfig& cfg) {
    if (x.sign() <= 0 && x.is_integer())
        throw PoleError("gamma pole at " + x.str(6));
    auto table = spouge_table(cfg.mantissa_bits);
    const mpfr_prec_t w = table->prec;
    BigFloat half = BigFloat::from_rational(Rational(1, 2), w);

    BigFloat xe(w);
    mpfr_set(xe.raw(), x.raw(), MPFR_RNDN);
    if (cmp(xe, half) < 0) {
        // Reflection: Gamma(x) = pi / (sin(pi x) * Gamma(1 - x)).
        BigFloat s = sin_pi(xe);
        if (s.is_zero()) throw PoleError("gamma pole at " + x.str(6));
        BigFloat one_minus = BigFloat::from_long(1, w) - xe;
        return pi_value(w) / (s * gamma_hp(one_minus, cfg));
    }

    BigFloat z = xe - BigFloat::from_long(1, w);
    BigFloat acc = table->c[0];
    for (long j = 1; j < table->a; ++j)
        acc += table->c[j] / (z + BigFloat::from_long(j, w));
    BigFloat za = z + BigFloat::from_long(table->a, w);
    BigFloat result = za.pow(z + half) * (-za).exp() * acc;
    return result;
}

Rational gamma_exact_integer(long x) {
    if (x <= 0) throw PoleError("gamma pole at integer " + std::to_string(x));
    Integer f(1);
    for (long i = 2; i < x; ++i) f *= i;
    return Rational(f);
}

} // namespace hypsum
