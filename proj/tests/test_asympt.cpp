#include <doctest.h>

#include <cmath>

#include "hypsum/asympt.hpp"
#include "hypsum/database.hpp"
#include "hypsum/expr.hpp"
#include "hypsum/prover.hpp"

using namespace hypsum;

namespace {

Polynomial P(const char* s) { return parse_polynomial(s); }

} // namespace

TEST_CASE("k growth exponent: Kummer F and the basic Gamma ratio") {
    ShiftedTheorem sh = shift_theorem(find_theorem("kummer")->spec);
    GrowthEstimate g = k_growth_exponent(sh.big_f);
    CHECK(g.kind == GrowthEstimate::PolynomialGrowth);
    CHECK(g.exponent == P("2*b-2"));
    CHECK(g.has_positive_factor);

    HyperTerm ratio = HyperTerm::gamma_product(
        {{AffineArg{0, 1, P("a")}, 1}, {AffineArg{0, 1, P("b")}, -1}});
    CHECK(k_growth_exponent(ratio).exponent == P("a-b"));
}

TEST_CASE("k growth exponent: error paths") {
    // unbalanced: Gamma(a+k) alone grows super-polynomially
    HyperTerm unbalanced = HyperTerm::gamma_product({{AffineArg{0, 1, P("a")}, 1}});
    CHECK_THROWS_AS(k_growth_exponent(unbalanced), UnsupportedError);
    // non-unit k coefficient
    HyperTerm doubled = HyperTerm::gamma_product(
        {{AffineArg{0, 2, P("a")}, 1}, {AffineArg{0, 2, P("b")}, -1}});
    CHECK_THROWS_AS(k_growth_exponent(doubled), UnsupportedError);
    // |z| < 1 reports decay instead
    HyperTerm decay = HyperTerm::from_pfq({P("a")}, {P("b")}, Rational(1, 2));
    CHECK(k_growth_exponent(decay).kind == GrowthEstimate::SuperDecay);
    HyperTerm grow = HyperTerm::from_pfq({P("a")}, {P("b")}, Rational(2));
    CHECK(k_growth_exponent(grow).kind == GrowthEstimate::SuperGrowth);
}

TEST_CASE("k limit zero: conditions in canonical form") {
    ShiftedTheorem sh = shift_theorem(find_theorem("kummer")->spec);
    auto [zero, conds] = k_limit_zero(sh.big_f);
    CHECK(zero);
    REQUIRE(conds.size() == 1);
    CHECK(conds[0] == parse_condition("Re(b) < 1"));
    CHECK(conds[0].str() == "Re(b) < 1");

    // k-free term has exponent 0: no decay
    HyperTerm constant = HyperTerm::gamma_product({{AffineArg{0, 0, P("a")}, 1}});
    auto [z2, c2] = k_limit_zero(constant);
    CHECK(!z2);
    CHECK(c2.empty());
}

TEST_CASE("k limit zero: numeric decay of the Bailey G term") {
    ShiftedTheorem sh = shift_theorem(find_theorem("bailey")->spec);
    auto cert = wz_pair(sh.big_f);
    REQUIRE(cert.has_value());
    HyperTerm g = sh.big_f.with_prefactor(sh.big_f.prefactor() * cert->c);
    auto [zero, conds] = k_limit_zero(g);
    CHECK(zero);
    // numerically: |G| at a=1/4, b=1/3, n=2 shrinks over k up to 1e4
    PrecisionConfig cfg;
    const long w = cfg.working_bits();
    std::map<std::string, BigFloat> asgn{{"a", BigFloat::from_rational(Rational(1, 4), w)},
                                         {"b", BigFloat::from_rational(Rational(1, 3), w)},
                                         {"n", BigFloat::from_long(2, w)}};
    BigFloat early = evaluate(g, asgn, 10, cfg).abs();
    BigFloat late = evaluate(g, asgn, 10000, cfg).abs();
    CHECK(cmp(late, early) < 0);
    CHECK(late.to_double() < 1e-100); // (1/2)^k crushes it
}

TEST_CASE("k growth exponent: log-slope test over k in [1e3, 1e5]") {
    ShiftedTheorem sh = shift_theorem(find_theorem("kummer")->spec);
    GrowthEstimate g = k_growth_exponent(sh.big_f);
    PrecisionConfig cfg;
    const long w = cfg.working_bits();
    std::map<std::string, Rational> pt{{"a", Rational(1, 4)}, {"b", Rational(1, 3)},
                                       {"n", Rational(2)}};
    std::map<std::string, BigFloat> asgn;
    for (const auto& [k2, v] : pt) asgn[k2] = BigFloat::from_rational(v, w);
    double alpha = g.exponent.eval(pt).get_d();
    double l1 = std::log(std::fabs(evaluate(sh.big_f, asgn, 1000, cfg).to_double()));
    double l2 = std::log(std::fabs(evaluate(sh.big_f, asgn, 100000, cfg).to_double()));
    double slope = (l2 - l1) / (std::log(100000.0) - std::log(1000.0));
    CHECK(std::fabs(slope - alpha) < 0.05);
}

TEST_CASE("n limit: Kummer finite limit term, symbol for symbol") {
    ShiftedTheorem sh = shift_theorem(find_theorem("kummer")->spec);
    LimitResult lim = n_limit(sh.big_f);
    CHECK(lim.kind == LimitResult::Finite);
    REQUIRE(lim.limit_term.has_value());
    HyperTerm expect =
        HyperTerm::from_pfq({P("b")}, {}, Rational(-1)).times_const_base(Rational(2), P("b"));
    CHECK(*lim.limit_term == expect);
}

TEST_CASE("n limit: Bailey and Dixon give the Kronecker delta") {
    CHECK(n_limit(shift_theorem(find_theorem("bailey")->spec).big_f).kind ==
          LimitResult::DeltaK0);
    CHECK(n_limit(shift_theorem(find_theorem("dixon")->spec).big_f).kind ==
          LimitResult::DeltaK0);
}

TEST_CASE("n limit: n-free term is its own limit") {
    HyperTerm t = HyperTerm::from_pfq({P("a")}, {P("b")}, Rational(1, 2));
    LimitResult lim = n_limit(t);
    CHECK(lim.kind == LimitResult::Finite);
    CHECK(*lim.limit_term == t);
}

TEST_CASE("n limit: numeric extrapolation matches the finite limit term") {
    ShiftedTheorem sh = shift_theorem(find_theorem("kummer")->spec);
    LimitResult lim = n_limit(sh.big_f);
    REQUIRE(lim.limit_term.has_value());
    PrecisionConfig cfg;
    const long w = cfg.working_bits();
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> draw(-12, 12);
    int tested = 0;
    for (int s = 0; s < 12 && tested < 5; ++s) {
        Rational av(draw(rng), 8), bv(draw(rng), 8);
        av.canonicalize();
        bv.canonicalize();
        if (is_nonpositive_integer(bv)) continue;
        std::map<std::string, BigFloat> asgn{{"a", BigFloat::from_rational(av, w)},
                                             {"b", BigFloat::from_rational(bv, w)}};
        ++tested;
        for (long k = 0; k <= 5; ++k) {
            BigFloat expect = evaluate(*lim.limit_term, asgn, k, cfg);
            // F(n,k) at n = 2^12 should be within ~1/n of the limit
            auto asgn_n = asgn;
            asgn_n["n"] = BigFloat::from_long(4096, w);
            BigFloat got = evaluate(sh.big_f, asgn_n, k, cfg);
            double rel = ((got - expect) / expect).abs().to_double();
            CHECK(rel < 0.01);
        }
    }
    CHECK(tested == 5);
}

TEST_CASE("delta classification numerically: F(n,0) -> 1, F(n,k>0) -> 0") {
    ShiftedTheorem sh = shift_theorem(find_theorem("bailey")->spec);
    PrecisionConfig cfg;
    const long w = cfg.working_bits();
    std::map<std::string, BigFloat> asgn{{"a", BigFloat::from_rational(Rational(1, 4), w)},
                                         {"b", BigFloat::from_rational(Rational(1, 3), w)}};
    asgn["n"] = BigFloat::from_long(1 << 12, w);
    CHECK(((evaluate(sh.big_f, asgn, 0, cfg) - BigFloat::from_long(1, w)).abs()).to_double() < 0.01);
    for (long k = 1; k <= 3; ++k)
        CHECK(evaluate(sh.big_f, asgn, k, cfg).abs().to_double() < 0.01);
}

TEST_CASE("domination: Kummer pairing and summability conditions") {
    ShiftedTheorem sh = shift_theorem(find_theorem("kummer")->spec);
    LimitResult lim = n_limit(sh.big_f);
    DominationReport rep = domination_check(sh.f, sh.s, lim);
    CHECK(rep.ok);
    REQUIRE(rep.pairs.size() >= 1);
    // the pairing |a+2n+i| <= |1+a+2n-b+i| needs Re(b-1) <= 0
    bool found_pairing = false;
    for (const auto& p : rep.pairs)
        if (p.condition && *p.condition == Condition(P("b-1"), false)) found_pairing = true;
    CHECK(found_pairing);
    REQUIRE(rep.summability.has_value());
    CHECK(*rep.summability == parse_condition("Re(b) < 0"));
}

TEST_CASE("domination: n-free term dominated by itself") {
    HyperTerm t = HyperTerm::from_pfq({P("a")}, {P("b")}, Rational(1, 2));
    LimitResult lim = n_limit(t);
    HyperTerm s_triv = HyperTerm::one();
    DominationReport rep = domination_check(t, s_triv, lim);
    CHECK(rep.ok);
    CHECK(rep.bound_decays); // |z| < 1
}

TEST_CASE("domination: Bailey majorant numerically bounds |F|") {
    ShiftedTheorem sh = shift_theorem(find_theorem("bailey")->spec);
    LimitResult lim = n_limit(sh.big_f);
    DominationReport rep = domination_check(sh.f, sh.s, lim);
    CHECK(rep.ok);
    // |F(n,k)| <= A * (majorant), majorant = |(a)_k (1-a)_k / k!| (1/2)^k here;
    // spot check |F| <= 2 * bound for n in 5..20, k <= 100
    PrecisionConfig cfg;
    const long w = cfg.working_bits();
    std::map<std::string, BigFloat> asgn{{"a", BigFloat::from_rational(Rational(1, 4), w)},
                                         {"b", BigFloat::from_rational(Rational(1, 3), w)}};
    HyperTerm bound_term = HyperTerm::from_pfq({P("a"), P("1-a")}, {}, Rational(1, 2));
    for (long n = 5; n <= 20; n += 5) {
        auto asgn_n = asgn;
        asgn_n["n"] = BigFloat::from_long(n, w);
        for (long k = 0; k <= 100; k += 20) {
            BigFloat f_val = evaluate(sh.big_f, asgn_n, k, cfg).abs();
            BigFloat bound = evaluate(bound_term, asgn, k, cfg).abs();
            CHECK(cmp(f_val, bound * BigFloat::from_long(2, w)) < 0);
        }
    }
}

TEST_CASE("conditions print canonically and deduplicate deterministically") {
    Condition c1(P("2*b-2"), true);
    CHECK(c1.str() == "Re(b) < 1");
    Condition c2(P("2*b+2*c-a-2"), true);
    CHECK(c2.str() == "Re(a - 2*b - 2*c + 2) > 0");
    CHECK(c2 == parse_condition("Re(2+a-2*b-2*c) > 0"));
    // tightest bound wins within a direction
    auto simplified = simplify_conditions({parse_condition("Re(b) < 1"),
                                           parse_condition("Re(b) < 0"),
                                           parse_condition("Re(b) <= 0")});
    REQUIRE(simplified.size() == 1);
    CHECK(simplified[0] == parse_condition("Re(b) < 0"));
    // trivially true conditions vanish
    CHECK(simplify_conditions({Condition(P("-1"), true)}).empty());
}
