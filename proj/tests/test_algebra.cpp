#include <doctest.h>

#include <random>

#include "hypsum/expr.hpp"
#include "hypsum/linear_algebra.hpp"
#include "hypsum/polynomial.hpp"
#include "hypsum/rational_function.hpp"

using namespace hypsum;

namespace {

Polynomial P(const char* s) { return parse_polynomial(s); }
RationalFunction RF(const char* s) { return parse_rational_function(s); }

// Small random polynomial over the given variables.
Polynomial random_poly(std::mt19937_64& rng, const std::vector<std::string>& vars,
                       int max_deg = 2, int terms = 3) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> deg(0, max_deg);
    Polynomial p;
    for (int t = 0; t < terms; ++t) {
        Polynomial mono{Rational(coeff(rng))};
        for (const auto& v : vars) mono *= Polynomial::variable(v).pow(deg(rng));
        p += mono;
    }
    return p;
}

} // namespace

TEST_CASE("polynomial arithmetic basics") {
    Polynomial k = Polynomial::variable("k");
    Polynomial a = Polynomial::variable("a");
    CHECK((k + a) * (k - a) == k * k - a * a);
    CHECK((k - k).is_zero());
    CHECK(P("(k+1)^3") == k.pow(3) + Polynomial(3L) * k * k + Polynomial(3L) * k + Polynomial(1L));
    CHECK(P("k+a").shift("k", Rational(2)) == P("k+a+2"));
    CHECK(P("k^2").substitute("k", P("a+1")) == P("a^2+2*a+1"));
    // compacting: unused variables disappear from the representation
    CHECK((k + a - a).vars() == std::vector<std::string>{"k"});
}

TEST_CASE("gcd: stated examples") {
    // common factor by construction
    CHECK(poly_gcd(P("k^2-1"), P("k-1")) == P("k-1"));
    // identity case: gcd(p, 0) is p normalized monic
    CHECK(poly_gcd(P("3*k+3"), Polynomial()) == P("k+1"));
    CHECK(poly_gcd(Polynomial(), Polynomial()).is_zero());
    // multiply-then-gcd round trip, verified by exact trial division
    Polynomial g = poly_gcd(P("(k+a)*(k+b)"), P("(k+a)*(k+1)"));
    CHECK(g == P("k+a"));
    CHECK(Polynomial::divide_exact(P("(k+a)*(k+b)"), g).has_value());
    CHECK(Polynomial::divide_exact(P("(k+a)*(k+1)"), g).has_value());
}

TEST_CASE("gcd: gcd(p*r, q*r) is an associate of r*gcd(p, q)") {
    std::mt19937_64 rng(7);
    const std::vector<std::string> vars{"k", "a"};
    int nontrivial = 0;
    for (int iter = 0; iter < 40; ++iter) {
        Polynomial p = random_poly(rng, vars), q = random_poly(rng, vars),
                   r = random_poly(rng, vars);
        if (p.is_zero() || q.is_zero() || r.is_zero()) continue;
        Polynomial lhs = poly_gcd(p * r, q * r);
        Polynomial rhs = (r * poly_gcd(p, q)).monic();
        CHECK(lhs == rhs);
        if (!rhs.is_constant()) ++nontrivial;
    }
    CHECK(nontrivial > 10);
}

TEST_CASE("resultant: linear case and conventions") {
    // res(k-a, k-b) with res(p,q) = lc(p)^deg(q) * prod q(roots of p)
    CHECK(resultant(P("k-a"), P("k-b"), "k") == P("a-b"));
    // shared factor gives zero
    CHECK(resultant(P("(k+a)*(k+1)"), P("(k+a)*(k+2)"), "k").is_zero());
    CHECK(resultant(P("k+a"), P("k+a"), "k").is_zero());
    // evaluation-at-roots oracle: res((k+1)(k+2), k+3) = p(-3) = (-2)(-1) = 2
    CHECK(resultant(P("(k+1)*(k+2)"), P("k+3"), "k") == Polynomial(2L));
    // degenerate: both constant
    CHECK(resultant(P("5"), P("7"), "k") == Polynomial(1L));
}

TEST_CASE("resultant: evaluation-at-roots oracle on random products") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> root(-5, 5);
    for (int iter = 0; iter < 20; ++iter) {
        long r1 = root(rng), r2 = root(rng), r3 = root(rng);
        Polynomial k = Polynomial::variable("k");
        Polynomial p = (k - Polynomial(r1)) * (k - Polynomial(r2));
        Polynomial q = k - Polynomial(r3);
        // res(p, q) = p evaluated at the root of q, times lc(q)^deg(p) = 1
        Rational expect = Rational((r3 - r1) * (r3 - r2));
        CHECK(resultant(p, q, "k").constant_value() == expect);
    }
}

TEST_CASE("dispersion set: stated examples") {
    CHECK(dispersion_set(P("k"), P("k-3"), "k") == std::set<long>{3});
    // independent symbols never meet under integer shifts
    CHECK(dispersion_set(P("k+a"), P("k+b"), "k").empty());
    CHECK(dispersion_set(P("k*(k+a)"), P("(k-2)*(k+a-5)"), "k") == std::set<long>{2, 5});
}

TEST_CASE("dispersion set agrees with brute-force shift-gcd scan") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long> root(-4, 4);
    Polynomial k = Polynomial::variable("k");
    Polynomial a = Polynomial::variable("a");
    for (int iter = 0; iter < 15; ++iter) {
        Polynomial q = (k + Polynomial(root(rng))) * (k + a + Polynomial(root(rng)));
        Polynomial s = (k + Polynomial(root(rng))) * (k + a + Polynomial(root(rng)));
        std::set<long> fast = dispersion_set(q, s, "k");
        std::set<long> brute;
        for (long j = 0; j <= 10; ++j)
            if (!poly_gcd(q, s.shift("k", Rational(j))).is_constant()) brute.insert(j);
        CHECK(fast == brute);
    }
}

TEST_CASE("rational function field behaviour") {
    RationalFunction x = RF("(k+a)/(k+b)");
    CHECK(x * x.inverse() == RationalFunction(Rational(1)));
    CHECK((x - x).is_zero());
    // normalization is idempotent and equality is representational
    CHECK(RF("(k^2-1)/(k-1)") == RF("k+1"));
    CHECK(RF("(2*k+2)/(2)") == RF("k+1"));
    // canonical denominator is monic under the global order
    RationalFunction y = RF("k/(3*n+6)");
    CHECK(y.den().leading_coefficient() == 1);
    CHECK(y == RF("(1/3*k)/(n+2)"));
}

TEST_CASE("rational function field: (x/y)*(y/x) = 1 randomized") {
    std::mt19937_64 rng(31);
    const std::vector<std::string> vars{"k", "a", "b"};
    for (int iter = 0; iter < 25; ++iter) {
        Polynomial xp = random_poly(rng, vars), yp = random_poly(rng, vars);
        if (xp.is_zero() || yp.is_zero()) continue;
        RationalFunction x(xp), y(yp);
        CHECK((x / y) * (y / x) == RationalFunction(Rational(1)));
    }
}

TEST_CASE("linear solve: stated examples") {
    RationalFunction one(Rational(1)), zero;
    // identity matrix
    {
        RFMatrix a = {{one, zero}, {zero, one}};
        RFVector b = {RF("a"), RF("b")};
        auto x = linear_solve(a, b);
        REQUIRE(x.has_value());
        CHECK((*x)[0] == RF("a"));
        CHECK((*x)[1] == RF("b"));
    }
    // diagonal a: [[a,0],[0,a]] x = [a, 2a] -> [1, 2]
    {
        RFMatrix m = {{RF("a"), zero}, {zero, RF("a")}};
        RFVector b = {RF("a"), RF("2*a")};
        auto x = linear_solve(m, b);
        REQUIRE(x.has_value());
        CHECK((*x)[0] == one);
        CHECK((*x)[1] == RF("2"));
    }
    // inconsistent
    {
        RFMatrix m = {{one, one}, {one, one}};
        RFVector b = {one, RF("2")};
        CHECK(!linear_solve(m, b).has_value());
    }
    // underdetermined: free variables pinned to zero
    {
        RFMatrix m = {{one, one}};
        RFVector b = {RF("a")};
        auto x = linear_solve(m, b);
        REQUIRE(x.has_value());
        CHECK((*x)[0] == RF("a"));
        CHECK((*x)[1].is_zero());
    }
}

TEST_CASE("linear solve: residual-check oracle on random 4x4 systems") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> cv(-5, 5);
    for (int iter = 0; iter < 10; ++iter) {
        RFMatrix m(4, RFVector(4));
        RFVector b(4);
        for (int i = 0; i < 4; ++i) {
            b[i] = RationalFunction(Rational(cv(rng)));
            for (int j = 0; j < 4; ++j) {
                Polynomial e{Rational(cv(rng))};
                if ((i + j) % 3 == 0) e += Polynomial::variable("a") * Rational(cv(rng));
                m[i][j] = RationalFunction(e);
            }
        }
        auto x = linear_solve(m, b);
        if (!x) continue; // singular draw
        for (int i = 0; i < 4; ++i) {
            RationalFunction acc;
            for (int j = 0; j < 4; ++j) acc += m[i][j] * (*x)[j];
            CHECK(acc == b[i]); // exact zero residual
        }
    }
}

TEST_CASE("kernel basis spans the kernel") {
    RFMatrix m = {{RF("1"), RF("1"), RF("a")}};
    auto basis = kernel_basis(m);
    CHECK(basis.size() == 2);
    for (const auto& v : basis) {
        RationalFunction acc;
        for (std::size_t j = 0; j < 3; ++j) acc += m[0][j] * v[j];
        CHECK(acc.is_zero());
    }
}
