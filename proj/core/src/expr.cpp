#include "hypsum/expr.hpp"

#include <cctype>
#include <sstream>

#include "hypsum/errors.hpp"

namespace hypsum {

namespace {

struct Parser {
    const std::string& text;
    std::size_t pos = 0;

    explicit Parser(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& what) {
        throw ParseError("parse error at offset " + std::to_string(pos) + ": " + what);
    }

    RationalFunction parse_expr() {
        RationalFunction r = parse_term();
        for (;;) {
            if (eat('+'))
                r += parse_term();
            else if (eat('-'))
                r -= parse_term();
            else
                return r;
        }
    }

    RationalFunction parse_term() {
        RationalFunction r = parse_factor();
        for (;;) {
            if (eat('*'))
                r *= parse_factor();
            else if (eat('/'))
                r /= parse_factor();
            else
                return r;
        }
    }

    RationalFunction parse_factor() {
        if (eat('-')) return -parse_factor();
        if (eat('+')) return parse_factor();
        RationalFunction base = parse_primary();
        if (eat('^')) {
            bool neg = eat('-');
            std::string digits = read_digits();
            if (digits.empty()) fail("expected integer exponent");
            long e = std::stol(digits);
            base = base.pow(neg ? -int(e) : int(e));
        }
        return base;
    }

    std::string read_digits() {
        skip_ws();
        std::string out;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            out += text[pos++];
        return out;
    }

    RationalFunction parse_primary() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input");
        char c = text[pos];
        if (c == '(') {
            ++pos;
            RationalFunction r = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits = read_digits();
            return RationalFunction(Rational(Integer(digits)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                name += text[pos++];
            return RationalFunction::variable(name);
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

std::string monomial_to_string(const std::vector<std::string>& vars,
                               const Polynomial::Exponents& e, const Rational& coeff,
                               bool leading) {
    std::ostringstream os;
    Rational c = coeff;
    bool negative = c < 0;
    if (negative) c = -c;
    if (leading) {
        if (negative) os << "-";
    } else {
        os << (negative ? " - " : " + ");
    }
    bool has_var = false;
    for (int x : e)
        if (x != 0) has_var = true;
    if (c != 1 || !has_var) {
        os << rational_to_string(c);
        if (has_var) os << "*";
    }
    bool first = true;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (e[i] == 0) continue;
        if (!first) os << "*";
        os << vars[i];
        if (e[i] != 1) os << "^" << e[i];
        first = false;
    }
    return os.str();
}

} // namespace

RationalFunction parse_rational_function(const std::string& text) {
    Parser p(text);
    RationalFunction r = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return r;
}

Polynomial parse_polynomial(const std::string& text) {
    RationalFunction r = parse_rational_function(text);
    if (!r.den().is_constant())
        throw ParseError("expected polynomial, got nonconstant denominator in: " + text);
    return r.num() * (Rational(1) / r.den().constant_value());
}

Rational parse_rational(const std::string& text) {
    RationalFunction r = parse_rational_function(text);
    if (!r.is_constant()) throw ParseError("expected rational constant in: " + text);
    return r.constant_value();
}

std::string rational_to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

Rational rational_pow(const Rational& r, long e) {
    if (e == 0) return Rational(1);
    bool neg = e < 0;
    unsigned long ae = neg ? -e : e;
    Rational out;
    mpz_pow_ui(out.get_num().get_mpz_t(), r.get_num().get_mpz_t(), ae);
    mpz_pow_ui(out.get_den().get_mpz_t(), r.get_den().get_mpz_t(), ae);
    out.canonicalize();
    if (neg) {
        if (out == 0) throw Error("0 raised to a negative power");
        out = Rational(1) / out;
    }
    return out;
}

std::string poly_to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool leading = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        os << monomial_to_string(p.vars(), it->first, it->second, leading);
        leading = false;
    }
    return os.str();
}

std::string rf_to_string(const RationalFunction& r) {
    if (r.den().is_one()) return poly_to_string(r.num());
    std::string num = poly_to_string(r.num());
    std::string den = poly_to_string(r.den());
    if (r.num().term_count() > 1) num = "(" + num + ")";
    if (r.den().term_count() > 1 || r.den().total_degree() > 0) den = "(" + den + ")";
    return num + "/" + den;
}

} // namespace hypsum
