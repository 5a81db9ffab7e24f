#include "hypsum/condition.hpp"

#include <algorithm>
#include <sstream>

#include "hypsum/errors.hpp"
#include "hypsum/expr.hpp"

namespace hypsum {

Condition::Condition(Polynomial l, bool s) : linear(std::move(l)), strict(s) {
    if (!linear.is_zero()) {
        Rational c = linear.rational_content();
        if (c != 1) linear = linear * (Rational(1) / c);
    }
}

bool Condition::is_trivially_true() const {
    if (!linear.is_constant()) return false;
    Rational v = linear.constant_value();
    return strict ? v < 0 : v <= 0;
}

bool Condition::is_trivially_false() const {
    if (!linear.is_constant()) return false;
    return !is_trivially_true();
}

bool Condition::holds_at(const std::map<std::string, Rational>& point) const {
    Rational v = linear.eval(point);
    return strict ? v < 0 : v <= 0;
}

static Rational constant_term_of(const Polynomial& p) {
    if (p.is_zero()) return Rational(0);
    Polynomial::Exponents zero(p.vars().size(), 0);
    auto it = p.terms().find(zero);
    return it == p.terms().end() ? Rational(0) : it->second;
}

std::string Condition::str() const {
    const char* lt = strict ? " < " : " <= ";
    const char* gt = strict ? " > " : " >= ";
    if (linear.is_constant())
        return "Re(" + poly_to_string(linear) + ")" + lt + "0";
    Rational c0 = constant_term_of(linear);
    Polynomial param_part = linear - Polynomial(c0);
    std::ostringstream os;
    if (param_part.leading_coefficient() > 0) {
        os << "Re(" << poly_to_string(param_part) << ")" << lt << rational_to_string(-c0);
    } else {
        os << "Re(" << poly_to_string(-linear) << ")" << gt << "0";
    }
    return os.str();
}

Condition parse_condition(const std::string& text) {
    auto re_pos = text.find("Re(");
    if (re_pos == std::string::npos) throw ParseError("condition must contain Re(...): " + text);
    // Find the matching close paren.
    std::size_t depth = 0, i = re_pos + 2, close = std::string::npos;
    for (; i < text.size(); ++i) {
        if (text[i] == '(') ++depth;
        if (text[i] == ')') {
            --depth;
            if (depth == 0) {
                close = i;
                break;
            }
        }
    }
    if (close == std::string::npos) throw ParseError("unbalanced Re(...) in: " + text);
    Polynomial inner = parse_polynomial(text.substr(re_pos + 3, close - re_pos - 3));
    std::string rest = text.substr(close + 1);
    std::size_t p = rest.find_first_not_of(" \t");
    if (p == std::string::npos) throw ParseError("missing relation in: " + text);
    bool greater;
    bool strict = true;
    if (rest[p] == '<')
        greater = false;
    else if (rest[p] == '>')
        greater = true;
    else
        throw ParseError("expected < or > in: " + text);
    ++p;
    if (p < rest.size() && rest[p] == '=') {
        strict = false;
        ++p;
    }
    Polynomial bound = parse_polynomial(rest.substr(p));
    Polynomial lin = greater ? bound - inner : inner - bound;
    return Condition(lin, strict);
}

std::vector<Condition> simplify_conditions(std::vector<Condition> conds) {
    std::vector<Condition> kept;
    for (auto& c : conds) {
        if (c.is_trivially_true()) continue;
        kept.push_back(std::move(c));
    }
    // Group by direction vector (linear minus constant term); keep tightest.
    std::vector<Condition> out;
    for (const auto& c : kept) {
        Rational c0 = constant_term_of(c.linear);
        Polynomial dir = c.linear - Polynomial(c0);
        bool merged = false;
        for (auto& existing : out) {
            Rational e0 = constant_term_of(existing.linear);
            Polynomial edir = existing.linear - Polynomial(e0);
            if (edir == dir) {
                // Re(dir) < -c0 vs Re(dir) < -e0: larger constant is tighter.
                if (c0 > e0 || (c0 == e0 && c.strict && !existing.strict)) existing = c;
                merged = true;
                break;
            }
        }
        if (!merged) out.push_back(c);
    }
    std::sort(out.begin(), out.end(),
              [](const Condition& a, const Condition& b) { return a.str() < b.str(); });
    return out;
}

std::vector<Condition> shift_conditions(const std::vector<Condition>& conds,
                                        const std::string& param, const Rational& delta) {
    std::vector<Condition> out;
    out.reserve(conds.size());
    for (const auto& c : conds)
        out.emplace_back(c.linear.shift(param, delta), c.strict);
    return simplify_conditions(out);
}

} // namespace hypsum
