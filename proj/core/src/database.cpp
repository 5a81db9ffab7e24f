#include "hypsum/database.hpp"

#include "hypsum/expr.hpp"

namespace hypsum {

namespace {

GammaFactor g(int sign, const char* arg) {
    return {AffineArg{0, 0, parse_polynomial(arg)}, sign};
}

std::vector<TheoremEntry> build() {
    std::vector<TheoremEntry> db;

    {
        TheoremEntry e;
        e.spec.name = "kummer";
        e.spec.parameters = {"a", "b"};
        e.spec.upper = {parse_polynomial("a"), parse_polynomial("b")};
        e.spec.lower = {parse_polynomial("1+a-b")};
        e.spec.z = Rational(-1);
        e.spec.rhs = HyperTerm::gamma_product(
            {g(1, "1+a/2"), g(1, "1+a-b"), g(-1, "1+a"), g(-1, "1+a/2-b")});
        e.spec.stated_conditions = {parse_condition("Re(b) < 1")};
        e.extension_param = "b";
        e.extension_times = 1;
        db.push_back(e);
    }
    {
        TheoremEntry e;
        e.spec.name = "bailey";
        e.spec.parameters = {"a", "b"};
        e.spec.upper = {parse_polynomial("a"), parse_polynomial("1-a")};
        e.spec.lower = {parse_polynomial("b")};
        e.spec.z = Rational(1, 2);
        e.spec.rhs = HyperTerm::gamma_product(
            {g(1, "b/2"), g(1, "(1+b)/2"), g(-1, "(a+b)/2"), g(-1, "(1-a+b)/2")});
        db.push_back(e);
    }
    {
        TheoremEntry e;
        e.spec.name = "dixon";
        e.spec.parameters = {"a", "b", "c"};
        e.spec.upper = {parse_polynomial("a"), parse_polynomial("b"), parse_polynomial("c")};
        e.spec.lower = {parse_polynomial("1+a-b"), parse_polynomial("1+a-c")};
        e.spec.z = Rational(1);
        e.spec.rhs = HyperTerm::gamma_product(
            {g(1, "1+a-b"), g(1, "1+a-c"), g(1, "1+a/2"), g(1, "1+a/2-b-c"), g(-1, "1+a"),
             g(-1, "1+a/2-b"), g(-1, "1+a/2-c"), g(-1, "1+a-b-c")});
        e.spec.stated_conditions = {parse_condition("Re(2+a-2*b-2*c) > 0")};
        db.push_back(e);
    }
    {
        TheoremEntry e;
        e.spec.name = "gauss";
        e.spec.parameters = {"a", "b", "c"};
        e.spec.upper = {parse_polynomial("a"), parse_polynomial("b")};
        e.spec.lower = {parse_polynomial("c")};
        e.spec.z = Rational(1);
        e.spec.rhs = HyperTerm::gamma_product(
            {g(1, "c"), g(1, "c-a-b"), g(-1, "c-a"), g(-1, "c-b")});
        e.spec.stated_conditions = {parse_condition("Re(c-a-b) > 0")};
        db.push_back(e);
    }
    {
        TheoremEntry e;
        e.spec.name = "dixon-4f3";
        e.spec.parameters = {"a", "b", "c"};
        e.spec.upper = {parse_polynomial("a"), parse_polynomial("1+a/2"), parse_polynomial("b"),
                        parse_polynomial("c")};
        e.spec.lower = {parse_polynomial("a/2"), parse_polynomial("1+a-b"),
                        parse_polynomial("1+a-c")};
        e.spec.z = Rational(-1);
        e.spec.rhs = HyperTerm::gamma_product(
            {g(1, "1+a-b"), g(1, "1+a-c"), g(-1, "1+a"), g(-1, "1+a-b-c")});
        e.spec.stated_conditions = {parse_condition("Re(2+a-2*b-2*c) > 0")};
        db.push_back(e);
    }
    {
        TheoremEntry e;
        e.spec.name = "dixon-5f4";
        e.spec.parameters = {"a", "b", "c", "d"};
        e.spec.upper = {parse_polynomial("a"), parse_polynomial("1+a/2"), parse_polynomial("b"),
                        parse_polynomial("c"), parse_polynomial("d")};
        e.spec.lower = {parse_polynomial("a/2"), parse_polynomial("1+a-b"),
                        parse_polynomial("1+a-c"), parse_polynomial("1+a-d")};
        e.spec.z = Rational(1);
        e.spec.rhs = HyperTerm::gamma_product(
            {g(1, "1+a-b"), g(1, "1+a-c"), g(1, "1+a-d"), g(1, "1+a-b-c-d"), g(-1, "1+a"),
             g(-1, "1+a-b-c"), g(-1, "1+a-b-d"), g(-1, "1+a-c-d")});
        e.spec.stated_conditions = {parse_condition("Re(1+a-b-c-d) > 0")};
        e.numeric_only = true;
        e.numeric_only_reason =
            "order-1 telescoping system exceeds the exact-arithmetic size budget; "
            "validated numerically instead";
        db.push_back(e);
    }
    return db;
}

} // namespace

const std::vector<TheoremEntry>& theorem_database() {
    static const std::vector<TheoremEntry> db = build();
    return db;
}

const TheoremEntry* find_theorem(const std::string& name) {
    for (const auto& e : theorem_database())
        if (e.spec.name == name) return &e;
    return nullptr;
}

} // namespace hypsum
