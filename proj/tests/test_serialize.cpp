#include <doctest.h>

#include "hypsum/database.hpp"
#include "hypsum/expr.hpp"
#include "hypsum/serialize.hpp"

using namespace hypsum;

TEST_CASE("expression parser: certificates and arguments") {
    CHECK(parse_rational_function("-(b-1)*k/((1+a+2*n-b+k)*(a+2*n))") ==
          parse_rational_function("(k-k*b)/((1+a+2*n-b+k)*(a+2*n))"));
    CHECK(parse_polynomial("a/2+1") == parse_polynomial("(a+2)/2"));
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-1") == Rational(-1));
    CHECK_THROWS_AS(parse_polynomial("1/(k+1)"), ParseError);
    CHECK_THROWS_AS(parse_rational_function("2 +"), ParseError);
    CHECK_THROWS_AS(parse_rational_function("(a"), ParseError);

    // The Dixon certificate block parses and has the expected denominator.
    RationalFunction dixon = parse_rational_function(
        "-(-2-8*a*n*c-a+4*b+4*c-2*n-2*n*b*c-2*a*b*k-2*a*k*c-a*b*c-8*a*n*b"
        "-4*n*k*c-4*n*b*k+a*b+2*n*b-2*a^2*c-8*n^2*c+a*c+2*n*c-2*b^2+3*a^2"
        "+12*a*n+12*n^2+12*a^2*n-2*a^2*b+24*a*n^2+a*k^2-8*n^2*b+2*n*k^2"
        "+2*a^3+16*n^3-6*c*b+3*k*a^2+3*k*a+6*k*n+12*k*n^2+12*k*a*n+2*b^2*c"
        "+2*b*c^2-2*c^2)*k/(2+a+2*n-2*b-2*c)/(1+a+2*n-c+k)/(1+a+2*n-b+k)"
        "/(a+2*n)");
    CHECK(dixon.num().degree("k") == 3);
    CHECK(dixon.den().degree("k") == 2);
}

TEST_CASE("polynomial printing round-trips canonically") {
    for (const char* s : {"k", "2*b - 2", "n^2 + 1/2*n*k", "a - 2*b - 2*c + 2", "-3/4"}) {
        Polynomial p = parse_polynomial(s);
        CHECK(parse_polynomial(poly_to_string(p)) == p);
    }
}

TEST_CASE("theorem specs round-trip bit-identically through the schema") {
    for (const auto& entry : theorem_database()) {
        nlohmann::json j1 = theorem_to_json(entry.spec);
        TheoremSpec back = theorem_from_json(j1);
        nlohmann::json j2 = theorem_to_json(back);
        CHECK(j1.dump() == j2.dump());
        CHECK(back.rhs == entry.spec.rhs);
        CHECK(back.z == entry.spec.z);
        CHECK(back.stated_conditions == entry.spec.stated_conditions);
    }
}

TEST_CASE("reserved symbols rejected as parameter names") {
    nlohmann::json j = {{"name", "bad"},
                        {"parameters", {"n"}},
                        {"upper", {"n"}},
                        {"lower", nlohmann::json::array()},
                        {"z", "1"},
                        {"rhs_gammas", nlohmann::json::array()}};
    CHECK_THROWS_AS(theorem_from_json(j), ParseError);
}

TEST_CASE("transcripts round-trip and replay from the serialized form") {
    const TheoremEntry* e = find_theorem("kummer");
    ProofTranscript t = prove(e->spec);
    t = extend_domain(e->spec, t, "b", 1);
    REQUIRE(t.verdict == ProofTranscript::Proved);

    nlohmann::json j1 = transcript_to_json(t);
    ProofTranscript back = transcript_from_json(j1);
    nlohmann::json j2 = transcript_to_json(back);
    CHECK(j1.dump() == j2.dump());

    // the replay checker accepts the deserialized transcript: everything it
    // needs survived the round trip
    std::string why;
    INFO(why);
    CHECK(replay_transcript(e->spec, back, &why));
}

TEST_CASE("verify input: certificate file schema") {
    nlohmann::json j = theorem_to_json(find_theorem("kummer")->spec);
    j["shift"] = {{"param", "a"}, {"step", 2}};
    j["certificate"] = "-(b-1)*k/((1+a+2*n-b+k)*(a+2*n))";
    VerifyInput in = verify_input_from_json(j);
    CHECK(in.shift == std::pair<std::string, int>{"a", 2});
    ShiftedTheorem sh = shift_theorem(in.spec, in.shift);
    CHECK(verify_certificate(sh.big_f, Certificate{in.certificate, false}));

    nlohmann::json no_cert = theorem_to_json(find_theorem("kummer")->spec);
    CHECK_THROWS_AS(verify_input_from_json(no_cert), ParseError);
}

TEST_CASE("numeric reports serialize") {
    NumericReport r;
    r.checks.push_back({"demo", "a=1", "1.0", "1.0", 0.0, 0.0, false, true});
    nlohmann::json j = report_to_json(r);
    CHECK(j["all_pass"].get<bool>());
    CHECK(j["checks"].size() == 1);
}
