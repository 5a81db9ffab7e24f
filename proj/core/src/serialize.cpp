#include "hypsum/serialize.hpp"

#include "hypsum/errors.hpp"
#include "hypsum/expr.hpp"

namespace hypsum {

using nlohmann::json;

namespace {

std::string rational_str(const Rational& r) { return rational_to_string(r); }

json conditions_to_json(const std::vector<Condition>& cs) {
    json arr = json::array();
    for (const auto& c : cs) arr.push_back(c.str());
    return arr;
}

std::vector<Condition> conditions_from_json(const json& arr) {
    std::vector<Condition> out;
    for (const auto& e : arr) out.push_back(parse_condition(e.get<std::string>()));
    return out;
}

json gammas_to_json(const HyperTerm& t) {
    json arr = json::array();
    for (const auto& gf : t.gammas()) {
        if (gf.arg.coeff_n != 0 || gf.arg.coeff_k != 0)
            throw Error("serialize: rhs Gamma arguments must be parameter-only");
        arr.push_back({{"sign", gf.exponent}, {"arg", poly_to_string(gf.arg.constant)}});
    }
    return arr;
}

} // namespace

json theorem_to_json(const TheoremSpec& spec) {
    json j;
    j["name"] = spec.name;
    j["parameters"] = spec.parameters;
    json upper = json::array(), lower = json::array();
    for (const auto& u : spec.upper) upper.push_back(poly_to_string(u));
    for (const auto& l : spec.lower) lower.push_back(poly_to_string(l));
    j["upper"] = upper;
    j["lower"] = lower;
    j["z"] = rational_str(spec.z);
    j["rhs_gammas"] = gammas_to_json(spec.rhs);
    j["conditions"] = conditions_to_json(spec.stated_conditions);
    return j;
}

TheoremSpec theorem_from_json(const json& j) {
    TheoremSpec spec;
    spec.name = j.at("name").get<std::string>();
    spec.parameters = j.at("parameters").get<std::vector<std::string>>();
    for (const auto& p : spec.parameters)
        if (p == "n" || p == "k" || p == "_j")
            throw ParseError("reserved symbol used as parameter: " + p);
    for (const auto& u : j.at("upper")) spec.upper.push_back(parse_polynomial(u.get<std::string>()));
    for (const auto& l : j.at("lower")) spec.lower.push_back(parse_polynomial(l.get<std::string>()));
    spec.z = parse_rational(j.at("z").get<std::string>());
    std::vector<GammaFactor> gammas;
    for (const auto& g : j.at("rhs_gammas")) {
        int sign = g.at("sign").get<int>();
        if (sign == 0) throw ParseError("rhs gamma with zero sign");
        gammas.push_back({AffineArg{0, 0, parse_polynomial(g.at("arg").get<std::string>())}, sign});
    }
    spec.rhs = HyperTerm::gamma_product(gammas);
    if (j.contains("conditions")) spec.stated_conditions = conditions_from_json(j["conditions"]);
    return spec;
}

VerifyInput verify_input_from_json(const json& j) {
    VerifyInput in;
    in.spec = theorem_from_json(j);
    if (j.contains("shift")) {
        in.shift = {{j["shift"].at("param").get<std::string>(),
                     j["shift"].at("step").get<int>()}};
    }
    if (!j.contains("certificate")) throw ParseError("verify input lacks a certificate");
    in.certificate = parse_rational_function(j.at("certificate").get<std::string>());
    return in;
}

namespace {

json step_to_json(const ProofStep& step) {
    json j;
    if (const auto* s = std::get_if<ShiftStep>(&step)) {
        j["type"] = "shift";
        j["param"] = s->param;
        j["step"] = s->step;
    } else if (const auto* w = std::get_if<WZStep>(&step)) {
        j["type"] = "wz";
        j["certificate"] = w->cert.c.str();
        j["zero_certificate"] = w->cert.zero_certificate;
        j["verified"] = w->verified;
    } else if (const auto* b = std::get_if<BoundaryStep>(&step)) {
        j["type"] = "boundary";
        j["g_vanishes_at_zero"] = b->g_vanishes_at_zero;
        j["g_exponent"] = poly_to_string(b->g_exponent);
        if (b->has_certificate_limit) j["certificate_limit"] = b->certificate_limit.str();
        j["conditions"] = conditions_to_json(b->conditions);
        j["note"] = b->note;
    } else if (std::get_if<IndependenceStep>(&step)) {
        j["type"] = "independence";
    } else if (const auto* l = std::get_if<TermLimitStep>(&step)) {
        j["type"] = "term_limit";
        switch (l->limit.kind) {
            case LimitResult::Finite: j["kind"] = "finite"; break;
            case LimitResult::DeltaK0: j["kind"] = "delta_k0"; break;
            case LimitResult::Zero: j["kind"] = "zero"; break;
            case LimitResult::Divergent: j["kind"] = "divergent"; break;
        }
        if (l->limit.limit_term) {
            // Limit terms are binomial-series shaped; serialize structurally.
            const HyperTerm& t = *l->limit.limit_term;
            json gammas = json::array();
            for (const auto& gf : t.gammas())
                gammas.push_back({{"sign", gf.exponent},
                                  {"coeff_k", gf.arg.coeff_k},
                                  {"arg", poly_to_string(gf.arg.constant)}});
            json bases = json::array();
            for (const auto& cb : t.const_bases())
                bases.push_back({{"base", rational_str(cb.base)},
                                 {"exponent", poly_to_string(cb.exponent)}});
            j["limit_term"] = {{"z", rational_str(t.base())},
                               {"gammas", gammas},
                               {"const_bases", bases},
                               {"prefactor", t.prefactor().str()}};
        }
        j["conditions"] = conditions_to_json(l->limit.conditions);
    } else if (const auto* d = std::get_if<DominationStep>(&step)) {
        j["type"] = "domination";
        j["ok"] = d->report.ok;
        j["accelerated"] = d->accelerated;
        if (!d->report.ok) j["failure"] = d->report.failure;
        json pairs = json::array();
        for (const auto& p : d->report.pairs) {
            json pj = {{"num", poly_to_string(p.num_const)}, {"den", poly_to_string(p.den_const)}};
            if (p.condition) pj["condition"] = p.condition->str();
            pairs.push_back(pj);
        }
        j["pairs"] = pairs;
        j["bound_decays"] = d->report.bound_decays;
        j["bound_exponent"] = poly_to_string(d->report.bound_exponent);
        if (d->report.summability) j["summability"] = d->report.summability->str();
        j["s_bound"] = d->report.s_bound_note;
    } else if (const auto* c = std::get_if<ClosureStep>(&step)) {
        j["type"] = "closure";
        j["kind"] = c->form.kind == ClosureForm::KroneckerDelta ? "kronecker_delta" : "binomial";
        j["value_is_one"] = c->form.value_is_one;
        j["value"] = c->form.value_text;
        if (c->form.kind == ClosureForm::Binomial) {
            j["beta"] = poly_to_string(c->form.beta);
            j["z"] = rational_str(c->form.z);
        }
    } else if (const auto* e = std::get_if<ExtensionStep>(&step)) {
        j["type"] = "extension";
        j["param"] = e->param;
        json sig = json::array();
        for (const auto& s2 : e->recurrence.sigma) sig.push_back(s2.str());
        j["sigma"] = sig;
        j["order"] = e->recurrence.order;
        j["certificate"] = e->recurrence.cert.c.str();
        j["rhs_satisfies_recurrence"] = e->rhs_satisfies_recurrence;
        j["boundary_conditions"] = conditions_to_json(e->boundary_conditions);
        j["old_conditions"] = conditions_to_json(e->old_conditions);
        j["new_conditions"] = conditions_to_json(e->new_conditions);
        j["note"] = e->note;
    }
    return j;
}

ProofStep step_from_json(const json& j) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "shift") return ShiftStep{j.at("param").get<std::string>(), j.at("step").get<int>()};
    if (type == "wz") {
        WZStep w;
        w.cert.c = parse_rational_function(j.at("certificate").get<std::string>());
        w.cert.zero_certificate = j.value("zero_certificate", false);
        w.verified = j.at("verified").get<bool>();
        return w;
    }
    if (type == "boundary") {
        BoundaryStep b;
        b.g_vanishes_at_zero = j.at("g_vanishes_at_zero").get<bool>();
        b.g_exponent = parse_polynomial(j.at("g_exponent").get<std::string>());
        if (j.contains("certificate_limit")) {
            b.has_certificate_limit = true;
            b.certificate_limit = parse_rational_function(j["certificate_limit"].get<std::string>());
        }
        b.conditions = conditions_from_json(j.at("conditions"));
        b.note = j.value("note", "");
        return b;
    }
    if (type == "independence") return IndependenceStep{};
    if (type == "term_limit") {
        TermLimitStep l;
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "finite")
            l.limit.kind = LimitResult::Finite;
        else if (kind == "delta_k0")
            l.limit.kind = LimitResult::DeltaK0;
        else if (kind == "zero")
            l.limit.kind = LimitResult::Zero;
        else
            l.limit.kind = LimitResult::Divergent;
        if (j.contains("limit_term")) {
            const json& lt = j["limit_term"];
            HyperTerm t;
            std::vector<GammaFactor> gammas;
            for (const auto& g : lt.at("gammas"))
                gammas.push_back({AffineArg{0, g.at("coeff_k").get<int>(),
                                            parse_polynomial(g.at("arg").get<std::string>())},
                                  g.at("sign").get<int>()});
            t = HyperTerm::gamma_product(gammas)
                    .with_base(parse_rational(lt.at("z").get<std::string>()))
                    .with_prefactor(parse_rational_function(lt.at("prefactor").get<std::string>()));
            for (const auto& cb : lt.at("const_bases"))
                t = t.times_const_base(parse_rational(cb.at("base").get<std::string>()),
                                       parse_polynomial(cb.at("exponent").get<std::string>()));
            l.limit.limit_term = t;
        }
        l.limit.conditions = conditions_from_json(j.at("conditions"));
        return l;
    }
    if (type == "domination") {
        DominationStep d;
        d.report.ok = j.at("ok").get<bool>();
        d.accelerated = j.value("accelerated", false);
        d.report.failure = j.value("failure", "");
        for (const auto& pj : j.at("pairs")) {
            DominationPair p;
            p.num_const = parse_polynomial(pj.at("num").get<std::string>());
            p.den_const = parse_polynomial(pj.at("den").get<std::string>());
            if (pj.contains("condition"))
                p.condition = parse_condition(pj["condition"].get<std::string>());
            d.report.pairs.push_back(p);
        }
        d.report.bound_decays = j.at("bound_decays").get<bool>();
        d.report.bound_exponent = parse_polynomial(j.at("bound_exponent").get<std::string>());
        if (j.contains("summability"))
            d.report.summability = parse_condition(j["summability"].get<std::string>());
        d.report.s_bound_note = j.value("s_bound", "");
        return d;
    }
    if (type == "closure") {
        ClosureStep c;
        c.form.kind = j.at("kind").get<std::string>() == "binomial" ? ClosureForm::Binomial
                                                                    : ClosureForm::KroneckerDelta;
        c.form.value_is_one = j.at("value_is_one").get<bool>();
        c.form.value_text = j.value("value", "");
        if (c.form.kind == ClosureForm::Binomial) {
            c.form.beta = parse_polynomial(j.at("beta").get<std::string>());
            c.form.z = parse_rational(j.at("z").get<std::string>());
        }
        return c;
    }
    if (type == "extension") {
        ExtensionStep e;
        e.param = j.at("param").get<std::string>();
        e.recurrence.shift_var = e.param;
        e.recurrence.order = j.at("order").get<int>();
        for (const auto& s : j.at("sigma"))
            e.recurrence.sigma.push_back(parse_rational_function(s.get<std::string>()));
        e.recurrence.cert.c = parse_rational_function(j.at("certificate").get<std::string>());
        e.rhs_satisfies_recurrence = j.at("rhs_satisfies_recurrence").get<bool>();
        e.boundary_conditions = conditions_from_json(j.at("boundary_conditions"));
        e.old_conditions = conditions_from_json(j.at("old_conditions"));
        e.new_conditions = conditions_from_json(j.at("new_conditions"));
        e.note = j.value("note", "");
        return e;
    }
    throw ParseError("unknown transcript step type: " + type);
}

} // namespace

json transcript_to_json(const ProofTranscript& t) {
    json j;
    j["theorem"] = t.theorem;
    json steps = json::array();
    for (const auto& s : t.steps) steps.push_back(step_to_json(s));
    j["steps"] = steps;
    j["verdict"] = t.verdict == ProofTranscript::Proved ? "proved" : "failed";
    j["conditions"] = conditions_to_json(t.conditions);
    if (t.verdict == ProofTranscript::Failed) {
        j["failed_step"] = t.failed_step;
        j["failure_reason"] = t.failure_reason;
    }
    return j;
}

ProofTranscript transcript_from_json(const json& j) {
    ProofTranscript t;
    t.theorem = j.at("theorem").get<std::string>();
    for (const auto& s : j.at("steps")) t.steps.push_back(step_from_json(s));
    t.verdict = j.at("verdict").get<std::string>() == "proved" ? ProofTranscript::Proved
                                                               : ProofTranscript::Failed;
    t.conditions = conditions_from_json(j.at("conditions"));
    t.failed_step = j.value("failed_step", "");
    t.failure_reason = j.value("failure_reason", "");
    return t;
}

json report_to_json(const NumericReport& r) {
    json j;
    json checks = json::array();
    for (const auto& c : r.checks) {
        checks.push_back({{"name", c.name},
                          {"inputs", c.inputs},
                          {"lhs", c.lhs},
                          {"rhs", c.rhs},
                          {"abs_err", c.abs_err},
                          {"rel_err", c.rel_err},
                          {"exact", c.exact},
                          {"pass", c.pass}});
    }
    j["checks"] = checks;
    j["all_pass"] = r.all_pass();
    return j;
}

} // namespace hypsum
