#include "hypsum/prover.hpp"

#include <sstream>

#include "hypsum/errors.hpp"
#include "hypsum/expr.hpp"

namespace hypsum {

namespace {

// Nonnegative integer n-coefficient that param -> param + step*n would give
// this argument, or nullopt when it is fractional or negative.
std::optional<int> shifted_n_coeff(const Polynomial& constant, const std::string& param,
                                   int step) {
    if (!constant.depends_on(param)) return 0;
    if (constant.degree(param) > 1) return std::nullopt;
    Polynomial c = constant.coeff_of(param, 1);
    if (!c.is_constant()) return std::nullopt;
    Rational add = c.constant_value() * step;
    if (!is_integer(add) || add < 0) return std::nullopt;
    return int(add.get_num().get_si());
}

std::vector<Condition> collect_conditions(const ProofTranscript& t) {
    std::vector<Condition> all;
    for (const auto& step : t.steps) {
        if (const auto* b = std::get_if<BoundaryStep>(&step))
            all.insert(all.end(), b->conditions.begin(), b->conditions.end());
        if (const auto* l = std::get_if<TermLimitStep>(&step))
            all.insert(all.end(), l->limit.conditions.begin(), l->limit.conditions.end());
        if (const auto* d = std::get_if<DominationStep>(&step)) {
            auto cs = d->report.conditions();
            all.insert(all.end(), cs.begin(), cs.end());
        }
    }
    return simplify_conditions(all);
}

// Tightest-bound implication: cond follows from the set when some member
// shares its direction with an equal or smaller bound.
bool implied_by(const Condition& cond, const std::vector<Condition>& set) {
    auto merged = set;
    merged.push_back(cond);
    return simplify_conditions(merged) == simplify_conditions(set);
}

} // namespace

std::pair<std::string, int> choose_shift(const TheoremSpec& spec) {
    HyperTerm lhs = spec.lhs_term();
    for (const auto& param : spec.parameters) {
        for (int step = 1; step <= 4; ++step) {
            bool ok = true, touches_rhs = false;
            for (const auto& gf : lhs.gammas()) {
                auto c = shifted_n_coeff(gf.arg.constant, param, step);
                if (!c) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            for (const auto& gf : spec.rhs.gammas()) {
                auto c = shifted_n_coeff(gf.arg.constant, param, step);
                if (!c) {
                    ok = false;
                    break;
                }
                if (*c > 0) touches_rhs = true;
            }
            if (ok && touches_rhs) return {param, step};
        }
    }
    throw UnsupportedError("choose_shift: no parameter gives integer nonnegative "
                           "n-coefficients on both sides");
}

ShiftedTheorem shift_theorem(const TheoremSpec& spec,
                             const std::optional<std::pair<std::string, int>>& override_shift) {
    auto [param, step] = override_shift ? *override_shift : choose_shift(spec);
    ShiftedTheorem out;
    out.param = param;
    out.step = step;
    out.f = substitute_shift(spec.lhs_term(), param, step);
    out.s = substitute_shift(spec.rhs, param, step);
    out.big_f = out.f * out.s.inverse();
    return out;
}

ClosureForm close_limit_series(const LimitResult& limit) {
    ClosureForm out;
    if (limit.kind == LimitResult::DeltaK0) {
        out.kind = ClosureForm::KroneckerDelta;
        out.value_is_one = true;
        out.value_text = "sum of delta(k,0) = 1";
        return out;
    }
    if (limit.kind != LimitResult::Finite || !limit.limit_term)
        throw UnsupportedError("closure not found: limit is not finite");
    const HyperTerm& l = *limit.limit_term;

    // Recognize c * (beta)_k z^k / k! as a Gamma-factor multiset.
    std::vector<GammaFactor> rest = l.gammas();
    auto take = [&rest](auto pred) -> std::optional<GammaFactor> {
        for (auto it = rest.begin(); it != rest.end(); ++it)
            if (pred(*it)) {
                GammaFactor g = *it;
                rest.erase(it);
                return g;
            }
        return std::nullopt;
    };
    for (const auto& gf : rest)
        if (gf.arg.coeff_n != 0) throw UnsupportedError("closure not found: n left in limit");
    auto factorial = take([](const GammaFactor& g) {
        return g.arg.coeff_k == 1 && g.exponent == -1 &&
               g.arg.constant == Polynomial(Rational(1));
    });
    auto top = take([](const GammaFactor& g) { return g.arg.coeff_k == 1 && g.exponent == 1; });
    if (!factorial || !top)
        throw UnsupportedError("closure not found: limit is not a single binomial series");
    std::optional<Polynomial> beta = top->arg.constant;
    auto base = take([&](const GammaFactor& g) {
        return g.arg.coeff_k == 0 && g.exponent == -1 && g.arg.constant == *beta;
    });
    if (!base || !rest.empty())
        throw UnsupportedError("closure not found: limit is not a single binomial series");
    if (!l.prefactor().is_constant())
        throw UnsupportedError("closure not found: nonconstant prefactor in limit");
    Rational z = l.base();
    Rational one_minus_z = Rational(1) - z;
    if (one_minus_z <= 0)
        throw UnsupportedError("closure not found: binomial series diverges at z = " +
                               rational_to_string(z));

    out.kind = ClosureForm::Binomial;
    out.beta = *beta;
    out.z = z;
    out.prefactor = l.prefactor().constant_value();
    out.bases = l.const_bases();
    out.bases.push_back({one_minus_z, -*beta});

    // Combine: group by base, exponents must cancel or become integers.
    std::map<Rational, Polynomial> grouped;
    for (const auto& cb : out.bases) grouped[cb.base] += cb.exponent;
    Rational total = out.prefactor;
    bool exact = true;
    std::ostringstream txt;
    txt << "(1-(" << rational_to_string(z) << "))^(-(" << out.beta.str() << "))";
    for (const auto& cb : l.const_bases())
        txt << " * " << rational_to_string(cb.base) << "^(" << cb.exponent.str() << ")";
    if (out.prefactor != 1) txt << " * " << rational_to_string(out.prefactor);
    for (const auto& [base, e] : grouped) {
        if (e.is_zero()) continue;
        if (e.is_constant() && is_integer(e.constant_value()))
            total *= rational_pow(base, e.constant_value().get_num().get_si());
        else
            exact = false;
    }
    out.value_is_one = exact && total == 1;
    txt << " = " << (out.value_is_one ? "1" : (exact ? rational_to_string(total) : "(symbolic)"));
    out.value_text = txt.str();
    return out;
}

ProofTranscript prove(const TheoremSpec& spec, const ProveOptions& opts) {
    ProofTranscript t;
    t.theorem = spec.name;
    std::string stage = "shift";
    try {
        ShiftedTheorem sh = shift_theorem(spec);
        t.steps.push_back(ShiftStep{sh.param, sh.step});

        stage = "wz";
        auto cert = wz_pair(sh.big_f);
        if (!cert) {
            t.failed_step = stage;
            t.failure_reason = "no order-1 certificate found by creative telescoping";
            return t;
        }
        bool verified = verify_certificate(sh.big_f, *cert);
        t.steps.push_back(WZStep{*cert, verified});
        if (!verified) {
            t.failed_step = stage;
            t.failure_reason = "certificate failed exact verification";
            return t;
        }

        stage = "boundary";
        BoundaryStep boundary;
        boundary.g_vanishes_at_zero =
            cert->c.num().substitute("k", Polynomial()).is_zero();
        if (!boundary.g_vanishes_at_zero) {
            t.steps.push_back(boundary);
            t.failed_step = stage;
            t.failure_reason = "G(n,0) does not vanish";
            return t;
        }
        HyperTerm g_term =
            sh.big_f.with_prefactor(sh.big_f.prefactor() * cert->c);
        GrowthEstimate g_growth = k_growth_exponent(g_term);
        boundary.g_exponent = g_growth.exponent;
        int cert_degdiff = cert->c.degree_diff("k");
        if (cert_degdiff <= 0 && !cert->c.is_zero()) {
            boundary.has_certificate_limit = true;
            boundary.certificate_limit =
                cert_degdiff < 0
                    ? RationalFunction()
                    : RationalFunction(cert->c.num().leading_coeff_in("k"),
                                       cert->c.den().leading_coeff_in("k"));
        }
        auto [gzero, gconds] = k_limit_zero(g_term);
        boundary.conditions = gconds;
        boundary.note = "lim_k G(n,k) = 0";
        t.steps.push_back(boundary);
        if (!gzero) {
            t.failed_step = stage;
            t.failure_reason = "lim_k G(n,k) does not vanish";
            return t;
        }

        t.steps.push_back(IndependenceStep{});

        stage = "term-limit";
        LimitResult lim = n_limit(sh.big_f);
        t.steps.push_back(TermLimitStep{lim});
        if (lim.kind == LimitResult::Zero || lim.kind == LimitResult::Divergent) {
            t.failed_step = stage;
            t.failure_reason = lim.kind == LimitResult::Zero
                                   ? "termwise n-limit vanishes identically"
                                   : "termwise n-limit diverges";
            return t;
        }

        stage = "domination";
        DominationReport rep = domination_check(sh.f, sh.s, lim);
        if (!rep.ok) {
            t.steps.push_back(DominationStep{rep, false});
            t.failed_step = stage;
            t.failure_reason = rep.failure;
            return t;
        }
        bool accelerated = false;
        if (opts.use_acceleration && rep.summability && sh.big_f.base() == -1) {
            // Pairing F(n,2k) + F(n,2k+1) lowers the majorant exponent by
            // one, relaxing the summability condition accordingly.
            rep.bound_exponent = rep.bound_exponent - Polynomial(Rational(1));
            rep.summability = Condition(rep.bound_exponent + Polynomial(Rational(1)), true);
            accelerated = true;
        }
        t.steps.push_back(DominationStep{rep, accelerated});

        stage = "closure";
        ClosureForm closure = close_limit_series(lim);
        t.steps.push_back(ClosureStep{closure});
        if (!closure.value_is_one) {
            t.failed_step = stage;
            t.failure_reason = "limit series does not close to 1: " + closure.value_text;
            return t;
        }

        t.conditions = collect_conditions(t);
        for (const auto& c : t.conditions)
            if (c.is_trivially_false()) {
                t.failed_step = "conditions";
                t.failure_reason = "inconsistent convergence conditions";
                return t;
            }
        t.verdict = ProofTranscript::Proved;
        return t;
    } catch (const Error& e) {
        t.failed_step = stage;
        t.failure_reason = e.what();
        return t;
    }
}

ProofTranscript extend_domain(const TheoremSpec& spec, const ProofTranscript& transcript,
                              const std::string& param, int times) {
    if (times <= 0) return transcript;
    if (transcript.verdict != ProofTranscript::Proved)
        throw Error("extend_domain: transcript is not proved");
    ProofTranscript t = transcript;

    HyperTerm m = spec.lhs_term();
    auto rec = zeilberger(m, param, 1);
    if (!rec) {
        t.verdict = ProofTranscript::Failed;
        t.failed_step = "extension";
        t.failure_reason = "no order-1 recurrence in " + param;
        return t;
    }
    ExtensionStep ext;
    ext.param = param;
    ext.recurrence = *rec;
    ext.old_conditions = transcript.conditions;

    // Boundary of the telescoped recurrence: G'(0) = 0 and lim_k G' = 0.
    if (!rec->cert.c.num().substitute("k", Polynomial()).is_zero()) {
        t.verdict = ProofTranscript::Failed;
        t.failed_step = "extension";
        t.failure_reason = "recurrence certificate does not vanish at k = 0";
        return t;
    }
    HyperTerm gp = m.with_prefactor(m.prefactor() * rec->cert.c);
    auto [gzero, bconds] = k_limit_zero(gp);
    ext.boundary_conditions = simplify_conditions(bconds);
    if (!gzero) {
        ext.note = "extension refused: lim_k G' does not vanish";
        t.steps.push_back(ext);
        return t;
    }
    for (const auto& c : ext.boundary_conditions)
        if (!implied_by(c, transcript.conditions)) {
            ext.note = "extension refused: needs " + c.str() +
                       " beyond the proved domain";
            t.steps.push_back(ext);
            return t;
        }

    // The closed form must satisfy the same contiguous recurrence:
    // rhs(param+1)/rhs(param) = -sigma_0/sigma_1.
    RationalFunction rhs_ratio = shift_quotient(spec.rhs, param);
    RationalFunction rec_ratio = -(rec->sigma[0] / rec->sigma[1]);
    ext.rhs_satisfies_recurrence = rhs_ratio == rec_ratio;
    if (!ext.rhs_satisfies_recurrence) {
        t.steps.push_back(ext);
        t.verdict = ProofTranscript::Failed;
        t.failed_step = "extension";
        t.failure_reason = "closed form fails the contiguous recurrence in " + param;
        return t;
    }

    ext.new_conditions = shift_conditions(transcript.conditions, param, Rational(-1));
    if (times > 1)
        ext.note = "further applications do not widen the domain: the telescoped "
                   "boundary keeps needing the original strip";
    t.steps.push_back(ext);
    t.conditions = ext.new_conditions;
    return t;
}

PairedSequence accelerate_pairing(const HyperTerm& f) {
    PairedSequence out;
    out.f = f;
    GrowthEstimate g = k_growth_exponent(f);
    if (g.kind == GrowthEstimate::PolynomialGrowth && f.base() == -1)
        out.improved_exponent = g.exponent - Polynomial(Rational(1));
    else
        out.improved_exponent = g.exponent;
    return out;
}

BigFloat PairedSequence::evaluate_pair(const std::map<std::string, BigFloat>& assignment,
                                       long k, const PrecisionConfig& cfg) const {
    return evaluate(f, assignment, 2 * k, cfg) + evaluate(f, assignment, 2 * k + 1, cfg);
}

// ---------------------------------------------------------------------------

bool replay_transcript(const TheoremSpec& spec, const ProofTranscript& transcript,
                       std::string* why) {
    auto fail = [&](const std::string& reason) {
        if (why) *why = reason;
        return false;
    };
    try {
        const ShiftStep* shift = nullptr;
        for (const auto& s : transcript.steps)
            if (const auto* sh = std::get_if<ShiftStep>(&s)) shift = sh;
        if (!shift) return fail("no shift step recorded");
        ShiftedTheorem sh = shift_theorem(spec, {{shift->param, shift->step}});

        const LimitResult* recorded_limit = nullptr;
        for (const auto& step : transcript.steps) {
            if (const auto* wz = std::get_if<WZStep>(&step)) {
                if (!verify_certificate(sh.big_f, wz->cert))
                    return fail("recorded certificate fails the WZ identity");
            } else if (const auto* b = std::get_if<BoundaryStep>(&step)) {
                const WZStep* wz = nullptr;
                for (const auto& s2 : transcript.steps)
                    if (const auto* w = std::get_if<WZStep>(&s2)) wz = w;
                if (!wz) return fail("boundary step without certificate");
                if (!wz->cert.c.num().substitute("k", Polynomial()).is_zero())
                    return fail("G(n,0) does not vanish on replay");
                HyperTerm g_term = sh.big_f.with_prefactor(sh.big_f.prefactor() * wz->cert.c);
                GrowthEstimate g = k_growth_exponent(g_term);
                if (!(g.exponent == b->g_exponent))
                    return fail("recorded boundary exponent disagrees: " + g.exponent.str() +
                                " vs " + b->g_exponent.str());
                auto [gzero, gconds] = k_limit_zero(g_term);
                if (!gzero) return fail("lim_k G does not vanish on replay");
                if (simplify_conditions(gconds) != simplify_conditions(b->conditions))
                    return fail("boundary conditions disagree on replay");
            } else if (const auto* l = std::get_if<TermLimitStep>(&step)) {
                LimitResult lim = n_limit(sh.big_f);
                if (lim.kind != l->limit.kind) return fail("termwise limit kind disagrees");
                if (lim.kind == LimitResult::Finite &&
                    !(*lim.limit_term == *l->limit.limit_term))
                    return fail("termwise limit term disagrees");
                recorded_limit = &l->limit;
            } else if (const auto* d = std::get_if<DominationStep>(&step)) {
                if (!recorded_limit) return fail("domination before term limit");
                DominationReport rep = domination_check(sh.f, sh.s, *recorded_limit);
                if (!rep.ok) return fail("domination fails on replay: " + rep.failure);
                if (d->accelerated) {
                    rep.bound_exponent = rep.bound_exponent - Polynomial(Rational(1));
                    rep.summability =
                        Condition(rep.bound_exponent + Polynomial(Rational(1)), true);
                }
                if (rep.summability.has_value() != d->report.summability.has_value())
                    return fail("domination summability disagrees");
                if (rep.summability &&
                    !(*rep.summability == *d->report.summability))
                    return fail("domination summability condition disagrees");
            } else if (const auto* c = std::get_if<ClosureStep>(&step)) {
                if (!recorded_limit) return fail("closure before term limit");
                ClosureForm form = close_limit_series(*recorded_limit);
                if (form.value_is_one != c->form.value_is_one)
                    return fail("closure value disagrees");
            } else if (const auto* e = std::get_if<ExtensionStep>(&step)) {
                HyperTerm m = spec.lhs_term();
                if (!verify_recurrence(m, e->recurrence))
                    return fail("recorded recurrence fails its identity");
                if (!e->recurrence.cert.c.num().substitute("k", Polynomial()).is_zero())
                    return fail("recurrence certificate does not vanish at k = 0");
                if (e->rhs_satisfies_recurrence) {
                    RationalFunction rhs_ratio = shift_quotient(spec.rhs, e->param);
                    RationalFunction rec_ratio =
                        -(e->recurrence.sigma[0] / e->recurrence.sigma[1]);
                    if (!(rhs_ratio == rec_ratio))
                        return fail("closed form fails the recurrence on replay");
                    if (shift_conditions(e->old_conditions, e->param, Rational(-1)) !=
                        e->new_conditions)
                        return fail("extension condition transform disagrees");
                }
            }
        }
        if (transcript.verdict == ProofTranscript::Proved) {
            bool closed = false;
            for (const auto& step : transcript.steps)
                if (const auto* c = std::get_if<ClosureStep>(&step))
                    closed = c->form.value_is_one;
            if (!closed) return fail("proved verdict without closing step");
        }
        return true;
    } catch (const Error& e) {
        return fail(std::string("replay error: ") + e.what());
    }
}

// ---------------------------------------------------------------------------

namespace {

const char* limit_kind_name(LimitResult::Kind k) {
    switch (k) {
        case LimitResult::Finite: return "finite";
        case LimitResult::DeltaK0: return "delta(k,0)";
        case LimitResult::Zero: return "zero";
        case LimitResult::Divergent: return "divergent";
    }
    return "?";
}

std::string conditions_text(const std::vector<Condition>& cs) {
    if (cs.empty()) return "(none)";
    std::string out;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (i) out += " and ";
        out += cs[i].str();
    }
    return out;
}

} // namespace

std::string ProofTranscript::text() const {
    std::ostringstream os;
    os << "theorem " << theorem << "\n";
    int idx = 0;
    for (const auto& step : steps) {
        os << "  step " << ++idx << "  ";
        if (const auto* s = std::get_if<ShiftStep>(&step)) {
            os << "shift: " << s->param << " -> " << s->param << " + " << s->step << "*n\n";
        } else if (const auto* w = std::get_if<WZStep>(&step)) {
            os << "wz-pair: C(n,k) = " << w->cert.c.str()
               << (w->verified ? "  [verified exactly]" : "  [VERIFICATION FAILED]") << "\n";
        } else if (const auto* b = std::get_if<BoundaryStep>(&step)) {
            os << "boundary: G(n,0) = 0; " << b->note << " with k-exponent "
               << b->g_exponent.str();
            if (b->has_certificate_limit)
                os << "; lim_k C = " << b->certificate_limit.str();
            os << "; conditions: " << conditions_text(b->conditions) << "\n";
        } else if (std::get_if<IndependenceStep>(&step)) {
            os << "independence: sum_k F(n,k) is independent of n\n";
        } else if (const auto* l = std::get_if<TermLimitStep>(&step)) {
            os << "term limit: lim_n F(n,k) is " << limit_kind_name(l->limit.kind);
            if (l->limit.limit_term) os << ": " << l->limit.limit_term->str();
            if (!l->limit.conditions.empty())
                os << "; conditions: " << conditions_text(l->limit.conditions);
            os << "\n";
        } else if (const auto* d = std::get_if<DominationStep>(&step)) {
            os << "domination:" << (d->accelerated ? " (paired)" : "");
            if (d->report.ok) {
                os << " " << d->report.s_bound_note;
                if (d->report.bound_decays)
                    os << "; majorant decays geometrically";
                else
                    os << "; majorant ~ k^(" << d->report.bound_exponent.str() << ")";
                os << "; conditions: " << conditions_text(d->report.conditions());
            } else {
                os << " FAILED: " << d->report.failure;
            }
            os << "\n";
        } else if (const auto* c = std::get_if<ClosureStep>(&step)) {
            os << "closure: " << c->form.value_text << "\n";
        } else if (const auto* e = std::get_if<ExtensionStep>(&step)) {
            os << "extension in " << e->param << ": sigma = (";
            for (std::size_t i = 0; i < e->recurrence.sigma.size(); ++i) {
                if (i) os << ", ";
                os << e->recurrence.sigma[i].str();
            }
            os << "), C' = " << e->recurrence.cert.c.str();
            if (!e->note.empty()) os << "; " << e->note;
            if (e->rhs_satisfies_recurrence)
                os << "; closed form satisfies the recurrence; conditions now "
                   << conditions_text(e->new_conditions);
            os << "\n";
        }
    }
    if (verdict == Proved)
        os << "  verdict: proved under " << conditions_text(conditions) << "\n";
    else
        os << "  verdict: FAILED at " << failed_step << ": " << failure_reason << "\n";
    return os.str();
}

} // namespace hypsum
