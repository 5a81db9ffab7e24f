#pragma once

#include <variant>

#include "hypsum/asympt.hpp"
#include "hypsum/telescope.hpp"

namespace hypsum {

struct ShiftStep {
    std::string param;
    int step = 1;
};

struct WZStep {
    Certificate cert;
    bool verified = false;
};

struct BoundaryStep {
    bool g_vanishes_at_zero = false;     // certificate numerator divisible by k
    Polynomial g_exponent;               // k-growth exponent of G = C*F
    RationalFunction certificate_limit;  // lim_k C when the degrees allow it
    bool has_certificate_limit = false;
    std::vector<Condition> conditions;
    std::string note;
};

struct IndependenceStep {};

struct TermLimitStep {
    LimitResult limit;
};

struct DominationStep {
    DominationReport report;
    bool accelerated = false; // paired-majorant variant used
};

// Closed form of the limit series.
struct ClosureForm {
    enum Kind { KroneckerDelta, Binomial };
    Kind kind = KroneckerDelta;
    Polynomial beta;  // Binomial: sum (beta)_k z^k / k! = (1-z)^(-beta)
    Rational z = 0;
    std::vector<ConstBase> bases; // carried constants times (1-z)^(-beta)
    Rational prefactor = 1;
    bool value_is_one = false;
    std::string value_text;
};

struct ClosureStep {
    ClosureForm form;
};

struct ExtensionStep {
    std::string param;
    Recurrence recurrence;
    bool rhs_satisfies_recurrence = false;
    std::vector<Condition> boundary_conditions;
    std::vector<Condition> old_conditions, new_conditions;
    std::string note;
};

using ProofStep = std::variant<ShiftStep, WZStep, BoundaryStep, IndependenceStep,
                               TermLimitStep, DominationStep, ClosureStep, ExtensionStep>;

struct ProofTranscript {
    std::string theorem;
    std::vector<ProofStep> steps;
    enum Verdict { Proved, Failed } verdict = Failed;
    std::vector<Condition> conditions; // conjunction, canonical order
    std::string failed_step, failure_reason;

    std::string text() const; // human-readable rendering
};

struct ProveOptions {
    int max_order = 2;             // Zeilberger order cap
    bool use_acceleration = false; // paired majorant in the domination step
};

// Least positive step such that param -> param + step*n leaves every Gamma
// argument with a nonnegative integer n-coefficient on both sides.
std::pair<std::string, int> choose_shift(const TheoremSpec& spec);

// The full pipeline: shift, F = f/S, WZ pair, boundary limits,
// n-independence, termwise limit, domination, closure.
ProofTranscript prove(const TheoremSpec& spec, const ProveOptions& opts = {});

ClosureForm close_limit_series(const LimitResult& limit);

// Contiguous extension in param via an order-1 parameter recurrence;
// widens Re-conditions by one per application.
ProofTranscript extend_domain(const TheoremSpec& spec, const ProofTranscript& transcript,
                              const std::string& param, int times);

// H(n,k) = F(n,2k) + F(n,2k+1): same sums, lower k-growth exponent.
struct PairedSequence {
    HyperTerm f;
    Polynomial improved_exponent; // exponent of |H| in k
    BigFloat evaluate_pair(const std::map<std::string, BigFloat>& assignment, long k,
                           const PrecisionConfig& cfg) const;
};
PairedSequence accelerate_pairing(const HyperTerm& f);

// Re-checks a transcript using only its recorded data (certificates,
// sigmas, exponents, conditions); no discovery is re-run.
bool replay_transcript(const TheoremSpec& spec, const ProofTranscript& transcript,
                       std::string* why = nullptr);

// The shifted objects the pipeline builds (also needed by the oracle's
// certificate replay and by cmd_verify).
struct ShiftedTheorem {
    HyperTerm f, s, big_f; // f(n,k), S(n), F = f/S
    std::string param;
    int step = 1;
};
ShiftedTheorem shift_theorem(const TheoremSpec& spec,
                             const std::optional<std::pair<std::string, int>>& override_shift = {});

} // namespace hypsum
