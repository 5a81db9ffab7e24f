#pragma once

#include <optional>

#include "hypsum/condition.hpp"
#include "hypsum/hyperterm.hpp"

namespace hypsum {

// k -> infinity behaviour of a term, from Gamma(a+k)/Gamma(b+k) ~ k^(a-b).
struct GrowthEstimate {
    enum Kind { PolynomialGrowth, SuperDecay, SuperGrowth };
    Kind kind = PolynomialGrowth;
    // |T| ~ k^Re(exponent) * T(n); affine in the parameters and possibly n.
    Polynomial exponent;
    // An n-dependent positive factor multiplies the estimate.
    bool has_positive_factor = false;
};

// Requires every Gamma argument to have k-coefficient 0 or 1 and the signed
// count of k-carrying factors to vanish; |z| != 1 short-circuits to
// super-polynomial decay/growth.  The prefactor contributes its k-degree
// difference.  Throws UnsupportedError otherwise.
GrowthEstimate k_growth_exponent(const HyperTerm& t);

// lim_{k->inf} T = 0?  Emits the real-part condition that makes it so.
std::pair<bool, std::vector<Condition>> k_limit_zero(const HyperTerm& t);

// n -> infinity termwise limit.
struct LimitResult {
    enum Kind { Finite, DeltaK0, Zero, Divergent };
    Kind kind = Divergent;
    std::optional<HyperTerm> limit_term; // present when Finite
    std::vector<Condition> conditions;
};

// Groups Gamma factors by their positive n-coefficient m and sums the non-n
// argument parts per group; zero total n-exponent gives a finite limit with
// the group bases m^(e_m) carried symbolically, a pure k-multiple c*k gives
// the Kronecker-delta limit under Re(c) < 0.
LimitResult n_limit(const HyperTerm& t);

struct DominationPair {
    Polynomial num_const, den_const;       // paired Pochhammer bases
    std::optional<Condition> condition;    // absent when valid for large n
};

struct DominationReport {
    bool ok = false;
    std::string failure;
    std::vector<DominationPair> pairs;
    // k-only majorant exponent and its summability condition.
    Polynomial bound_exponent;
    bool bound_decays = false; // |z| < 1: majorant decays geometrically
    std::optional<Condition> summability;
    std::string s_bound_note;
    std::vector<Condition> conditions() const;
};

// Majorant argument for exchanging lim_n with sum_k: pairs the n-dependent
// Pochhammer factors of f, bounds 1/S(n) via its finite n-limit, and emits
// the summability condition of the surviving k-only bound.
DominationReport domination_check(const HyperTerm& f, const HyperTerm& s_term,
                                  const LimitResult& limit);

} // namespace hypsum
