#pragma once

#include <optional>

#include "hypsum/hyperterm.hpp"
#include "hypsum/telescope.hpp"

namespace hypsum {

struct CheckRecord {
    std::string name;
    std::string inputs;
    std::string lhs, rhs;
    double abs_err = 0, rel_err = 0;
    bool exact = false; // compared in rational arithmetic
    bool pass = false;
};

struct NumericReport {
    std::vector<CheckRecord> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// sum_{k=0..K} T(k) with compensated accumulation; term values advance
// through the exact shift quotient.  Throws PoleError on a pole in 0..K.
BigFloat partial_sum(const HyperTerm& t, const std::map<std::string, BigFloat>& assignment,
                     long k_max, const PrecisionConfig& cfg);

// Exact rational partial sum (Pochhammer route); nullopt when the term has
// no exact path (symbolic constant bases, unmatched Gamma factors).
std::optional<Rational> partial_sum_exact(const HyperTerm& t,
                                          const std::map<std::string, Rational>& assignment,
                                          long k_max);

// sum_{k>=0} T(k) with the splitting/acceleration the geometric base calls
// for: direct with a geometric tail bound for |z| < 1, alternating-series
// acceleration for z = -1, Levin's u-transform for z = 1.  Takes the exact
// rational point so each acceleration tier can evaluate the terms at the
// precision its weights demand.
BigFloat sum_accelerated(const HyperTerm& t, const std::map<std::string, Rational>& point,
                         const PrecisionConfig& cfg);

// Numeric validation of a theorem: samples rational parameter points
// strictly inside the condition region (margin 1/4), compares the
// accelerated series against the Gamma-product right-hand side, and replays
// the certificate identity exactly at integer points when a WZ pair is
// supplied.  Terminating instances and integer-argument closed forms are
// checked in exact rational arithmetic.
struct WZData {
    HyperTerm big_f; // shifted F(n,k)
    Certificate cert;
};
NumericReport check_theorem_numeric(const TheoremSpec& spec, int samples,
                                    const PrecisionConfig& cfg,
                                    const WZData* wz = nullptr,
                                    const std::map<std::string, Rational>* fixed_point = nullptr);

} // namespace hypsum
