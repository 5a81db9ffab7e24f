#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypsum/polynomial.hpp"

namespace hypsum {

// A convergence condition Re(linear) < 0 (or <= 0), linear affine in the
// parameter symbols.  Canonical form divides out the positive integer
// content of the coefficients.
struct Condition {
    Polynomial linear;
    bool strict = true;

    Condition() = default;
    Condition(Polynomial l, bool s);

    // Constant conditions decide immediately.
    bool is_trivially_true() const;
    bool is_trivially_false() const;

    bool holds_at(const std::map<std::string, Rational>& point) const;

    // Prints in the orientation the affine form suggests:
    //   b - 1      ->  "Re(b) < 1"
    //   b          ->  "Re(b) < 0"
    //   2b+2c-a-2  ->  "Re(2+a-2*b-2*c) > 0"   (negative leading coefficient)
    std::string str() const;

    friend bool operator==(const Condition& a, const Condition& b) {
        return a.strict == b.strict && a.linear == b.linear;
    }
};

// Parse "Re(b) < 1", "Re(2+a-2*b-2*c) > 0", "Re(b) <= 0".
Condition parse_condition(const std::string& text);

// Deduplicate and drop conditions implied by tighter ones on the same
// direction vector; result sorted deterministically.  Trivially true
// conditions are removed.
std::vector<Condition> simplify_conditions(std::vector<Condition> conds);

// Shift param -> param + delta inside every condition (domain relabeling).
std::vector<Condition> shift_conditions(const std::vector<Condition>& conds,
                                        const std::string& param, const Rational& delta);

} // namespace hypsum
