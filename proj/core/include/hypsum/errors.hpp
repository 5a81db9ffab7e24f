#pragma once

#include <stdexcept>
#include <string>

namespace hypsum {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Gamma evaluated at a nonpositive integer, or a vanishing denominator.
struct PoleError : Error {
    explicit PoleError(const std::string& msg) : Error(msg) {}
};

// Input outside the supported fragment (non-integer shift coefficients,
// unbalanced Gamma products, |z| > 1, ...).
struct UnsupportedError : Error {
    explicit UnsupportedError(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

} // namespace hypsum
