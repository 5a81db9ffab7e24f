#pragma once

#include <optional>

#include "hypsum/hyperterm.hpp"
#include "hypsum/linear_algebra.hpp"

namespace hypsum {

// Gosper normal form of a term ratio r(k):
//   r(k) = z_const * (p(k+1)/p(k)) * (q(k)/s(k+1)),
// with gcd(q(k), s(k+j)) = 1 for every integer j >= 1 by construction (the
// j = 0 overlap cannot always be removed; it does not occur for the proper
// terms this engine builds, and the final identity is verified regardless).
struct GosperForm {
    RationalFunction z_const; // free of k
    Polynomial p, q, s;       // polynomials in k over the parameters
};

GosperForm gosper_form(const RationalFunction& r, const std::string& k = "k");

// Indefinite summation: given r(k) = t(k+1)/t(k), returns R(k) with
// G = R*t satisfying G(k+1) - G(k) = t(k), verified through the exact
// identity R(k+1)*r(k) - R(k) = 1; nullopt when t is not Gosper-summable.
std::optional<RationalFunction> gosper(const RationalFunction& r, const std::string& k = "k");

struct Certificate {
    RationalFunction c;
    bool zero_certificate = false; // F independent of n
};

// Creative telescoping at order 1 in n: finds C with G = C*F satisfying
// F(n,k) - F(n+1,k) = G(n,k+1) - G(n,k).
std::optional<Certificate> wz_pair(const HyperTerm& f);

// Exact check of 1 - q_n(n,k) = C(n,k+1)*q_k(n,k) - C(n,k).
bool verify_certificate(const HyperTerm& f, const Certificate& cert);

// sigma_0 M(p,k) + ... + sigma_J M(p+J,k) = G'(k+1) - G'(k), G' = C'*M.
struct Recurrence {
    std::string shift_var;
    int order = 0;
    std::vector<RationalFunction> sigma; // parameters only, not all zero
    Certificate cert;
};

// Parameter recurrence by Zeilberger's algorithm; tries order 1 first and
// increments up to max_order.
std::optional<Recurrence> zeilberger(const HyperTerm& m, const std::string& param,
                                     int max_order);

// Exact check of sum_i sigma_i * (M(p+i)/M(p)) = C'(k+1)*q_k - C'(k).
bool verify_recurrence(const HyperTerm& m, const Recurrence& rec);

} // namespace hypsum
