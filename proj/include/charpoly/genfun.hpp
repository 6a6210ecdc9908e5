/*
 * genfun.hpp
 * Verification of the moment generating-function identities: each identity's
 * product side is expanded as a truncated series and every coefficient below
 * the truncation is compared against the directly computed moment.
 */
#pragma once

#include "charpoly/moments.hpp"
#include "charpoly/report.hpp"

#include <string>

namespace charpoly {

enum class GenfunIdentity {
    binomial_moments,  // sum_n <binom(X,alpha)>_n v^n = v^{|alpha|}/z_alpha * 1/(1-v)
    hmomgen,           // sum <H_lambda>_n t^lambda v^n = prod_R (1 - t^R v)^{-1}
    he,                // sum <H_i E_j> t^i u^j = prod_k (1 + t^k u) / prod_k (1 - t^k)
    hlamu,             // stable <H_lambda E_mu> over products indexed by (R, S)
    hlaemu,            // <H_lambda E_mu>_n with the extra v variable
};

struct GenfunBounds {
    int l = 2;             // number of t variables
    int m = 2;             // number of u variables
    int max_exponent = 6;  // per-variable truncation (also caps v and n)
    int alpha_max = 5;     // |alpha| cap for binomial_moments
};

const char* genfun_identity_name(GenfunIdentity id);
GenfunIdentity parse_genfun_identity(const std::string& name);

// Throws FeasibilityError when the bounds exceed the supported budget
// (l, m <= 3, exponents <= 8).
Report verify_genfun(GenfunIdentity id, const GenfunBounds& bounds, int jobs = 1);

// All five identities.
Report verify_genfun_all(const GenfunBounds& bounds, int jobs = 1);

}  // namespace charpoly
