/*
 * moments.hpp
 * The moment functional <q>_n (average of the class function of q over S_n),
 * stable moments, and the coefficient computations built on them: stable
 * restriction coefficients r_{lambda,mu}, Kronecker coefficients, and
 * dimensions of symmetric-group invariants in Weyl modules.
 *
 * The moment of a binomial basis element binom(X, alpha) at n is 0 when
 * n < |alpha| and 1/z_alpha otherwise; everything here expands through the
 * binomial basis and applies that formula.
 */
#pragma once

#include "charpoly/charpolys.hpp"
#include "charpoly/partition.hpp"
#include "charpoly/polynomial.hpp"

#include <algorithm>
#include <memory>
#include <vector>

namespace charpoly {

Rational moment_n(const Polynomial& p, int n);

// Equals moment_n(p, m) for every m >= graded_degree(p).
Rational stable_moment(const Polynomial& p);

// Cumulative moments by n: profile[n] = moment_n(p, n) for 0 <= n <= deg;
// moment_n(p, m) = profile[min(m, deg)]. A zero polynomial yields {0}.
std::vector<Rational> moment_profile(const Polynomial& p);

// Stable restriction coefficient r_{lambda,mu} = <S_lambda q_mu>; the result
// is a nonnegative integer by theorem, enforced with ConsistencyError.
BigInt restriction_coeff_stable(const Partition& lambda, const Partition& mu);

// r_{lambda,mu}(n) = <S_lambda q_mu>_n; requires n >= |mu| + mu_1 (the
// validity range of q_mu), otherwise std::invalid_argument.
BigInt restriction_coeff_at(const Partition& lambda, const Partition& mu, int n);

// Stable Kronecker coefficient <q_lambda q_mu q_nu>; the three partitions
// must have equal size.
BigInt kronecker_stable(const Partition& lambda, const Partition& mu, const Partition& nu);

// dim W_lambda(K^n)^{S_n} = <S_lambda>_n.
BigInt invariant_dim(const Partition& lambda, int n);

// <H_{l_1}...H_{l_a} E_{m_1}...E_{m_b}>_n for arbitrary compositions.
Rational mixed_moment(const std::vector<int>& h_parts, const std::vector<int>& e_parts, int n);
Rational mixed_moment_stable(const std::vector<int>& h_parts, const std::vector<int>& e_parts);

// Shared cache of cumulative moment profiles of H/E products, keyed by the
// sorted parts (products commute). Safe for concurrent use.
class MixedMomentCache {
public:
    // profile(h, e)[n] = <H_h E_e>_n for n up to the product's degree.
    std::vector<Rational> profile(std::vector<int> h_parts, std::vector<int> e_parts);

    static Rational moment_from(const std::vector<Rational>& profile, int n) {
        return profile[std::min<std::size_t>(n, profile.size() - 1)];
    }
    static Rational stable_profile_value(const std::vector<Rational>& profile) {
        return profile.back();
    }

private:
    struct Impl;
    std::shared_ptr<Impl> impl_ = make_impl();
    static std::shared_ptr<Impl> make_impl();
};

}  // namespace charpoly
