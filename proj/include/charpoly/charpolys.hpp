/*
 * charpolys.hpp
 * Character polynomials of representation families: symmetric powers H_d,
 * exterior powers E_d, Weyl modules S_lambda (Jacobi-Trudi determinants in
 * either H or E form, and a generating-function route), Specht modules
 * q_lambda, the sign-twisting involution tau_d, and evaluation at cycle
 * counts.
 */
#pragma once

#include "charpoly/partition.hpp"
#include "charpoly/polynomial.hpp"

#include <map>

namespace charpoly {

// X_i(w): number of i-cycles of a permutation; all counts nonnegative.
struct CycleCounts {
    std::map<int, int> counts;

    CycleCounts() = default;
    explicit CycleCounts(std::map<int, int> c);
    CycleCounts(std::initializer_list<std::pair<const int, int>> items)
        : CycleCounts(std::map<int, int>(items)) {}
    static CycleCounts identity_of(int n);            // X_1 = n
    static CycleCounts of_cycle_type(const Partition& beta);

    int count(int i) const;
    int weighted_size() const;  // sum i * X_i
};

// Character polynomial of Sym^d; H_0 = 1, H_d = 0 for d < 0.
Polynomial h_poly(int d);

// Character polynomial of the d-th exterior power; E_0 = 1, E_d = 0 for d < 0.
Polynomial e_poly(int d);

// Character polynomial of the Weyl module family W_lambda(K^n); uses the
// cheaper of the two Jacobi-Trudi determinant forms.
Polynomial weyl_poly(const Partition& lambda);
Polynomial weyl_poly_h_det(const Partition& lambda);  // det(H_{lambda_i + j - i})
Polynomial weyl_poly_e_det(const Partition& lambda);  // det(E_{lambda'_i + j - i})

// Same polynomial extracted as a coefficient of a truncated multivariate
// generating function; practicality bound length(lambda) <= 4 (FeasibilityError).
Polynomial weyl_poly_via_genfun(const Partition& lambda);

// Character polynomial q_mu of the Specht module family V_{mu[n]}, valid for
// n >= |mu| + mu_1; q_empty = 1.
Polynomial specht_poly(const Partition& mu);

// Linear involution X^m -> (-1)^{d - (total exponent of m)} X^m. The intended
// degree d is explicit because the sign depends on it.
Polynomial tau(int d, const Polynomial& p);

// Substitute cycle counts for the variables.
Rational eval_at(const Polynomial& p, const CycleCounts& c);

// H_{lambda_1} * ... * H_{lambda_l} for an arbitrary composition.
Polynomial h_product(const std::vector<int>& parts);
Polynomial e_product(const std::vector<int>& parts);

// Determinant of a square polynomial matrix (Laplace expansion with subset
// memoization; intended for the small matrices that arise here).
Polynomial poly_determinant(const std::vector<std::vector<Polynomial>>& m);

}  // namespace charpoly
