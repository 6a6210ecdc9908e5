/*
 * oracle.hpp
 * Independent verification path that avoids the character-polynomial
 * machinery entirely: traces of Sym^d and the d-th exterior power on K^n are
 * obtained by direct enumeration of fixed multisets/subsets, characters of
 * restricted Weyl modules by integer determinants of those traces, and
 * multiplicities by class-function inner products over S_n.
 */
#pragma once

#include "charpoly/charpolys.hpp"
#include "charpoly/partition.hpp"
#include "charpoly/polynomial.hpp"

#include <map>
#include <vector>

namespace charpoly {

// One-line form of a concrete permutation of {0..n-1}.
struct PermutationWitness {
    int n = 0;
    std::vector<int> image;

    int apply(int x) const { return image[x]; }
};

// Representative permutation with the given cycle type, cycles laid out left
// to right.
PermutationWitness witness_of_cycle_type(const Partition& beta);
Partition cycle_type_of(const PermutationWitness& w);
CycleCounts cycle_counts_of(const PermutationWitness& w);

// Number of size-d multisets over {1..n} fixed by w, by direct enumeration.
// Enforces binom(n+d-1, d) <= 10^6 (FeasibilityError).
long long trace_sym(const PermutationWitness& w, int d);

// Signed count over w-fixed d-subsets; the sign of a fixed subset is the
// product over its cycles of -(-1)^{length}. Enforces binom(n, d) <= 10^6.
long long trace_alt(const PermutationWitness& w, int d);

// K-valued class function on S_n, stored per cycle type.
struct ClassFunction {
    int n = 0;
    std::map<Partition, Rational, PartitionLess> values;
};

// Schur inner product sum_beta f(beta) g(beta) / z_beta.
Rational class_inner_product(const ClassFunction& f, const ClassFunction& g);

// Character of Res W_lambda(K^n) to S_n: for each cycle type, the determinant
// of the integer matrix (trace_sym(w, lambda_i + j - i)).
ClassFunction weyl_class_function(const Partition& lambda, int n);

// Multiplicities <f, chi_nu> for all nu of n; exact rationals (integrality is
// asserted by callers when f is a genuine character).
std::map<Partition, Rational, PartitionLess> decompose(const ClassFunction& f);

// Multiplicity of V_{mu[n]} in Res W_lambda(K^n); requires n >= |mu| + mu_1
// and length(lambda) <= n.
BigInt oracle_restriction(const Partition& lambda, const Partition& mu, int n);

// (1/n!) sum_{w in S_n} p(w) computed as a sum over conjugacy classes; the
// direct-average route to moments, sharing no code with moment_n.
Rational moment_by_class_average(const Polynomial& p, int n);

}  // namespace charpoly
