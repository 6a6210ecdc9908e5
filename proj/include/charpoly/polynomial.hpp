/*
 * polynomial.hpp
 * Sparse multivariate polynomials over Q in variables X1, X2, ... with the
 * grading deg(X_i) = i, plus the binomial basis binom(X, alpha) indexed by
 * integer partitions and the conversion between the two.
 *
 * Canonical term order (used for all text/JSON emission): ordinary total
 * degree descending, ties by graded reverse-lexicographic comparison, so the
 * leading term comes first and output is deterministic.
 */
#pragma once

#include "charpoly/partition.hpp"
#include "charpoly/rational.hpp"

#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace charpoly {

class Monomial {
public:
    Monomial() = default;  // constant monomial
    // Pairs (variable index >= 1, exponent >= 1); throws on invalid entries.
    explicit Monomial(std::vector<std::pair<int, int>> exps);
    static Monomial variable(int i, int e = 1);

    const std::vector<std::pair<int, int>>& exps() const { return exps_; }
    bool is_constant() const { return exps_.empty(); }
    int exponent_of(int var) const;
    int max_var() const { return exps_.empty() ? 0 : exps_.back().first; }
    int graded_degree() const;   // sum of i * e_i
    int total_exponent() const;  // sum of e_i

    Monomial operator*(const Monomial& o) const;
    friend bool operator==(const Monomial&, const Monomial&) = default;

    std::string str() const;  // "X1^2*X3"; "1" for the constant monomial

private:
    std::vector<std::pair<int, int>> exps_;  // sorted by variable index
};

struct MonomialCanonicalLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialCanonicalLess>;

    Polynomial() = default;  // zero
    Polynomial(const Rational& c);
    Polynomial(long long c) : Polynomial(Rational(c)) {}
    static Polynomial variable(int i);
    static Polynomial monomial(const Monomial& m, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    Rational coeff(const Monomial& m) const;

    // Returned for the zero polynomial instead of a graded degree.
    static constexpr int kDegreeOfZero = std::numeric_limits<int>::min();
    int graded_degree() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial& operator*=(const Rational& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    Polynomial operator-() const;
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    void add_term(const Monomial& m, const Rational& c);  // accumulates, prunes zeros

    std::string str() const;  // e.g. "1/3*X1^3 - 1/3*X1 - X3"; "0" for zero

private:
    TermMap terms_;
};

// Binomial-basis term order for emission: size descending, reverse-lex within.
struct BinomialTermLess {
    bool operator()(const Partition& a, const Partition& b) const;
};

// An element of P written as sum_alpha c_alpha * binom(X, alpha).
class BinomialExpansion {
public:
    using CoeffMap = std::map<Partition, Rational, BinomialTermLess>;

    BinomialExpansion() = default;
    explicit BinomialExpansion(CoeffMap coeffs);

    const CoeffMap& coeffs() const { return coeffs_; }
    Rational coeff(const Partition& alpha) const;
    void add(const Partition& alpha, const Rational& c);
    bool is_zero() const { return coeffs_.empty(); }
    friend bool operator==(const BinomialExpansion&, const BinomialExpansion&) = default;

private:
    CoeffMap coeffs_;
};

// binom(X_var, k) expanded into monomials: X(X-1)...(X-k+1)/k!.
Polynomial binom_of_variable(int var, int k);

// Multichoose binom(X_var + k - 1, k).
Polynomial mch_of_variable(int var, int k);

// binom(X, alpha) = prod_i binom(X_i, a_i); binom_elem(empty) = 1.
Polynomial binom_elem(const Partition& alpha);

// Stirling numbers of the second kind, memoized; thread-safe.
BigInt stirling2(int n, int k);

BinomialExpansion to_binomial_basis(const Polynomial& p);
Polynomial from_binomial_basis(const BinomialExpansion& e);

}  // namespace charpoly
