/*
 * symfunc.hpp
 * Symmetric functions in the power-sum basis (a polynomial in generators
 * p_1, p_2, ... with rational coefficients) and the ring isomorphism
 * Phi: Lambda -> P with p_k -> sum_{d|k} d X_d.
 */
#pragma once

#include "charpoly/partition.hpp"
#include "charpoly/polynomial.hpp"

namespace charpoly {

class SymFunc {
public:
    SymFunc() = default;  // zero
    explicit SymFunc(const Rational& c) : rep_(c) {}
    static SymFunc power_sum(int k);  // p_k, k >= 1

    // Internal representation: variable i stands for p_i.
    const Polynomial& rep() const { return rep_; }
    static SymFunc from_rep(Polynomial rep);

    bool is_zero() const { return rep_.is_zero(); }
    SymFunc& operator+=(const SymFunc& o) { rep_ += o.rep_; return *this; }
    SymFunc& operator-=(const SymFunc& o) { rep_ -= o.rep_; return *this; }
    SymFunc& operator*=(const SymFunc& o) { rep_ *= o.rep_; return *this; }
    SymFunc& operator*=(const Rational& c) { rep_ *= c; return *this; }
    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    friend SymFunc operator*(SymFunc a, const SymFunc& b) { return a *= b; }
    friend bool operator==(const SymFunc&, const SymFunc&) = default;

private:
    Polynomial rep_;
};

// Number-theoretic Moebius function.
int moebius(int n);

// Phi applied generator-wise: p_k -> sum_{d|k} d X_d, extended as an algebra map.
Polynomial phi(const SymFunc& f);

// Preimage of X_k under Phi: (1/k) sum_{d|k} mu(k/d) p_d.
SymFunc phi_inverse_gen(int k);

// Schur function in the power-sum basis: s_lambda = sum_{alpha} chi_lambda(alpha)/z_alpha p_alpha.
SymFunc schur_in_powersums(const Partition& lambda);

}  // namespace charpoly
