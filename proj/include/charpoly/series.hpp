/*
 * series.hpp
 * Truncated formal power series in a fixed list of auxiliary variables, with
 * Polynomial coefficients. Arithmetic is exact below the truncation bounds;
 * terms at or beyond a bound are discarded.
 */
#pragma once

#include "charpoly/polynomial.hpp"

#include <map>
#include <optional>
#include <vector>

namespace charpoly {

// Default per-variable truncation degree; callers override per use.
inline constexpr int kDefaultSeriesBound = 8;

class Series {
public:
    // per_var_bound[v] is the largest retained exponent of variable v;
    // total_bound, when set, additionally caps the exponent sum.
    Series(int num_vars, std::vector<int> per_var_bound,
           std::optional<int> total_bound = std::nullopt);
    explicit Series(int num_vars)
        : Series(num_vars, std::vector<int>(num_vars, kDefaultSeriesBound)) {}

    static Series one(int num_vars, std::vector<int> per_var_bound,
                      std::optional<int> total_bound = std::nullopt);

    int num_vars() const { return num_vars_; }
    const std::vector<int>& per_var_bound() const { return per_var_bound_; }
    const std::optional<int>& total_bound() const { return total_bound_; }
    bool same_shape(const Series& o) const;

    bool within_bounds(const std::vector<int>& exps) const;
    void add_term(const std::vector<int>& exps, const Polynomial& c);
    Polynomial coeff(const std::vector<int>& exps) const;
    const std::map<std::vector<int>, Polynomial>& terms() const { return terms_; }

    Series operator+(const Series& o) const;
    Series operator-(const Series& o) const;
    Series operator*(const Series& o) const;

    // Multiplicative inverse of a series with constant term 1; throws
    // std::invalid_argument otherwise.
    Series geom_inverse() const;

    friend bool operator==(const Series&, const Series&) = default;

private:
    int num_vars_;
    std::vector<int> per_var_bound_;
    std::optional<int> total_bound_;
    std::map<std::vector<int>, Polynomial> terms_;
};

// (1 - t^i)^{-X_xvar} = sum_j mch(X_xvar, j) t^{ij}, truncated; t is series
// variable tvar of the prototype shape.
Series expand_power_neg(const Series& shape, int tvar, int i, int xvar);

// (1 + (-t)^i)^{X_xvar} = sum_j (-1)^{ij} binom(X_xvar, j) t^{ij}, truncated.
Series expand_power_pos(const Series& shape, int tvar, int i, int xvar);

}  // namespace charpoly
