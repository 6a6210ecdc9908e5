#include "charpoly/series.hpp"

#include <numeric>
#include <stdexcept>

namespace charpoly {

Series::Series(int num_vars, std::vector<int> per_var_bound, std::optional<int> total_bound)
    : num_vars_(num_vars), per_var_bound_(std::move(per_var_bound)), total_bound_(total_bound) {
    if (num_vars_ < 0) throw std::invalid_argument("Series: negative variable count");
    if (static_cast<int>(per_var_bound_.size()) != num_vars_)
        throw std::invalid_argument("Series: bound list size mismatch");
    for (int b : per_var_bound_)
        if (b < 0) throw std::invalid_argument("Series: negative bound");
}

Series Series::one(int num_vars, std::vector<int> per_var_bound, std::optional<int> total_bound) {
    Series s(num_vars, std::move(per_var_bound), total_bound);
    s.add_term(std::vector<int>(num_vars, 0), Polynomial(1));
    return s;
}

bool Series::same_shape(const Series& o) const {
    return num_vars_ == o.num_vars_ && per_var_bound_ == o.per_var_bound_ &&
           total_bound_ == o.total_bound_;
}

bool Series::within_bounds(const std::vector<int>& exps) const {
    if (static_cast<int>(exps.size()) != num_vars_) return false;
    int total = 0;
    for (int v = 0; v < num_vars_; ++v) {
        if (exps[v] < 0 || exps[v] > per_var_bound_[v]) return false;
        total += exps[v];
    }
    return !total_bound_ || total <= *total_bound_;
}

void Series::add_term(const std::vector<int>& exps, const Polynomial& c) {
    if (c.is_zero() || !within_bounds(exps)) return;
    auto [it, inserted] = terms_.emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Series::coeff(const std::vector<int>& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Polynomial() : it->second;
}

Series Series::operator+(const Series& o) const {
    if (!same_shape(o)) throw std::invalid_argument("Series: shape mismatch");
    Series r = *this;
    for (auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Series Series::operator-(const Series& o) const {
    if (!same_shape(o)) throw std::invalid_argument("Series: shape mismatch");
    Series r = *this;
    for (auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

Series Series::operator*(const Series& o) const {
    if (!same_shape(o)) throw std::invalid_argument("Series: shape mismatch");
    Series r(num_vars_, per_var_bound_, total_bound_);
    std::vector<int> e(num_vars_);
    for (auto& [ea, ca] : terms_)
        for (auto& [eb, cb] : o.terms_) {
            bool ok = true;
            int total = 0;
            for (int v = 0; v < num_vars_; ++v) {
                e[v] = ea[v] + eb[v];
                if (e[v] > per_var_bound_[v]) { ok = false; break; }
                total += e[v];
            }
            if (!ok || (total_bound_ && total > *total_bound_)) continue;
            r.add_term(e, ca * cb);
        }
    return r;
}

Series Series::geom_inverse() const {
    std::vector<int> zero(num_vars_, 0);
    if (!(coeff(zero) == Polynomial(1)))
        throw std::invalid_argument("Series: geom_inverse requires constant term 1");
    // 1/(1-u) = sum u^k with u = 1 - *this (no constant term); u^k dies once
    // k exceeds the largest admissible total exponent.
    Series u = one(num_vars_, per_var_bound_, total_bound_) - *this;
    Series r = one(num_vars_, per_var_bound_, total_bound_);
    Series pw = u;
    int max_total = total_bound_ ? *total_bound_
                                 : std::accumulate(per_var_bound_.begin(), per_var_bound_.end(), 0);
    for (int k = 1; k <= max_total && !pw.terms_.empty(); ++k) {
        r = r + pw;
        pw = pw * u;
    }
    return r;
}

Series expand_power_neg(const Series& shape, int tvar, int i, int xvar) {
    Series s(shape.num_vars(), shape.per_var_bound(), shape.total_bound());
    std::vector<int> e(shape.num_vars(), 0);
    for (int j = 0; i * j <= shape.per_var_bound()[tvar]; ++j) {
        e[tvar] = i * j;
        s.add_term(e, mch_of_variable(xvar, j));
    }
    return s;
}

Series expand_power_pos(const Series& shape, int tvar, int i, int xvar) {
    Series s(shape.num_vars(), shape.per_var_bound(), shape.total_bound());
    std::vector<int> e(shape.num_vars(), 0);
    for (int j = 0; i * j <= shape.per_var_bound()[tvar]; ++j) {
        e[tvar] = i * j;
        Polynomial c = binom_of_variable(xvar, j);
        if ((i * j) % 2 != 0) c = -c;
        s.add_term(e, c);
    }
    return s;
}

}  // namespace charpoly
