#include "charpoly/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace charpoly {

Monomial::Monomial(std::vector<std::pair<int, int>> exps) : exps_(std::move(exps)) {
    std::sort(exps_.begin(), exps_.end());
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i].first < 1) throw std::invalid_argument("Monomial: variable index < 1");
        if (exps_[i].second < 1) throw std::invalid_argument("Monomial: exponent < 1");
        if (i > 0 && exps_[i].first == exps_[i - 1].first)
            throw std::invalid_argument("Monomial: duplicate variable");
    }
}

Monomial Monomial::variable(int i, int e) { return Monomial({{i, e}}); }

int Monomial::exponent_of(int var) const {
    for (auto& [v, e] : exps_)
        if (v == var) return e;
    return 0;
}

int Monomial::graded_degree() const {
    int d = 0;
    for (auto& [v, e] : exps_) d += v * e;
    return d;
}

int Monomial::total_exponent() const {
    int d = 0;
    for (auto& [v, e] : exps_) d += e;
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    std::vector<std::pair<int, int>> merged;
    merged.reserve(exps_.size() + o.exps_.size());
    std::size_t i = 0, j = 0;
    while (i < exps_.size() || j < o.exps_.size()) {
        if (j == o.exps_.size() || (i < exps_.size() && exps_[i].first < o.exps_[j].first))
            merged.push_back(exps_[i++]);
        else if (i == exps_.size() || o.exps_[j].first < exps_[i].first)
            merged.push_back(o.exps_[j++]);
        else {
            merged.push_back({exps_[i].first, exps_[i].second + o.exps_[j].second});
            ++i, ++j;
        }
    }
    Monomial r;
    r.exps_ = std::move(merged);
    return r;
}

std::string Monomial::str() const {
    if (exps_.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (i) out += '*';
        out += 'X';
        out += std::to_string(exps_[i].first);
        if (exps_[i].second != 1) {
            out += '^';
            out += std::to_string(exps_[i].second);
        }
    }
    return out;
}

bool MonomialCanonicalLess::operator()(const Monomial& a, const Monomial& b) const {
    int da = a.total_exponent(), db = b.total_exponent();
    if (da != db) return da > db;  // higher ordinary degree first
    // Ties: the monomial with the smaller exponent at the highest differing
    // variable precedes (graded reverse-lexicographic, leading term first).
    int top = std::max(a.max_var(), b.max_var());
    for (int v = top; v >= 1; --v) {
        int ea = a.exponent_of(v), eb = b.exponent_of(v);
        if (ea != eb) return ea < eb;
    }
    return false;
}

Polynomial::Polynomial(const Rational& c) {
    if (!c.is_zero()) terms_.emplace(Monomial(), c);
}

Polynomial Polynomial::variable(int i) { return monomial(Monomial::variable(i), 1); }

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
    Polynomial p;
    if (!c.is_zero()) p.terms_.emplace(m, c);
    return p;
}

Rational Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational() : it->second;
}

int Polynomial::graded_degree() const {
    if (terms_.empty()) return kDegreeOfZero;
    int d = kDegreeOfZero;
    for (auto& [m, c] : terms_) d = std::max(d, m.graded_degree());
    return d;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (auto& [ma, ca] : a.terms_)
        for (auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& [m, c] : terms_) {
        Rational mag = c.is_negative() ? -c : c;
        if (first) {
            if (c.is_negative()) out += '-';
            first = false;
        } else {
            out += c.is_negative() ? " - " : " + ";
        }
        bool unit = (mag == Rational(1));
        if (m.is_constant()) {
            out += mag.str();
        } else {
            if (!unit) {
                out += mag.str();
                out += '*';
            }
            out += m.str();
        }
    }
    return out;
}

bool BinomialTermLess::operator()(const Partition& a, const Partition& b) const {
    if (a.size() != b.size()) return a.size() > b.size();
    return revlex_less(a, b);
}

BinomialExpansion::BinomialExpansion(CoeffMap coeffs) : coeffs_(std::move(coeffs)) {
    for (auto it = coeffs_.begin(); it != coeffs_.end();)
        it = it->second.is_zero() ? coeffs_.erase(it) : std::next(it);
}

Rational BinomialExpansion::coeff(const Partition& alpha) const {
    auto it = coeffs_.find(alpha);
    return it == coeffs_.end() ? Rational() : it->second;
}

void BinomialExpansion::add(const Partition& alpha, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.emplace(alpha, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

Polynomial binom_of_variable(int var, int k) {
    if (k < 0) return Polynomial();
    Polynomial r(1);
    for (int t = 0; t < k; ++t) r *= (Polynomial::variable(var) - Polynomial(Rational(t)));
    r *= Rational(BigInt(1), factorial(k));
    return r;
}

Polynomial mch_of_variable(int var, int k) {
    if (k < 0) return Polynomial();
    Polynomial r(1);
    for (int t = 0; t < k; ++t) r *= (Polynomial::variable(var) + Polynomial(Rational(t)));
    r *= Rational(BigInt(1), factorial(k));
    return r;
}

Polynomial binom_elem(const Partition& alpha) {
    Polynomial r(1);
    for (auto& [i, a] : alpha.exponential_form()) r *= binom_of_variable(i, a);
    return r;
}

BigInt stirling2(int n, int k) {
    if (n < 0 || k < 0) return 0;
    // Thread-confined memo; the conversion hot path takes no lock.
    thread_local std::vector<std::vector<BigInt>> table;  // table[n][k], k <= n
    while (static_cast<int>(table.size()) <= n) {
        int m = static_cast<int>(table.size());
        std::vector<BigInt> row(m + 1);
        row[0] = (m == 0) ? 1 : 0;
        for (int j = 1; j <= m; ++j) {
            BigInt same = (j <= m - 1) ? table[m - 1][j] : BigInt(0);
            row[j] = BigInt(j) * same + table[m - 1][j - 1];
        }
        table.push_back(std::move(row));
    }
    if (k > n) return 0;
    return table[n][k];
}

BinomialExpansion to_binomial_basis(const Polynomial& p) {
    BinomialExpansion out;
    for (auto& [mono, c] : p.terms()) {
        // Per variable, X^m = sum_j S2(m, j) j! binom(X, j); distribute the
        // choices of j across the variables of the monomial.
        std::vector<std::pair<int, int>> vars = mono.exps();
        std::map<int, int> mult;
        auto rec = [&](auto&& self, std::size_t idx, const Rational& acc) -> void {
            if (idx == vars.size()) {
                out.add(Partition::from_exponential(mult), acc);
                return;
            }
            auto [var, m] = vars[idx];
            for (int j = 1; j <= m; ++j) {
                BigInt w = stirling2(m, j) * factorial(j);
                if (w.is_zero()) continue;
                mult[var] = j;
                self(self, idx + 1, acc * Rational(w));
                mult.erase(var);
            }
        };
        rec(rec, 0, c);
    }
    return out;
}

Polynomial from_binomial_basis(const BinomialExpansion& e) {
    Polynomial r;
    for (auto& [alpha, c] : e.coeffs()) {
        Polynomial t = binom_elem(alpha);
        t *= c;
        r += t;
    }
    return r;
}

}  // namespace charpoly
