#include "charpoly/symfunc.hpp"

#include "charpoly/characters.hpp"

#include <stdexcept>

namespace charpoly {

SymFunc SymFunc::power_sum(int k) {
    if (k < 1) throw std::invalid_argument("power_sum: k must be >= 1");
    return from_rep(Polynomial::variable(k));
}

SymFunc SymFunc::from_rep(Polynomial rep) {
    SymFunc f;
    f.rep_ = std::move(rep);
    return f;
}

int moebius(int n) {
    if (n < 1) throw std::invalid_argument("moebius: n must be >= 1");
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;  // squared prime factor
            result = -result;
        }
    }
    if (n > 1) result = -result;
    return result;
}

Polynomial phi(const SymFunc& f) {
    Polynomial out;
    for (auto& [mono, c] : f.rep().terms()) {
        Polynomial term(c);
        for (auto& [k, e] : mono.exps()) {
            Polynomial image;  // sum_{d|k} d X_d
            for (int d = 1; d <= k; ++d)
                if (k % d == 0) image += Polynomial::monomial(Monomial::variable(d), Rational(d));
            for (int t = 0; t < e; ++t) term *= image;
        }
        out += term;
    }
    return out;
}

SymFunc phi_inverse_gen(int k) {
    if (k < 1) throw std::invalid_argument("phi_inverse_gen: k must be >= 1");
    Polynomial rep;
    for (int d = 1; d <= k; ++d) {
        if (k % d != 0) continue;
        int mu = moebius(k / d);
        if (mu == 0) continue;
        rep.add_term(Monomial::variable(d), Rational(BigInt(mu), BigInt(k)));
    }
    return SymFunc::from_rep(std::move(rep));
}

SymFunc schur_in_powersums(const Partition& lambda) {
    auto table = CharacterTable::get(lambda.size());
    Polynomial rep;
    for (const Partition& alpha : table->index()) {
        Rational c(table->value(lambda, alpha));
        if (c.is_zero()) continue;
        c /= Rational(z_alpha(alpha));
        Monomial p_alpha;
        for (auto& [i, a] : alpha.exponential_form()) p_alpha = p_alpha * Monomial::variable(i, a);
        rep.add_term(p_alpha, c);
    }
    return SymFunc::from_rep(std::move(rep));
}

}  // namespace charpoly
