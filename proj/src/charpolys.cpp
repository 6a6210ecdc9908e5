#include "charpoly/charpolys.hpp"

#include "charpoly/characters.hpp"
#include "charpoly/errors.hpp"
#include "charpoly/series.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <stdexcept>

namespace charpoly {

CycleCounts::CycleCounts(std::map<int, int> c) : counts(std::move(c)) {
    for (auto& [i, x] : counts) {
        if (i < 1) throw std::invalid_argument("CycleCounts: cycle length < 1");
        if (x < 0) throw std::invalid_argument("CycleCounts: negative count");
    }
}

CycleCounts CycleCounts::identity_of(int n) {
    CycleCounts c;
    if (n > 0) c.counts[1] = n;
    return c;
}

CycleCounts CycleCounts::of_cycle_type(const Partition& beta) {
    CycleCounts c;
    c.counts = beta.exponential_form();
    return c;
}

int CycleCounts::count(int i) const {
    auto it = counts.find(i);
    return it == counts.end() ? 0 : it->second;
}

int CycleCounts::weighted_size() const {
    int s = 0;
    for (auto& [i, x] : counts) s += i * x;
    return s;
}

namespace {

std::mutex g_he_mutex;
std::vector<Polynomial> g_h_cache;  // g_h_cache[d] = H_d
std::vector<Polynomial> g_e_cache;

Polynomial compute_h(int d) {
    Polynomial r;
    for (const Partition& alpha : partitions_of(d)) {
        Polynomial t(1);
        for (auto& [i, a] : alpha.exponential_form()) t *= mch_of_variable(i, a);
        r += t;
    }
    return r;
}

Polynomial compute_e(int d) {
    Polynomial r;
    for (const Partition& alpha : partitions_of(d)) {
        int even_cycles = 0;
        Polynomial t(1);
        for (auto& [i, a] : alpha.exponential_form()) {
            t *= binom_of_variable(i, a);
            if (i % 2 == 0) even_cycles += a;
        }
        if (even_cycles % 2 != 0) t = -t;
        r += t;
    }
    return r;
}

}  // namespace

Polynomial h_poly(int d) {
    if (d < 0) return Polynomial();
    std::lock_guard<std::mutex> lock(g_he_mutex);
    while (static_cast<int>(g_h_cache.size()) <= d)
        g_h_cache.push_back(compute_h(static_cast<int>(g_h_cache.size())));
    return g_h_cache[d];
}

Polynomial e_poly(int d) {
    if (d < 0) return Polynomial();
    std::lock_guard<std::mutex> lock(g_he_mutex);
    while (static_cast<int>(g_e_cache.size()) <= d)
        g_e_cache.push_back(compute_e(static_cast<int>(g_e_cache.size())));
    return g_e_cache[d];
}

Polynomial poly_determinant(const std::vector<std::vector<Polynomial>>& m) {
    int l = static_cast<int>(m.size());
    if (l == 0) return Polynomial(1);
    for (auto& row : m)
        if (static_cast<int>(row.size()) != l)
            throw std::invalid_argument("poly_determinant: matrix not square");
    // dp[S] = determinant of the submatrix on rows 0..popcount(S)-1 and
    // column set S.
    std::vector<Polynomial> dp(std::size_t(1) << l);
    dp[0] = Polynomial(1);
    for (unsigned s = 1; s < dp.size(); ++s) {
        int row = std::popcount(s) - 1;
        Polynomial acc;
        int pos = 0;
        for (int j = 0; j < l; ++j) {
            if (!(s & (1u << j))) continue;
            if (!m[row][j].is_zero()) {
                Polynomial term = m[row][j] * dp[s & ~(1u << j)];
                if ((row + pos) % 2 != 0) term = -term;
                acc += term;
            }
            ++pos;
        }
        dp[s] = std::move(acc);
    }
    return dp.back();
}

namespace {

Polynomial jacobi_trudi(const Partition& shape, Polynomial (*entry)(int)) {
    int l = shape.length();
    if (l == 0) return Polynomial(1);
    std::vector<std::vector<Polynomial>> m(l, std::vector<Polynomial>(l));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) m[i][j] = entry(shape.part(i) + j - i);
    return poly_determinant(m);
}

}  // namespace

Polynomial weyl_poly_h_det(const Partition& lambda) { return jacobi_trudi(lambda, &h_poly); }

Polynomial weyl_poly_e_det(const Partition& lambda) {
    return jacobi_trudi(conjugate(lambda), &e_poly);
}

Polynomial weyl_poly(const Partition& lambda) {
    Partition conj = conjugate(lambda);
    return lambda.length() <= conj.length() ? weyl_poly_h_det(lambda) : weyl_poly_e_det(lambda);
}

Polynomial weyl_poly_via_genfun(const Partition& lambda) {
    int l = lambda.length();
    if (l > 4) throw FeasibilityError("weyl_poly_via_genfun: length(lambda) > 4");
    if (l == 0) return Polynomial(1);

    // Coefficient of t^lambda in prod_{i<j}(1 - t_j/t_i) prod_r prod_i
    // (1 - t_r^i)^{-X_i}. Clearing denominators with prod_r t_r^{l-r} turns
    // the Vandermonde-like prefactor into sum_w sgn(w) prod_r t_r^{l - w(r)}
    // and shifts the extracted exponent to lambda_r + l - r.
    std::vector<int> bounds(l);
    for (int r = 0; r < l; ++r) bounds[r] = lambda.part(r) + (l - 1 - r);

    Series prefactor(l, bounds);
    std::vector<int> perm(l);
    for (int i = 0; i < l; ++i) perm[i] = i;
    do {
        int inversions = 0;
        for (int i = 0; i < l; ++i)
            for (int j = i + 1; j < l; ++j)
                if (perm[i] > perm[j]) ++inversions;
        std::vector<int> e(l);
        for (int r = 0; r < l; ++r) e[r] = l - 1 - perm[r];
        prefactor.add_term(e, Polynomial(Rational(inversions % 2 == 0 ? 1 : -1)));
    } while (std::next_permutation(perm.begin(), perm.end()));

    Series acc = prefactor;
    for (int r = 0; r < l; ++r)
        for (int i = 1; i <= bounds[r]; ++i) acc = acc * expand_power_neg(acc, r, i, i);

    std::vector<int> target(l);
    for (int r = 0; r < l; ++r) target[r] = lambda.part(r) + (l - 1 - r);
    return acc.coeff(target);
}

Polynomial specht_poly(const Partition& mu) {
    BinomialExpansion e;
    for (const Partition& nu : vertical_strip_subpartitions(mu)) {
        bool negate = (mu.size() - nu.size()) % 2 != 0;
        auto table = CharacterTable::get(nu.size());
        for (const Partition& alpha : table->index()) {
            Rational c(table->value(nu, alpha));
            e.add(alpha, negate ? -c : c);
        }
    }
    return from_binomial_basis(e);
}

Polynomial tau(int d, const Polynomial& p) {
    Polynomial r;
    for (auto& [m, c] : p.terms()) {
        bool negate = (d - m.total_exponent()) % 2 != 0;
        r.add_term(m, negate ? -c : c);
    }
    return r;
}

Rational eval_at(const Polynomial& p, const CycleCounts& c) {
    Rational total;
    for (auto& [m, coef] : p.terms()) {
        BigInt prod = 1;
        bool zero = false;
        for (auto& [var, e] : m.exps()) {
            int x = c.count(var);
            if (x == 0) {
                zero = true;
                break;
            }
            for (int t = 0; t < e; ++t) prod *= x;
        }
        if (!zero) total += coef * Rational(prod);
    }
    return total;
}

Polynomial h_product(const std::vector<int>& parts) {
    Polynomial r(1);
    for (int p : parts) r *= h_poly(p);
    return r;
}

Polynomial e_product(const std::vector<int>& parts) {
    Polynomial r(1);
    for (int p : parts) r *= e_poly(p);
    return r;
}

}  // namespace charpoly
