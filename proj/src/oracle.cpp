#include "charpoly/oracle.hpp"

#include "charpoly/characters.hpp"
#include "charpoly/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace charpoly {

namespace {

constexpr long long kEnumerationBudget = 1000000;

long long small_binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > 4 * kEnumerationBudget) return r;  // saturate; only compared to the budget
    }
    return r;
}

}  // namespace

PermutationWitness witness_of_cycle_type(const Partition& beta) {
    PermutationWitness w;
    w.n = beta.size();
    w.image.resize(w.n);
    int start = 0;
    for (int len : beta.parts()) {
        for (int i = 0; i < len; ++i) w.image[start + i] = start + (i + 1) % len;
        start += len;
    }
    return w;
}

Partition cycle_type_of(const PermutationWitness& w) {
    std::vector<bool> seen(w.n, false);
    std::vector<int> lens;
    for (int i = 0; i < w.n; ++i) {
        if (seen[i]) continue;
        int len = 0, x = i;
        while (!seen[x]) {
            seen[x] = true;
            x = w.image[x];
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end(), std::greater<int>());
    return Partition(std::move(lens));
}

CycleCounts cycle_counts_of(const PermutationWitness& w) {
    return CycleCounts::of_cycle_type(cycle_type_of(w));
}

long long trace_sym(const PermutationWitness& w, int d) {
    if (d < 0 || w.n < 1) throw std::invalid_argument("trace_sym: need d >= 0 and n >= 1");
    if (small_binomial(w.n + d - 1, d) > kEnumerationBudget)
        throw FeasibilityError("trace_sym: enumeration too large");
    // Multisets as nondecreasing index sequences; a multiset is fixed when its
    // multiplicity map is unchanged by relabeling through w.
    std::vector<int> pick(d, 0);
    std::vector<int> mult(w.n), moved(w.n);
    long long count = 0;
    auto rec = [&](auto&& self, int pos, int min_v) -> void {
        if (pos == d) {
            std::fill(mult.begin(), mult.end(), 0);
            std::fill(moved.begin(), moved.end(), 0);
            for (int i = 0; i < d; ++i) {
                ++mult[pick[i]];
                ++moved[w.apply(pick[i])];
            }
            if (mult == moved) ++count;
            return;
        }
        for (int v = min_v; v < w.n; ++v) {
            pick[pos] = v;
            self(self, pos + 1, v);
        }
    };
    rec(rec, 0, 0);
    return count;
}

long long trace_alt(const PermutationWitness& w, int d) {
    if (d < 0 || w.n < 1) throw std::invalid_argument("trace_alt: need d >= 0 and n >= 1");
    if (small_binomial(w.n, d) > kEnumerationBudget)
        throw FeasibilityError("trace_alt: enumeration too large");
    std::vector<int> pick;
    std::vector<bool> in_set(w.n, false);
    long long total = 0;
    auto signed_contribution = [&]() {
        // Fixed subsets are unions of cycles; walk them to collect lengths.
        for (int v : pick)
            if (!in_set[w.apply(v)]) return;  // not w-stable
        std::vector<bool> seen(w.n, false);
        int sign = 1;
        for (int v : pick) {
            if (seen[v]) continue;
            int len = 0, x = v;
            while (!seen[x]) {
                seen[x] = true;
                x = w.apply(x);
                ++len;
            }
            if (len % 2 == 0) sign = -sign;  // -(-1)^len
        }
        total += sign;
    };
    auto rec = [&](auto&& self, int pos, int min_v) -> void {
        if (pos == d) {
            signed_contribution();
            return;
        }
        for (int v = min_v; v < w.n; ++v) {
            pick.push_back(v);
            in_set[v] = true;
            self(self, pos + 1, v + 1);
            pick.pop_back();
            in_set[v] = false;
        }
    };
    rec(rec, 0, 0);
    return total;
}

Rational class_inner_product(const ClassFunction& f, const ClassFunction& g) {
    if (f.n != g.n) throw std::invalid_argument("class_inner_product: group size mismatch");
    Rational total;
    for (auto& [beta, fv] : f.values) {
        auto it = g.values.find(beta);
        if (it == g.values.end()) throw std::invalid_argument("class_inner_product: domain gap");
        total += fv * it->second / Rational(z_alpha(beta));
    }
    return total;
}

namespace {

// Integer determinant by fraction-free Gaussian elimination (Bareiss).
BigInt int_determinant(std::vector<std::vector<BigInt>> m) {
    int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    BigInt sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k].is_zero()) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m[i][k].is_zero()) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace

ClassFunction weyl_class_function(const Partition& lambda, int n) {
    if (lambda.length() > n)
        throw std::invalid_argument("weyl_class_function: lambda has more than n parts");
    if (n < 1) throw std::invalid_argument("weyl_class_function: n must be >= 1");
    ClassFunction f;
    f.n = n;
    int l = lambda.length();
    for (const Partition& beta : partitions_of(n)) {
        PermutationWitness w = witness_of_cycle_type(beta);
        if (l == 0) {
            f.values.emplace(beta, Rational(1));
            continue;
        }
        std::vector<std::vector<BigInt>> m(l, std::vector<BigInt>(l));
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) {
                int d = lambda.part(i) + j - i;
                m[i][j] = d < 0 ? BigInt(0) : BigInt(trace_sym(w, d));
            }
        f.values.emplace(beta, Rational(int_determinant(std::move(m))));
    }
    return f;
}

std::map<Partition, Rational, PartitionLess> decompose(const ClassFunction& f) {
    std::map<Partition, Rational, PartitionLess> mult;
    auto table = CharacterTable::get(f.n);
    for (const Partition& nu : table->index()) {
        Rational total;
        for (auto& [beta, fv] : f.values)
            total += fv * Rational(table->value(nu, beta)) / Rational(z_alpha(beta));
        mult.emplace(nu, total);
    }
    return mult;
}

BigInt oracle_restriction(const Partition& lambda, const Partition& mu, int n) {
    if (n < mu.size() + mu.largest())
        throw std::invalid_argument("oracle_restriction: n below |mu| + mu_1");
    ClassFunction f = weyl_class_function(lambda, n);
    Partition target = pad(mu, n);
    auto table = CharacterTable::get(n);
    Rational total;
    for (auto& [beta, fv] : f.values)
        total += fv * Rational(table->value(target, beta)) / Rational(z_alpha(beta));
    if (!total.is_integer() || total.is_negative())
        throw ConsistencyError("oracle_restriction: non-integral multiplicity " + total.str());
    return total.numerator();
}

Rational moment_by_class_average(const Polynomial& p, int n) {
    if (n < 0) throw std::invalid_argument("moment_by_class_average: negative n");
    Rational total;
    for (const Partition& beta : partitions_of(n))
        total += eval_at(p, CycleCounts::of_cycle_type(beta)) / Rational(z_alpha(beta));
    return total;
}

}  // namespace charpoly
