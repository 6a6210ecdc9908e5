#include "charpoly/vector_partitions.hpp"

#include "charpoly/moments.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace charpoly {

namespace {

// Candidate parts: all nonzero vectors componentwise <= v, in colexicographic
// order. A multiset is counted once by requiring part indices nonincreasing.
std::vector<std::vector<int>> candidate_parts(const std::vector<int>& v) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur(v.size(), 0);
    while (true) {
        int i = 0;
        while (i < static_cast<int>(v.size()) && cur[i] == v[i]) cur[i++] = 0;
        if (i == static_cast<int>(v.size())) break;
        ++cur[i];
        parts.push_back(cur);
    }
    return parts;
}

struct VpCounter {
    const std::vector<std::vector<int>>& parts;
    std::map<std::tuple<std::vector<int>, int, int>, long long> memo;

    long long count(std::vector<int> rem, int max_idx, int left) {
        bool done = std::all_of(rem.begin(), rem.end(), [](int x) { return x == 0; });
        if (left == 0) return done ? 1 : 0;
        if (done) return 0;
        if (max_idx < 0) return 0;
        auto key = std::make_tuple(rem, max_idx, left);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        long long total = count(rem, max_idx - 1, left);
        const auto& p = parts[max_idx];
        bool fits = true;
        for (std::size_t i = 0; i < rem.size(); ++i)
            if (rem[i] < p[i]) {
                fits = false;
                break;
            }
        if (fits) {
            std::vector<int> next = rem;
            for (std::size_t i = 0; i < rem.size(); ++i) next[i] -= p[i];
            total += count(std::move(next), max_idx, left - 1);
        }
        memo.emplace(std::move(key), total);
        return total;
    }
};

}  // namespace

long long vector_partitions(const std::vector<int>& v, int n, CountMode mode) {
    if (n < 0) throw std::invalid_argument("vector_partitions: negative part count");
    for (int x : v)
        if (x < 0) throw std::invalid_argument("vector_partitions: negative component");
    auto parts = candidate_parts(v);
    VpCounter counter{parts, {}};
    int top = static_cast<int>(parts.size()) - 1;
    if (mode == CountMode::exact) return counter.count(v, top, n);
    long long total = 0;
    for (int r = 0; r <= n; ++r) total += counter.count(v, top, r);
    return total;
}

long long p2_closed(int k, int l) {
    if (k < 0 || l < 0) throw std::invalid_argument("p2_closed: negative argument");
    long long kk = k, ll = l;
    if (k % 2 == 0 && l % 2 == 0) return ((kk + 1) * (ll + 1) - 1) / 2;
    return (kk + 1) * (ll + 1) / 2 - 1;
}

long long p3_closed(int k, int l) {
    if (k < 0 || l < 0) throw std::invalid_argument("p3_closed: negative argument");
    long long kk = k, ll = l;
    long long A = (kk + 2) * (kk + 1) / 2 * ((ll + 2) * (ll + 1) / 2) - 3 * (kk + 1) * (ll + 1) + 3;
    long long B;
    if (k % 2 == 0 && l % 2 == 0)
        B = (kk / 2 + 1) * (ll / 2 + 1) - 2;
    else if (k % 2 == 1 && l % 2 == 0)
        B = (kk + 1) * (ll + 2) / 4 - 1;
    else if (k % 2 == 0 && l % 2 == 1)
        B = (kk + 2) * (ll + 1) / 4 - 1;
    else
        B = (kk + 1) * (ll + 1) / 4 - 1;
    long long C = (k % 3 == 0 && l % 3 == 0) ? 1 : 0;
    return (A + 3 * B + 2 * C) / 6;
}

BigInt invariant_dim_via_vp(const Partition& lambda, int n) {
    int l = lambda.length();
    if (l == 0) return n >= 0 ? 1 : 0;
    std::vector<int> perm(l);
    std::iota(perm.begin(), perm.end(), 0);
    BigInt total = 0;
    do {
        int inversions = 0;
        for (int i = 0; i < l; ++i)
            for (int j = i + 1; j < l; ++j)
                if (perm[i] > perm[j]) ++inversions;
        std::vector<int> v(l);
        bool negative = false;
        for (int i = 0; i < l; ++i) {
            v[i] = lambda.part(i) - (i + 1) + (perm[i] + 1);
            if (v[i] < 0) {
                negative = true;
                break;
            }
        }
        if (negative) continue;  // no partitions of a vector with a negative entry
        long long cnt = vector_partitions(v, n, CountMode::at_most);
        total += (inversions % 2 == 0) ? BigInt(cnt) : BigInt(-cnt);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

bool criterion_two_row(const Partition& lambda) {
    if (lambda.length() > 2)
        throw std::invalid_argument("criterion_two_row: more than two rows");
    return !(lambda.length() == 2 && lambda.part(0) == 1 && lambda.part(1) == 1);
}

int criterion_two_column(const Partition& lambda) {
    if (lambda.largest() > 2)
        throw std::invalid_argument("criterion_two_column: more than two columns");
    Partition conj = conjugate(lambda);
    int c1 = conj.length() > 0 ? conj.part(0) : 0;
    int c2 = conj.length() > 1 ? conj.part(1) : 0;
    if (c1 == c2 && c1 >= 1) return 2;
    if (c1 == c2 + 1) return 1;
    return 0;
}

bool criterion_hook(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("criterion_hook: negative argument");
    return a >= b * (b + 1) / 2;
}

bool monotonicity_check(const Partition& lambda, int n_max) {
    BigInt prev = 0;
    for (int n = 1; n <= n_max; ++n) {
        BigInt cur = invariant_dim(lambda, n);
        if (cur < prev) return false;
        prev = cur;
    }
    return true;
}

}  // namespace charpoly
