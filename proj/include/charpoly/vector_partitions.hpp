/*
 * vector_partitions.hpp
 * Counting vector partitions (unordered sums of nonzero nonnegative integer
 * vectors), closed forms for two and three parts, the alternating-sum route
 * to invariant dimensions, and the positivity criteria for two-row,
 * two-column and hook partitions.
 */
#pragma once

#include "charpoly/partition.hpp"
#include "charpoly/rational.hpp"

#include <vector>

namespace charpoly {

enum class CountMode { exact, at_most };

// Number of ways to write v as an unordered sum of exactly (or at most) n
// nonzero vectors in Z_{>=0}^l. Entries of v must be nonnegative.
long long vector_partitions(const std::vector<int>& v, int n, CountMode mode);

// Closed forms for p_2(k, l) and p_3(k, l).
long long p2_closed(int k, int l);
long long p3_closed(int k, int l);

// dim W_lambda(K^n)^{S_n} as the signed sum over permutations w of
// p_{<=n}(lambda_i - i + w(i)); vectors with a negative entry contribute 0.
BigInt invariant_dim_via_vp(const Partition& lambda, int n);

// Predicted positivity of the stable moment of S_lambda for a partition with
// at most two rows; false exactly at lambda = (1,1). Throws on other shapes.
bool criterion_two_row(const Partition& lambda);

// Exact stable moment of S_lambda for a partition with at most two columns:
// with lambda' = (c1, c2), the value is 2 when c1 == c2, 1 when c1 == c2 + 1,
// else 0. Throws when some part exceeds 2.
int criterion_two_column(const Partition& lambda);

// Positivity of the stable moment of S_{(a+1, 1^b)}: a >= binom(b+1, 2).
bool criterion_hook(int a, int b);

// True iff invariant_dim(lambda, n) is weakly increasing over 1 <= n <= n_max.
bool monotonicity_check(const Partition& lambda, int n_max);

}  // namespace charpoly
