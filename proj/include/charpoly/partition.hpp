/*
 * partition.hpp
 * Integer partitions: enumeration in reverse-lexicographic order, exponential
 * notation, centralizer orders z_alpha, conjugation, padding, vertical strips.
 */
#pragma once

#include "charpoly/rational.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace charpoly {

class Partition {
public:
    Partition() = default;  // empty partition of 0
    // Parts must be weakly decreasing and positive; throws std::invalid_argument.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }            // sum of parts
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return parts_[i]; }   // 0-based
    int largest() const { return parts_.empty() ? 0 : parts_.front(); }

    // Multiplicity map i -> a_i (number of parts equal to i).
    std::map<int, int> exponential_form() const;
    static Partition from_exponential(const std::map<int, int>& mult);

    friend bool operator==(const Partition&, const Partition&) = default;
    // Arbitrary total order (lexicographic on parts) for use as a map key;
    // enumeration order is PartitionLess below.
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// Exponential notation 1^{a_1} 2^{a_2} ... as a standalone value.
struct ExponentialForm {
    std::map<int, int> multiplicities;
    int size() const;
    Partition to_partition() const { return Partition::from_exponential(multiplicities); }
};

// Reverse-lexicographic precedence among partitions of equal size:
// (4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1).
bool revlex_less(const Partition& a, const Partition& b);

// Global enumeration order: ascending size, reverse-lexicographic within a size.
struct PartitionLess {
    bool operator()(const Partition& a, const Partition& b) const;
};

// All partitions of n in reverse-lexicographic order.
std::vector<Partition> partitions_of(int n);

// All partitions of size 0..max in the global order (the table/block order).
std::vector<Partition> partitions_up_to(int max);

// Centralizer order of a permutation of cycle type alpha: prod i^{a_i} a_i!.
BigInt z_alpha(const Partition& alpha);

Partition conjugate(const Partition& lambda);

// Padded partition (n - |mu|, mu_1, ..., mu_m); requires n >= |mu| + mu_1.
Partition pad(const Partition& mu, int n);

// All mu contained in lambda such that lambda - mu is a vertical strip
// (each row of lambda loses at most one box), including mu = lambda.
std::vector<Partition> vertical_strip_subpartitions(const Partition& lambda);

// CLI syntax: comma-separated descending parts ("3,1"); empty spelled "0" or "empty".
Partition parse_partition(std::string_view s);
std::string format_partition(const Partition& p);        // "3,1", "0" for empty
std::string format_partition_plus(const Partition& p);   // "3+1", "0" for empty (CSV headers)

}  // namespace charpoly
