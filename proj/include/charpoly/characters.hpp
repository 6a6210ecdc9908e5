/*
 * characters.hpp
 * Symmetric-group character values. Irreducible characters are computed by
 * the Murnaghan-Nakayama rule over beta numbers; full tables are built once
 * per degree and cached for the lifetime of the process (optionally persisted
 * to a cache directory as one JSON file per degree).
 */
#pragma once

#include "charpoly/partition.hpp"
#include "charpoly/rational.hpp"

#include <memory>
#include <string>
#include <vector>

namespace charpoly {

class CharacterTable {
public:
    // Partitions of d in reverse-lexicographic order; rows are lambda, columns
    // are cycle types alpha.
    const std::vector<Partition>& index() const { return index_; }
    int degree() const { return degree_; }
    const BigInt& value(int lambda_idx, int alpha_idx) const;
    const BigInt& value(const Partition& lambda, const Partition& alpha) const;
    int index_of(const Partition& p) const;  // -1 when absent

    // Process-wide table for S_d, computed on first use.
    static std::shared_ptr<const CharacterTable> get(int d);

    // When set, tables are loaded from / saved to <dir>/chartable_d<d>.json.
    // Purely an optimization; results are identical with or without it.
    static void set_cache_dir(std::string dir);
    static std::string cache_dir();

private:
    int degree_ = 0;
    std::vector<Partition> index_;
    std::vector<std::vector<BigInt>> values_;
    friend CharacterTable compute_character_table(int d);
};

// Builds the full table for S_d directly (no caching); CharacterTable::get is
// the cached entry point.
CharacterTable compute_character_table(int d);

// Irreducible character chi_lambda at cycle type alpha; |lambda| must equal
// |alpha| (throws std::invalid_argument otherwise).
BigInt mn_character(const Partition& lambda, const Partition& alpha);

// Character of the permutation representation of S_d on ordered set partitions
// with block sizes lambda (the representation induced from the trivial
// character of the Young subgroup), at cycle type alpha.
BigInt sigma_character(const Partition& lambda, const Partition& alpha);

}  // namespace charpoly
