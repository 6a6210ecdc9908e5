/*
 * table.hpp
 * Tables of stable restriction coefficients r_{lambda,mu} over all partitions
 * of size <= max, in reverse-lexicographic block order. The parallel builder
 * computes independent cells with OpenMP; the serial builder is the reference
 * implementation and both produce identical tables.
 */
#pragma once

#include "charpoly/partition.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace charpoly {

struct CoeffTable {
    std::vector<Partition> rows;
    std::vector<Partition> cols;
    std::vector<std::vector<long long>> entries;

    friend bool operator==(const CoeffTable&, const CoeffTable&) = default;
};

CoeffTable build_restriction_table_serial(int max);
CoeffTable build_restriction_table(int max, int jobs);

std::string table_to_text(const CoeffTable& t);
std::string table_to_csv(const CoeffTable& t);
nlohmann::json table_to_json(const CoeffTable& t);

}  // namespace charpoly
