/*
 * reference.hpp
 * Frozen reference values used by the verification suites: the classical
 * table of Weyl-module character polynomials for shapes of size up to 5 and
 * the corresponding 19x19 matrix of stable restriction coefficients.
 */
#pragma once

#include "charpoly/partition.hpp"
#include "charpoly/polynomial.hpp"

#include <utility>
#include <vector>

namespace charpoly::reference {

const std::vector<std::pair<Partition, Polynomial>>& weyl_polynomials_upto5();
const std::vector<std::vector<long long>>& restriction_matrix_upto5();

}  // namespace charpoly::reference
