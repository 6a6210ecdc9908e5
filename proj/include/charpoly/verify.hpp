/*
 * verify.hpp
 * Named verification suites behind the `verify` CLI subcommand. Each suite
 * checks one family of identities exactly and reports per-check pass/fail
 * with counterexamples.
 */
#pragma once

#include "charpoly/genfun.hpp"
#include "charpoly/report.hpp"

namespace charpoly {

// weyl_poly reproduces the reference table for every shape of size <= 5.
Report verify_table1();

// The restriction table for max <= 5 matches the frozen reference matrix;
// for larger bounds, structural checks only (unitriangular diagonal blocks).
Report verify_matrix(int max = 5, int jobs = 1);

// Jacobi-Trudi H/E determinant agreement and tau duality for |lambda| <= max.
Report verify_duality(int max = 6);

// Brute-force cross-validation: restriction_coeff_at vs oracle_restriction
// on the grid |lambda| <= 4, |mu| <= 3, n <= 6 (valid cells), and
// trace_sym/trace_alt vs evaluated H_d/E_d.
Report verify_oracle(int jobs = 1);

// Positivity criteria for two-row, two-column and hook shapes up to size 10
// against the sign (and exact two-column value) of the stable moment.
Report verify_criteria();

// Every suite, including all generating-function identities.
Report verify_all(const GenfunBounds& genfun_bounds, int max = 5, int jobs = 1);

}  // namespace charpoly
