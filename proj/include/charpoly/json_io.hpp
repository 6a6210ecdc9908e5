/*
 * json_io.hpp
 * JSON forms: polynomials in the monomial basis
 *   {"basis":"monomial","terms":[{"exps":{"1":2},"coeff":"1/2"}, ...]}
 * and the binomial basis
 *   {"basis":"binomial","terms":[{"partition":[1,1],"coeff":"2"}]};
 * rationals as "p/q" (or "n" when integral), partitions as arrays of
 * descending parts. Term order follows the canonical emission order.
 */
#pragma once

#include "charpoly/polynomial.hpp"

#include <json.hpp>

namespace charpoly {

nlohmann::json partition_to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);

nlohmann::json polynomial_to_json(const Polynomial& p);
nlohmann::json binomial_to_json(const BinomialExpansion& e);

// Accepts either basis; throws std::invalid_argument on malformed input.
Polynomial polynomial_from_json(const nlohmann::json& j);

}  // namespace charpoly
