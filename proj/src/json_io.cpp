#include "charpoly/json_io.hpp"

#include <stdexcept>

namespace charpoly {

nlohmann::json partition_to_json(const Partition& p) { return nlohmann::json(p.parts()); }

Partition partition_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("partition JSON must be an array");
    std::vector<int> parts;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw std::invalid_argument("partition parts must be integers");
        parts.push_back(v.get<int>());
    }
    return Partition(std::move(parts));
}

nlohmann::json polynomial_to_json(const Polynomial& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto& [m, c] : p.terms()) {
        nlohmann::json exps = nlohmann::json::object();
        for (auto& [v, e] : m.exps()) exps[std::to_string(v)] = e;
        terms.push_back({{"exps", exps}, {"coeff", c.str()}});
    }
    return nlohmann::json{{"basis", "monomial"}, {"terms", terms}};
}

nlohmann::json binomial_to_json(const BinomialExpansion& e) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto& [alpha, c] : e.coeffs())
        terms.push_back({{"partition", partition_to_json(alpha)}, {"coeff", c.str()}});
    return nlohmann::json{{"basis", "binomial"}, {"terms", terms}};
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("basis") || !j.contains("terms") || !j["terms"].is_array())
        throw std::invalid_argument("polynomial JSON must have basis and terms");
    std::string basis = j["basis"].get<std::string>();
    if (basis == "monomial") {
        Polynomial p;
        for (const auto& t : j["terms"]) {
            if (!t.contains("exps") || !t.contains("coeff") || !t["exps"].is_object())
                throw std::invalid_argument("monomial term needs exps and coeff");
            std::vector<std::pair<int, int>> exps;
            for (auto it = t["exps"].begin(); it != t["exps"].end(); ++it) {
                int var = std::stoi(it.key());
                exps.emplace_back(var, it.value().get<int>());
            }
            p.add_term(Monomial(std::move(exps)), Rational::parse(t["coeff"].get<std::string>()));
        }
        return p;
    }
    if (basis == "binomial") {
        BinomialExpansion e;
        for (const auto& t : j["terms"]) {
            if (!t.contains("partition") || !t.contains("coeff"))
                throw std::invalid_argument("binomial term needs partition and coeff");
            e.add(partition_from_json(t["partition"]),
                  Rational::parse(t["coeff"].get<std::string>()));
        }
        return from_binomial_basis(e);
    }
    throw std::invalid_argument("unknown polynomial basis: " + basis);
}

}  // namespace charpoly
