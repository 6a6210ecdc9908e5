#include "charpoly/moments.hpp"

#include "charpoly/errors.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace charpoly {

Rational moment_n(const Polynomial& p, int n) {
    if (n < 0) throw std::invalid_argument("moment_n: negative n");
    BinomialExpansion expansion = to_binomial_basis(p);
    Rational total;
    for (auto& [alpha, c] : expansion.coeffs())
        if (alpha.size() <= n) total += c / Rational(z_alpha(alpha));
    return total;
}

Rational stable_moment(const Polynomial& p) {
    BinomialExpansion expansion = to_binomial_basis(p);
    Rational total;
    for (auto& [alpha, c] : expansion.coeffs()) total += c / Rational(z_alpha(alpha));
    return total;
}

std::vector<Rational> moment_profile(const Polynomial& p) {
    int deg = p.is_zero() ? 0 : p.graded_degree();
    std::vector<Rational> by_size(deg + 1);
    BinomialExpansion expansion = to_binomial_basis(p);
    for (auto& [alpha, c] : expansion.coeffs())
        by_size.at(alpha.size()) += c / Rational(z_alpha(alpha));
    for (int n = 1; n <= deg; ++n) by_size[n] += by_size[n - 1];
    return by_size;
}

namespace {

BigInt require_nonneg_integer(const Rational& v, const char* what) {
    if (!v.is_integer() || v.is_negative())
        throw ConsistencyError(std::string(what) + ": expected a nonnegative integer, got " +
                               v.str());
    return v.numerator();
}

}  // namespace

BigInt restriction_coeff_stable(const Partition& lambda, const Partition& mu) {
    Rational v = stable_moment(weyl_poly(lambda) * specht_poly(mu));
    return require_nonneg_integer(v, "restriction_coeff_stable");
}

BigInt restriction_coeff_at(const Partition& lambda, const Partition& mu, int n) {
    if (n < mu.size() + mu.largest())
        throw std::invalid_argument("restriction_coeff_at: n below |mu| + mu_1");
    Rational v = moment_n(weyl_poly(lambda) * specht_poly(mu), n);
    return require_nonneg_integer(v, "restriction_coeff_at");
}

BigInt kronecker_stable(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.size() != mu.size() || mu.size() != nu.size())
        throw std::invalid_argument("kronecker_stable: partitions must have equal size");
    Rational v = stable_moment(specht_poly(lambda) * specht_poly(mu) * specht_poly(nu));
    return require_nonneg_integer(v, "kronecker_stable");
}

BigInt invariant_dim(const Partition& lambda, int n) {
    Rational v = moment_n(weyl_poly(lambda), n);
    return require_nonneg_integer(v, "invariant_dim");
}

Rational mixed_moment(const std::vector<int>& h_parts, const std::vector<int>& e_parts, int n) {
    return moment_n(h_product(h_parts) * e_product(e_parts), n);
}

Rational mixed_moment_stable(const std::vector<int>& h_parts, const std::vector<int>& e_parts) {
    return stable_moment(h_product(h_parts) * e_product(e_parts));
}

struct MixedMomentCache::Impl {
    std::mutex mu;
    std::map<std::pair<std::vector<int>, std::vector<int>>, std::vector<Rational>> profiles;
};

std::shared_ptr<MixedMomentCache::Impl> MixedMomentCache::make_impl() {
    return std::make_shared<Impl>();
}

std::vector<Rational> MixedMomentCache::profile(std::vector<int> h_parts,
                                                std::vector<int> e_parts) {
    std::erase(h_parts, 0);  // H_0 = E_0 = 1
    std::erase(e_parts, 0);
    std::sort(h_parts.begin(), h_parts.end());
    std::sort(e_parts.begin(), e_parts.end());
    auto key = std::make_pair(h_parts, e_parts);
    {
        std::lock_guard<std::mutex> lock(impl_->mu);
        if (auto it = impl_->profiles.find(key); it != impl_->profiles.end()) return it->second;
    }
    auto prof = moment_profile(h_product(h_parts) * e_product(e_parts));
    std::lock_guard<std::mutex> lock(impl_->mu);
    return impl_->profiles.emplace(std::move(key), std::move(prof)).first->second;
}

}  // namespace charpoly
