#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "charpoly/characters.hpp"
#include "charpoly/errors.hpp"
#include "charpoly/genfun.hpp"
#include "charpoly/json_io.hpp"
#include "charpoly/moments.hpp"
#include "charpoly/reference.hpp"
#include "charpoly/table.hpp"
#include "charpoly/vector_partitions.hpp"

#include <random>

using namespace charpoly;

namespace {

Polynomial X(int i) { return Polynomial::variable(i); }

// Brute-force vector partition count: enumerate multisets of nonzero vectors
// directly, with no shared code with the library's DP.
long long vp_brute(const std::vector<int>& v, int n, bool exact) {
    std::vector<std::vector<int>> cands;
    std::vector<int> cur(v.size(), 0);
    while (true) {
        std::size_t i = 0;
        while (i < v.size() && cur[i] == v[i]) cur[i++] = 0;
        if (i == v.size()) break;
        ++cur[i];
        cands.push_back(cur);
    }
    long long count = 0;
    auto rec = [&](auto&& self, std::size_t maxi, std::vector<int> rem, int used) -> void {
        bool zero = true;
        for (int x : rem)
            if (x) zero = false;
        if (zero && (exact ? used == n : used <= n)) ++count;
        if (zero || used == n) return;
        for (std::size_t c = 0; c <= maxi; ++c) {
            bool fits = true;
            for (std::size_t i = 0; i < rem.size(); ++i)
                if (rem[i] < cands[c][i]) fits = false;
            if (!fits) continue;
            std::vector<int> next = rem;
            for (std::size_t i = 0; i < rem.size(); ++i) next[i] -= cands[c][i];
            self(self, c, std::move(next), used + 1);
        }
    };
    if (!cands.empty())
        rec(rec, cands.size() - 1, v, 0);
    else
        count = (exact ? n == 0 : true) ? 1 : 0;
    return count;
}

}  // namespace

TEST_CASE("moments of binomial basis elements") {
    Polynomial b2 = binom_elem(Partition({2}));
    CHECK(moment_n(b2, 1) == Rational(0));
    CHECK(moment_n(b2, 2) == Rational(1, 2));
    CHECK(moment_n(X(1), 1) == Rational(1));
    CHECK(moment_n(X(1), 7) == Rational(1));
    CHECK(moment_n(weyl_poly(Partition({2})), 2) == Rational(2));
    CHECK(stable_moment(binom_elem(Partition({3, 1}))) ==
          Rational(BigInt(1), z_alpha(Partition({3, 1}))));
    CHECK(stable_moment(weyl_poly(Partition({1, 1}))) == Rational(0));
    CHECK(stable_moment(weyl_poly(Partition({2, 2}))) == Rational(2));
}

TEST_CASE("moment stability") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
    for (int trial = 0; trial < 25; ++trial) {
        Polynomial p;
        for (int t = 0; t < 4; ++t) {
            std::vector<std::pair<int, int>> exps;
            int budget = 6;
            for (int var = 1; var <= 3 && budget >= var; ++var) {
                std::uniform_int_distribution<int> e(0, budget / var);
                int ev = e(rng);
                if (ev) {
                    exps.emplace_back(var, ev);
                    budget -= var * ev;
                }
            }
            p.add_term(Monomial(std::move(exps)), Rational(num(rng), den(rng)));
        }
        if (p.is_zero()) continue;
        int d = p.graded_degree();
        Rational stable = stable_moment(p);
        CHECK(moment_n(p, d) == stable);
        for (int n = d; n <= d + 4; ++n) CHECK(moment_n(p, n) == stable);
    }
}

TEST_CASE("moment profile") {
    auto prof = moment_profile(binom_elem(Partition({2})));
    REQUIRE(prof.size() == 3);
    CHECK(prof[0] == Rational(0));
    CHECK(prof[1] == Rational(0));
    CHECK(prof[2] == Rational(1, 2));
    CHECK(moment_profile(Polynomial()).size() == 1);
    CHECK(moment_profile(Polynomial(3)) == std::vector<Rational>{Rational(3)});
}

TEST_CASE("stable restriction coefficients") {
    CHECK(restriction_coeff_stable(Partition({3, 1}), Partition({1})) == 7);
    CHECK(restriction_coeff_stable(Partition({2, 1}), Partition({1})) == 3);
    CHECK(restriction_coeff_stable(Partition({2, 1}), Partition()) == 1);
    CHECK(restriction_coeff_stable(Partition({2, 2}), Partition({2, 2})) == 1);
    CHECK(restriction_coeff_stable(Partition(), Partition()) == 1);
}

TEST_CASE("restriction coefficients at finite n") {
    CHECK(restriction_coeff_at(Partition({2}), Partition(), 3) == 2);
    CHECK(restriction_coeff_at(Partition({2}), Partition({1, 1}), 4) == 0);
    CHECK(restriction_coeff_at(Partition({1}), Partition({1}), 2) == 1);
    CHECK_THROWS_AS(restriction_coeff_at(Partition({2}), Partition({2, 1}), 4),
                    std::invalid_argument);

    SUBCASE("agrees with the stable value once n reaches the degree sum") {
        for (const Partition& lambda : partitions_up_to(3))
            for (const Partition& mu : partitions_up_to(2)) {
                BigInt stable = restriction_coeff_stable(lambda, mu);
                int start = std::max(lambda.size() + mu.size(), mu.size() + mu.largest());
                for (int n = start; n <= start + 2; ++n)
                    CHECK(restriction_coeff_at(lambda, mu, n) == stable);
            }
    }
}

TEST_CASE("stable Kronecker coefficients") {
    CHECK(kronecker_stable(Partition({1}), Partition({1}), Partition({1})) == 1);
    CHECK(kronecker_stable(Partition(), Partition(), Partition()) == 1);
    CHECK(kronecker_stable(Partition({1, 1}), Partition({1, 1}), Partition({2})) == 2);
    CHECK_THROWS_AS(kronecker_stable(Partition({1}), Partition({1}), Partition()),
                    std::invalid_argument);

    SUBCASE("brute force over symmetric group characters") {
        // g_{lambda,mu,nu}(n) = <chi_{lambda[n]}, chi_{mu[n]} chi_{nu[n]}>,
        // computed with character tables only; stable by n = 3k.
        auto g_at = [](const Partition& l, const Partition& m, const Partition& nu, int n) {
            Rational total;
            for (const Partition& beta : partitions_of(n)) {
                Rational prod = Rational(mn_character(pad(l, n), beta)) *
                                Rational(mn_character(pad(m, n), beta)) *
                                Rational(mn_character(pad(nu, n), beta));
                total += prod / Rational(z_alpha(beta));
            }
            return total;
        };
        for (const Partition& l : partitions_of(2))
            for (const Partition& m : partitions_of(2))
                for (const Partition& nu : partitions_of(2)) {
                    Rational brute = g_at(l, m, nu, 7);
                    CHECK(Rational(kronecker_stable(l, m, nu)) == brute);
                }
    }
}

TEST_CASE("invariant dimensions") {
    CHECK(invariant_dim(Partition({1, 1}), 2) == 0);
    CHECK(invariant_dim(Partition({1, 1}), 9) == 0);
    CHECK(invariant_dim(Partition({2}), 2) == 2);
    CHECK(invariant_dim(Partition({2, 1}), 9) == 1);
}

TEST_CASE("vector partitions") {
    CHECK(vector_partitions({1, 1}, 2, CountMode::at_most) == 2);
    CHECK(vector_partitions({0, 0, 0}, 0, CountMode::exact) == 1);
    CHECK(vector_partitions({0, 0}, 3, CountMode::exact) == 0);
    CHECK(vector_partitions({2, 2}, 2, CountMode::exact) == 4);
    CHECK(vector_partitions({2}, 3, CountMode::at_most) == 2);

    SUBCASE("matches brute-force enumeration") {
        for (int a = 0; a <= 4; ++a)
            for (int b = 0; b <= 4; ++b)
                for (int n = 0; n <= 4; ++n) {
                    CHECK(vector_partitions({a, b}, n, CountMode::exact) ==
                          vp_brute({a, b}, n, true));
                    CHECK(vector_partitions({a, b}, n, CountMode::at_most) ==
                          vp_brute({a, b}, n, false));
                }
        for (int a = 0; a <= 2; ++a)
            for (int b = 0; b <= 2; ++b)
                for (int c = 0; c <= 2; ++c)
                    CHECK(vector_partitions({a, b, c}, 3, CountMode::exact) ==
                          vp_brute({a, b, c}, 3, true));
    }
}

TEST_CASE("closed forms for two and three parts") {
    CHECK(p2_closed(2, 2) == 4);
    CHECK(p2_closed(1, 1) == 1);
    CHECK(p3_closed(3, 3) == vector_partitions({3, 3}, 3, CountMode::exact));
    for (int k = 0; k <= 20; ++k)
        for (int l = 0; l <= 20; ++l) {
            CHECK(p2_closed(k, l) == vector_partitions({k, l}, 2, CountMode::exact));
            CHECK(p3_closed(k, l) == vector_partitions({k, l}, 3, CountMode::exact));
        }
}

TEST_CASE("Kim-Hahn inequality") {
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k + 1 <= 14; ++k)
            for (int l = 1; l <= k && k + l <= 14; ++l) {
                long long a = vector_partitions({k, l}, n, CountMode::exact);
                long long b = vector_partitions({k + 1, l - 1}, n, CountMode::exact);
                CHECK(a >= b);
                if (n == 2 && (k % 2 == 0 || l % 2 == 0)) CHECK(a > b);
                if (n == 3 && k % 2 == 1 && l % 2 == 1 && !(k == 1 && l == 1)) CHECK(a > b);
            }
}

TEST_CASE("invariant dimension via vector partitions") {
    CHECK(invariant_dim_via_vp(Partition({2}), 3) == 2);
    CHECK(invariant_dim_via_vp(Partition({1, 1}), 5) == 0);
    CHECK(invariant_dim_via_vp(Partition({2, 2}), 9) == 2);
    for (int d = 0; d <= 6; ++d)
        for (const Partition& lambda : partitions_of(d))
            for (int n = 1; n <= 8; ++n)
                CHECK(invariant_dim_via_vp(lambda, n) == invariant_dim(lambda, n));
}

TEST_CASE("positivity criteria") {
    CHECK_FALSE(criterion_two_row(Partition({1, 1})));
    CHECK(criterion_two_row(Partition({5, 3})));
    CHECK(criterion_two_column(Partition({2, 2, 1})) == 1);
    CHECK(criterion_two_column(Partition({2, 2})) == 2);
    CHECK(criterion_two_column(Partition({1, 1})) == 0);
    CHECK(criterion_hook(1, 1));
    CHECK_FALSE(criterion_hook(0, 1));
    CHECK_THROWS_AS(criterion_two_row(Partition({1, 1, 1})), std::invalid_argument);
    CHECK_THROWS_AS(criterion_two_column(Partition({3})), std::invalid_argument);
}

TEST_CASE("monotonicity of invariant dimensions") {
    CHECK(monotonicity_check(Partition({2}), 6));
    CHECK(monotonicity_check(Partition({1, 1}), 6));
    CHECK(monotonicity_check(Partition({3, 1}), 8));
}

TEST_CASE("mixed moments") {
    CHECK(mixed_moment({1}, {1}, 2) == Rational(2));
    CHECK(mixed_moment_stable({1}, {1}) == Rational(2));
    CHECK(mixed_moment_stable({2}, {}) == Rational(2));
    CHECK(mixed_moment_stable({}, {2}) == Rational(0));
    CHECK(mixed_moment_stable({}, {3}) == Rational(0));
    // <H_lambda>_n = p_{<=n}(lambda) for all compositions with sum <= 6.
    for (int a = 0; a <= 6; ++a)
        for (int b = 0; a + b <= 6; ++b)
            for (int c = 0; a + b + c <= 6; ++c)
                for (int n = 0; n <= 6; ++n) {
                    std::vector<int> v{a, b, c};
                    CHECK(mixed_moment({a, b, c}, {}, n) ==
                          Rational(vector_partitions(v, n, CountMode::at_most)));
                }
}

TEST_CASE("mixed moment cache") {
    MixedMomentCache cache;
    auto p1 = cache.profile({2, 1}, {1});
    auto p2 = cache.profile({1, 2, 0}, {0, 1});  // same key after sorting/stripping
    CHECK(p1 == p2);
    CHECK(MixedMomentCache::stable_profile_value(p1) == mixed_moment_stable({2, 1}, {1}));
}

TEST_CASE("generating function identities at reduced bounds") {
    GenfunBounds small{.l = 1, .m = 1, .max_exponent = 4, .alpha_max = 3};
    for (GenfunIdentity id :
         {GenfunIdentity::binomial_moments, GenfunIdentity::hmomgen, GenfunIdentity::he,
          GenfunIdentity::hlamu, GenfunIdentity::hlaemu}) {
        Report rep = verify_genfun(id, small);
        CHECK(rep.all_pass());
        REQUIRE(rep.checks.size() == 1);
        CHECK(rep.checks[0].checked > 0);
    }
    GenfunBounds too_big{.l = 4, .m = 0, .max_exponent = 4, .alpha_max = 3};
    CHECK_THROWS_AS(verify_genfun(GenfunIdentity::hmomgen, too_big), FeasibilityError);
}

TEST_CASE("restriction table") {
    CoeffTable t = build_restriction_table_serial(3);
    REQUIRE(t.rows.size() == 7);
    // Block for size 2 of the reference matrix.
    CHECK(t.entries[2] == std::vector<long long>{2, 2, 1, 0, 0, 0, 0});
    CHECK(t.entries[3] == std::vector<long long>{0, 1, 0, 1, 0, 0, 0});

    SUBCASE("parallel builder matches the serial reference") {
        for (int jobs : {2, 4}) CHECK(build_restriction_table(3, jobs) == t);
    }

    SUBCASE("matches the reference matrix at max 5") {
        CoeffTable full = build_restriction_table(5, 2);
        const auto& ref = reference::restriction_matrix_upto5();
        REQUIRE(full.rows.size() == ref.size());
        for (std::size_t i = 0; i < ref.size(); ++i) CHECK(full.entries[i] == ref[i]);
    }

    SUBCASE("emission formats") {
        CoeffTable small = build_restriction_table_serial(1);
        CHECK(table_to_csv(small) == "lambda,0,1\n0,1,0\n1,1,1\n");
        nlohmann::json j = table_to_json(small);
        CHECK(j["rows"].size() == 2);
        CHECK(j["cols"][1] == nlohmann::json::array({1}));
        CHECK(j["entries"][1][0] == 1);
        std::string text = table_to_text(small);
        CHECK(text.find("1 1") != std::string::npos);
    }
}

TEST_CASE("polynomial JSON round trip") {
    Polynomial p = weyl_poly(Partition({2, 1}));
    CHECK(polynomial_from_json(polynomial_to_json(p)) == p);
    CHECK(polynomial_from_json(binomial_to_json(to_binomial_basis(p))) == p);
    nlohmann::json j = polynomial_to_json(X(1) * X(1) * Rational(1, 2));
    CHECK(j["basis"] == "monomial");
    CHECK(j["terms"][0]["exps"]["1"] == 2);
    CHECK(j["terms"][0]["coeff"] == "1/2");
    nlohmann::json jb = binomial_to_json(to_binomial_basis(X(1) * X(1)));
    CHECK(jb["terms"][0]["partition"] == nlohmann::json::array({1, 1}));
    CHECK(jb["terms"][0]["coeff"] == "2");
    CHECK_THROWS_AS(polynomial_from_json(nlohmann::json{{"basis", "??"}}),
                    std::invalid_argument);
}
