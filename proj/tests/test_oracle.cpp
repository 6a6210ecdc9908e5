#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "charpoly/characters.hpp"
#include "charpoly/errors.hpp"
#include "charpoly/moments.hpp"
#include "charpoly/oracle.hpp"

using namespace charpoly;

TEST_CASE("witness permutations") {
    PermutationWitness w = witness_of_cycle_type(Partition({3, 2, 1}));
    CHECK(w.n == 6);
    CHECK(cycle_type_of(w) == Partition({3, 2, 1}));
    CHECK(cycle_counts_of(w).count(3) == 1);
    CHECK(cycle_counts_of(w).count(2) == 1);
    CHECK(cycle_counts_of(w).count(1) == 1);
    PermutationWitness id = witness_of_cycle_type(Partition({1, 1, 1}));
    for (int i = 0; i < 3; ++i) CHECK(id.apply(i) == i);
}

TEST_CASE("symmetric power traces") {
    CHECK(trace_sym(witness_of_cycle_type(Partition({2})), 2) == 1);
    CHECK(trace_sym(witness_of_cycle_type(Partition({1, 1, 1})), 2) == 6);
    CHECK(trace_sym(witness_of_cycle_type(Partition({3})), 2) == 0);
    CHECK_THROWS_AS(trace_sym(witness_of_cycle_type(Partition({30})), 20), FeasibilityError);
}

TEST_CASE("exterior power traces") {
    CHECK(trace_alt(witness_of_cycle_type(Partition({1, 1, 1})), 2) == 3);
    CHECK(trace_alt(witness_of_cycle_type(Partition({2})), 2) == -1);
    CHECK(trace_alt(witness_of_cycle_type(Partition({2, 1})), 1) == 1);
}

TEST_CASE("trace enumeration matches evaluated character polynomials") {
    // The two paths share no code: enumeration of fixed multisets/subsets on
    // one side, closed-form polynomials evaluated at cycle counts on the other.
    for (int n = 1; n <= 6; ++n)
        for (const Partition& beta : partitions_of(n)) {
            PermutationWitness w = witness_of_cycle_type(beta);
            CycleCounts counts = cycle_counts_of(w);
            for (int d = 0; d <= 4; ++d) {
                CHECK(Rational(trace_sym(w, d)) == eval_at(h_poly(d), counts));
                CHECK(Rational(trace_alt(w, d)) == eval_at(e_poly(d), counts));
            }
        }
}

TEST_CASE("Weyl class functions") {
    ClassFunction f = weyl_class_function(Partition({2}), 3);
    CHECK(f.values.at(Partition({1, 1, 1})) == Rational(6));
    CHECK(f.values.at(Partition({2, 1})) == Rational(2));
    CHECK(f.values.at(Partition({3})) == Rational(0));

    ClassFunction sign = weyl_class_function(Partition({1, 1}), 2);
    CHECK(sign.values.at(Partition({1, 1})) == Rational(1));
    CHECK(sign.values.at(Partition({2})) == Rational(-1));

    // Defining representation: number of fixed points.
    ClassFunction def = weyl_class_function(Partition({1}), 4);
    for (const Partition& beta : partitions_of(4))
        CHECK(def.values.at(beta) == Rational(CycleCounts::of_cycle_type(beta).count(1)));

    CHECK_THROWS_AS(weyl_class_function(Partition({1, 1, 1}), 2), std::invalid_argument);
}

TEST_CASE("decompose") {
    auto mult = decompose(weyl_class_function(Partition({2}), 3));
    CHECK(mult.at(Partition({3})) == Rational(2));
    CHECK(mult.at(Partition({2, 1})) == Rational(2));
    CHECK(mult.at(Partition({1, 1, 1})) == Rational(0));

    auto sign_mult = decompose(weyl_class_function(Partition({1, 1}), 2));
    CHECK(sign_mult.at(Partition({1, 1})) == Rational(1));
    CHECK(sign_mult.at(Partition({2})) == Rational(0));

    SUBCASE("characters decompose as indicators") {
        for (int n = 1; n <= 6; ++n) {
            auto table = CharacterTable::get(n);
            for (const Partition& nu : table->index()) {
                ClassFunction f;
                f.n = n;
                for (const Partition& beta : partitions_of(n))
                    f.values.emplace(beta, Rational(table->value(nu, beta)));
                auto m = decompose(f);
                for (const Partition& other : table->index())
                    CHECK(m.at(other) == (other == nu ? Rational(1) : Rational(0)));
            }
        }
    }

    SUBCASE("trivial class function decomposes onto the one-row shape") {
        ClassFunction triv;
        triv.n = 4;
        for (const Partition& beta : partitions_of(4)) triv.values.emplace(beta, Rational(1));
        auto m = decompose(triv);
        for (const Partition& nu : partitions_of(4))
            CHECK(m.at(nu) == (nu == Partition({4}) ? Rational(1) : Rational(0)));
    }
}

TEST_CASE("oracle restriction multiplicities") {
    CHECK(oracle_restriction(Partition({2}), Partition(), 3) == 2);
    CHECK(oracle_restriction(Partition({2}), Partition({1}), 3) == 2);
    CHECK(oracle_restriction(Partition({2, 1}), Partition(), 4) == 1);
    CHECK_THROWS_AS(oracle_restriction(Partition({2}), Partition({2}), 3),
                    std::invalid_argument);

    SUBCASE("stabilizes once n reaches the combined degree") {
        for (const Partition& lambda : partitions_up_to(3))
            for (const Partition& mu : partitions_up_to(3)) {
                int start = std::max({lambda.size() + mu.size(), mu.size() + mu.largest(),
                                      lambda.length(), 1});
                if (start + 1 > 6) continue;
                BigInt first = oracle_restriction(lambda, mu, start);
                for (int n = start + 1; n <= std::min(6, start + 2); ++n)
                    CHECK(oracle_restriction(lambda, mu, n) == first);
                CHECK(first == restriction_coeff_stable(lambda, mu));
            }
    }
}

TEST_CASE("full cross validation against the moment route") {
    for (const Partition& lambda : partitions_up_to(4))
        for (const Partition& mu : partitions_up_to(3))
            for (int n = 1; n <= 6; ++n) {
                if (n < mu.size() + mu.largest() || lambda.length() > n) continue;
                CHECK(oracle_restriction(lambda, mu, n) ==
                      restriction_coeff_at(lambda, mu, n));
            }
}

TEST_CASE("moment by class average matches the binomial route") {
    for (const Partition& alpha : partitions_up_to(5)) {
        Polynomial b = binom_elem(alpha);
        for (int n = 0; n <= 8; ++n) {
            Rational direct = moment_by_class_average(b, n);
            CHECK(direct == moment_n(b, n));
            // Closed form: 0 below |alpha|, 1/z_alpha at and above.
            Rational expected =
                n < alpha.size() ? Rational(0) : Rational(BigInt(1), z_alpha(alpha));
            CHECK(direct == expected);
        }
    }
}
