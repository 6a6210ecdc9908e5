#include "charpoly/reference.hpp"

namespace charpoly::reference {

namespace {

struct RawTerm { std::vector<int> exps; const char* coeff; };
struct RawRow { std::vector<int> shape; std::vector<RawTerm> terms; };

// Weyl-module character polynomials for all shapes of size 1..5.
const std::vector<RawRow>& raw_weyl_rows() {
    static const std::vector<RawRow> rows = {
        {{1}, {{{1}, "1"}}},
        {{2}, {{{2}, "1/2"}, {{0,1}, "1"}, {{1}, "1/2"}}},
        {{1, 1}, {{{2}, "1/2"}, {{0,1}, "-1"}, {{1}, "-1/2"}}},
        {{3}, {{{3}, "1/6"}, {{1,1}, "1"}, {{2}, "1/2"}, {{0,0,1}, "1"}, {{1}, "1/3"}}},
        {{2, 1}, {{{3}, "1/3"}, {{0,0,1}, "-1"}, {{1}, "-1/3"}}},
        {{1, 1, 1}, {{{3}, "1/6"}, {{1,1}, "-1"}, {{2}, "-1/2"}, {{0,0,1}, "1"}, {{1}, "1/3"}}},
        {{4}, {{{4}, "1/24"}, {{2,1}, "1/2"}, {{3}, "1/4"}, {{0,2}, "1/2"}, {{1,0,1}, "1"}, {{1,1}, "1/2"}, {{2}, "11/24"}, {{0,0,0,1}, "1"}, {{0,1}, "1/2"}, {{1}, "1/4"}}},
        {{3, 1}, {{{4}, "1/8"}, {{2,1}, "1/2"}, {{3}, "1/4"}, {{0,2}, "-1/2"}, {{1,1}, "-1/2"}, {{2}, "-1/8"}, {{0,0,0,1}, "-1"}, {{0,1}, "-1/2"}, {{1}, "-1/4"}}},
        {{2, 2}, {{{4}, "1/12"}, {{0,2}, "1"}, {{1,0,1}, "-1"}, {{1,1}, "1"}, {{2}, "-1/12"}}},
        {{2, 1, 1}, {{{4}, "1/8"}, {{2,1}, "-1/2"}, {{3}, "-1/4"}, {{0,2}, "-1/2"}, {{1,1}, "-1/2"}, {{2}, "-1/8"}, {{0,0,0,1}, "1"}, {{0,1}, "1/2"}, {{1}, "1/4"}}},
        {{1, 1, 1, 1}, {{{4}, "1/24"}, {{2,1}, "-1/2"}, {{3}, "-1/4"}, {{0,2}, "1/2"}, {{1,0,1}, "1"}, {{1,1}, "1/2"}, {{2}, "11/24"}, {{0,0,0,1}, "-1"}, {{0,1}, "-1/2"}, {{1}, "-1/4"}}},
        {{5}, {{{5}, "1/120"}, {{3,1}, "1/6"}, {{4}, "1/12"}, {{1,2}, "1/2"}, {{2,0,1}, "1/2"}, {{2,1}, "1/2"}, {{3}, "7/24"}, {{0,1,1}, "1"}, {{1,0,0,1}, "1"}, {{1,0,1}, "1/2"}, {{1,1}, "5/6"}, {{2}, "5/12"}, {{0,0,0,0,1}, "1"}, {{1}, "1/5"}}},
        {{4, 1}, {{{5}, "1/30"}, {{3,1}, "1/3"}, {{4}, "1/6"}, {{2,0,1}, "1/2"}, {{3}, "1/6"}, {{0,1,1}, "-1"}, {{1,0,1}, "-1/2"}, {{1,1}, "-1/3"}, {{2}, "-1/6"}, {{0,0,0,0,1}, "-1"}, {{1}, "-1/5"}}},
        {{3, 2}, {{{5}, "1/24"}, {{3,1}, "1/6"}, {{4}, "1/12"}, {{1,2}, "1/2"}, {{2,0,1}, "-1/2"}, {{2,1}, "1/2"}, {{3}, "-1/24"}, {{0,1,1}, "1"}, {{1,0,0,1}, "-1"}, {{1,0,1}, "1/2"}, {{1,1}, "-1/6"}, {{2}, "-1/12"}}},
        {{3, 1, 1}, {{{5}, "1/20"}, {{1,2}, "-1"}, {{2,1}, "-1"}, {{3}, "-1/4"}, {{0,0,0,0,1}, "1"}, {{1}, "1/5"}}},
        {{2, 2, 1}, {{{5}, "1/24"}, {{3,1}, "-1/6"}, {{4}, "-1/12"}, {{1,2}, "1/2"}, {{2,0,1}, "-1/2"}, {{2,1}, "1/2"}, {{3}, "-1/24"}, {{0,1,1}, "-1"}, {{1,0,0,1}, "1"}, {{1,0,1}, "-1/2"}, {{1,1}, "1/6"}, {{2}, "1/12"}}},
        {{2, 1, 1, 1}, {{{5}, "1/30"}, {{3,1}, "-1/3"}, {{4}, "-1/6"}, {{2,0,1}, "1/2"}, {{3}, "1/6"}, {{0,1,1}, "1"}, {{1,0,1}, "1/2"}, {{1,1}, "1/3"}, {{2}, "1/6"}, {{0,0,0,0,1}, "-1"}, {{1}, "-1/5"}}},
        {{1, 1, 1, 1, 1}, {{{5}, "1/120"}, {{3,1}, "-1/6"}, {{4}, "-1/12"}, {{1,2}, "1/2"}, {{2,0,1}, "1/2"}, {{2,1}, "1/2"}, {{3}, "7/24"}, {{0,1,1}, "-1"}, {{1,0,0,1}, "-1"}, {{1,0,1}, "-1/2"}, {{1,1}, "-5/6"}, {{2}, "-5/12"}, {{0,0,0,0,1}, "1"}, {{1}, "1/5"}}},
    };
    return rows;
}
}  // namespace

const std::vector<std::pair<Partition, Polynomial>>& weyl_polynomials_upto5() {
    static const std::vector<std::pair<Partition, Polynomial>> table = [] {
        std::vector<std::pair<Partition, Polynomial>> t;
        for (const auto& row : raw_weyl_rows()) {
            Polynomial p;
            for (const auto& term : row.terms) {
                std::vector<std::pair<int, int>> exps;
                for (std::size_t v = 0; v < term.exps.size(); ++v)
                    if (term.exps[v] != 0) exps.emplace_back(static_cast<int>(v) + 1, term.exps[v]);
                p.add_term(Monomial(std::move(exps)), Rational::parse(term.coeff));
            }
            t.emplace_back(Partition(row.shape), std::move(p));
        }
        return t;
    }();
    return table;
}

// Stable restriction coefficients r_{lambda,mu} over all partitions of
// size <= 5 in reverse-lexicographic block order (19 x 19).
const std::vector<std::vector<long long>>& restriction_matrix_upto5() {
    static const std::vector<std::vector<long long>> m = {
        {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {2, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {3, 4, 2, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {1, 3, 2, 2, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {5, 7, 5, 2, 2, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {2, 7, 5, 6, 2, 3, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {2, 3, 4, 1, 1, 2, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 1, 1, 3, 0, 2, 2, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0},
        {7, 12, 9, 5, 5, 3, 0, 2, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
        {5, 14, 13, 12, 6, 9, 3, 2, 3, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0},
        {4, 10, 11, 8, 6, 8, 2, 1, 3, 2, 1, 0, 0, 0, 1, 0, 0, 0, 0},
        {0, 3, 4, 8, 1, 7, 6, 0, 2, 1, 3, 1, 0, 0, 0, 1, 0, 0, 0},
        {1, 3, 4, 3, 2, 5, 1, 0, 1, 2, 2, 0, 0, 0, 0, 0, 1, 0, 0},
        {0, 0, 0, 1, 0, 1, 3, 0, 0, 0, 2, 2, 0, 0, 0, 0, 0, 1, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1},
    };
    return m;
}

}  // namespace charpoly::reference
