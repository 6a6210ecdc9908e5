#include "charpoly/verify.hpp"

#include "charpoly/charpolys.hpp"
#include "charpoly/moments.hpp"
#include "charpoly/oracle.hpp"
#include "charpoly/reference.hpp"
#include "charpoly/table.hpp"
#include "charpoly/vector_partitions.hpp"

#include <sstream>

namespace charpoly {

Report verify_table1() {
    CheckResult res("table1");
    for (const auto& [shape, expected] : reference::weyl_polynomials_upto5()) {
        ++res.checked;
        if (!(weyl_poly(shape) == expected))
            res.record_failure("S_" + format_partition(shape) + " differs from the reference");
    }
    return Report{{res}};
}

Report verify_matrix(int max, int jobs) {
    CheckResult res("matrix");
    CoeffTable t = build_restriction_table(max, jobs);
    std::size_t n = t.rows.size();
    if (max <= 5) {
        const auto& ref = reference::restriction_matrix_upto5();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                ++res.checked;
                if (t.entries[i][j] != ref[i][j])
                    res.record_failure("r[" + format_partition(t.rows[i]) + "][" +
                                       format_partition(t.cols[j]) + "] = " +
                                       std::to_string(t.entries[i][j]) + ", reference " +
                                       std::to_string(ref[i][j]));
            }
    }
    // Unitriangularity of the diagonal blocks in the global order.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (t.rows[i].size() != t.cols[j].size()) continue;
            ++res.checked;
            if (i == j && t.entries[i][j] != 1)
                res.record_failure("diagonal r[" + format_partition(t.rows[i]) + "] != 1");
            else if (j > i && t.entries[i][j] != 0)
                res.record_failure("upper block entry r[" + format_partition(t.rows[i]) + "][" +
                                   format_partition(t.cols[j]) + "] != 0");
        }
    return Report{{res}};
}

Report verify_duality(int max) {
    CheckResult jt("jacobi-trudi");
    CheckResult du("duality");
    for (int d = 0; d <= max; ++d)
        for (const Partition& lambda : partitions_of(d)) {
            Polynomial h_form = weyl_poly_h_det(lambda);
            ++jt.checked;
            if (!(h_form == weyl_poly_e_det(lambda)))
                jt.record_failure("H/E forms differ at " + format_partition(lambda));
            ++du.checked;
            if (!(tau(d, h_form) == weyl_poly(conjugate(lambda))))
                du.record_failure("tau duality fails at " + format_partition(lambda));
        }
    return Report{{jt, du}};
}

Report verify_oracle(int jobs) {
    CheckResult grid("oracle-restriction");
    struct Cell {
        Partition lambda, mu;
        int n;
    };
    std::vector<Cell> cells;
    for (const Partition& lambda : partitions_up_to(4))
        for (const Partition& mu : partitions_up_to(3))
            for (int n = 1; n <= 6; ++n) {
                if (n < mu.size() + mu.largest()) continue;
                if (lambda.length() > n) continue;
                cells.push_back({lambda, mu, n});
            }
    std::vector<std::string> cell_errors(cells.size());
    int cn = static_cast<int>(cells.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, jobs))
#endif
    for (int i = 0; i < cn; ++i) {
        const Cell& c = cells[i];
        BigInt direct = oracle_restriction(c.lambda, c.mu, c.n);
        BigInt via_moments = restriction_coeff_at(c.lambda, c.mu, c.n);
        if (direct != via_moments) {
            std::ostringstream os;
            os << "lambda=" << format_partition(c.lambda) << " mu=" << format_partition(c.mu)
               << " n=" << c.n << ": oracle " << direct.str() << " vs moments "
               << via_moments.str();
            cell_errors[i] = os.str();
        }
    }
    (void)jobs;
    grid.checked = cn;
    for (auto& e : cell_errors)
        if (!e.empty()) grid.record_failure(e);

    CheckResult traces("oracle-traces");
    for (int n = 1; n <= 6; ++n)
        for (const Partition& beta : partitions_of(n)) {
            PermutationWitness w = witness_of_cycle_type(beta);
            CycleCounts counts = cycle_counts_of(w);
            for (int d = 0; d <= 4; ++d) {
                ++traces.checked;
                if (!(Rational(trace_sym(w, d)) == eval_at(h_poly(d), counts)))
                    traces.record_failure("Sym trace mismatch at beta=" + format_partition(beta) +
                                          " d=" + std::to_string(d));
                ++traces.checked;
                if (!(Rational(trace_alt(w, d)) == eval_at(e_poly(d), counts)))
                    traces.record_failure("Alt trace mismatch at beta=" + format_partition(beta) +
                                          " d=" + std::to_string(d));
            }
        }
    return Report{{grid, traces}};
}

Report verify_criteria() {
    CheckResult two_row("criteria-two-row");
    CheckResult two_col("criteria-two-column");
    CheckResult hooks("criteria-hooks");
    for (int d = 1; d <= 10; ++d)
        for (const Partition& lambda : partitions_of(d)) {
            if (lambda.length() <= 2) {
                ++two_row.checked;
                bool predicted = criterion_two_row(lambda);
                bool actual = stable_moment(weyl_poly(lambda)) > Rational(0);
                if (predicted != actual)
                    two_row.record_failure("two-row " + format_partition(lambda));
            }
            if (lambda.largest() <= 2) {
                ++two_col.checked;
                Rational actual = stable_moment(weyl_poly(lambda));
                if (!(Rational(criterion_two_column(lambda)) == actual))
                    two_col.record_failure("two-column " + format_partition(lambda) +
                                           ": predicted " +
                                           std::to_string(criterion_two_column(lambda)) +
                                           " vs " + actual.str());
            }
        }
    for (int a = 0; a <= 9; ++a)
        for (int b = 0; a + b + 1 <= 10; ++b) {
            std::vector<int> parts{a + 1};
            parts.insert(parts.end(), b, 1);
            Partition hook(parts);
            ++hooks.checked;
            bool predicted = criterion_hook(a, b);
            bool actual = stable_moment(weyl_poly(hook)) > Rational(0);
            if (predicted != actual)
                hooks.record_failure("hook a=" + std::to_string(a) + " b=" + std::to_string(b));
        }
    return Report{{two_row, two_col, hooks}};
}

Report verify_all(const GenfunBounds& genfun_bounds, int max, int jobs) {
    Report rep = verify_table1();
    rep.merge(verify_matrix(max, jobs));
    rep.merge(verify_duality(6));
    rep.merge(verify_genfun_all(genfun_bounds, jobs));
    rep.merge(verify_oracle(jobs));
    rep.merge(verify_criteria());
    return rep;
}

}  // namespace charpoly
