// Benchmark: serial reference vs OpenMP-parallel builders for the
// restriction-coefficient table and the generating-function moment grid.
#include "charpoly/genfun.hpp"
#include "charpoly/table.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

template <typename F>
double timed(F&& f) {
    auto start = Clock::now();
    f();
    return seconds_since(start);
}

}  // namespace

int main(int argc, char** argv) {
    using namespace charpoly;
    int max = argc > 1 ? std::atoi(argv[1]) : 5;
    int jobs = argc > 2 ? std::atoi(argv[2]) : 0;
#ifdef _OPENMP
    if (jobs <= 0) jobs = omp_get_max_threads();
#else
    if (jobs <= 0) jobs = 1;
#endif

    std::cout << "restriction table, max = " << max << "\n";
    CoeffTable serial_table, parallel_table;
    double t_serial = timed([&] { serial_table = build_restriction_table_serial(max); });
    double t_parallel = timed([&] { parallel_table = build_restriction_table(max, jobs); });
    std::cout << "  serial:   " << t_serial << " s\n";
    std::cout << "  parallel: " << t_parallel << " s  (jobs=" << jobs << ", speedup "
              << (t_parallel > 0 ? t_serial / t_parallel : 0.0) << "x)\n";
    std::cout << "  tables match: " << (serial_table == parallel_table ? "yes" : "NO") << "\n";

    GenfunBounds bounds{.l = 2, .m = 2, .max_exponent = 5, .alpha_max = 4};
    std::cout << "moment grid identity (hlaemu), exponents <= " << bounds.max_exponent << "\n";
    Report serial_rep, parallel_rep;
    double g_serial = timed([&] { serial_rep = verify_genfun(GenfunIdentity::hlaemu, bounds, 1); });
    double g_parallel =
        timed([&] { parallel_rep = verify_genfun(GenfunIdentity::hlaemu, bounds, jobs); });
    std::cout << "  serial:   " << g_serial << " s\n";
    std::cout << "  parallel: " << g_parallel << " s  (jobs=" << jobs << ", speedup "
              << (g_parallel > 0 ? g_serial / g_parallel : 0.0) << "x)\n";
    std::cout << "  results match: "
              << (serial_rep.all_pass() == parallel_rep.all_pass() ? "yes" : "NO") << "\n";

    bool ok = serial_table == parallel_table && serial_rep.all_pass() && parallel_rep.all_pass();
    return ok ? 0 : 1;
}
