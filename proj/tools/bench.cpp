// Serial versus parallel timings for the three kernels that carry an OpenMP
// path: the brute-force square-zero scan, the orbit census partition, and the
// pairwise degeneration-order sweep.  Every pair of runs is also checked for
// identical results, so the benchmark doubles as an agreement test at sizes
// the unit suite does not reach.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bnil/census.hpp"
#include "bnil/degeneration.hpp"
#include "bnil/olp.hpp"

using namespace bnil;

namespace {

template <class F>
double time_of(F f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const std::string& name, double serial, double parallel, bool match) {
    std::cout << std::left << std::setw(34) << name << std::right << std::fixed
              << std::setprecision(3) << std::setw(9) << serial << " s"
              << std::setw(9) << parallel << " s" << std::setw(8)
              << std::setprecision(2) << (serial / parallel) << "x   "
              << (match ? "results match" : "RESULTS DIFFER") << "\n";
}

}  // namespace

int main() {
    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::cout << "threads available: " << threads << "\n\n";
    std::cout << std::left << std::setw(34) << "kernel" << std::right
              << std::setw(11) << "serial" << std::setw(11) << "parallel"
              << std::setw(9) << "speedup" << "\n";

    int exit_code = 0;

    {
        std::vector<uint32_t> a, b;
        double ts = time_of([&] { a = square_zero_codes(4, 3, Exec::serial); });
        double tp = time_of([&] { b = square_zero_codes(4, 3, Exec::parallel); });
        bool ok = (a == b);
        row("square-zero scan, n=4, q=3", ts, tp, ok);
        if (!ok) exit_code = 1;
    }

    {
        OrbitCensus a, b;
        double ts = time_of([&] { a = census(4, 3, Exec::serial); });
        double tp = time_of([&] { b = census(4, 3, Exec::parallel); });
        bool ok = a.orbit_count == b.orbit_count && a.orbits.size() == b.orbits.size();
        for (size_t i = 0; ok && i < a.orbits.size(); ++i)
            ok = a.orbits[i].representative == b.orbits[i].representative &&
                 a.orbits[i].size == b.orbits[i].size &&
                 a.orbits[i].pattern == b.orbits[i].pattern;
        row("orbit census, n=4, q=3", ts, tp, ok);
        if (!ok) exit_code = 1;
    }

    {
        auto pats = enumerate_patterns(8);
        std::vector<std::vector<uint64_t>> a, b;
        double ts = time_of([&] { a = strict_order_bits(pats, Exec::serial); });
        double tp = time_of([&] { b = strict_order_bits(pats, Exec::parallel); });
        bool ok = (a == b);
        row("degeneration sweep, n=8 (5937^2)", ts, tp, ok);
        if (!ok) exit_code = 1;
    }

    return exit_code;
}
