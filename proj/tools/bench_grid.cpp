// Times the serial reference against the OpenMP path of the oracle grid
// cross-check and prints both, asserting equal outcomes.

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "gonalbn/oracle.hpp"

int main(int argc, char** argv) {
    std::int64_t g_max = 14;
    int nu_max = 5;
    if (argc > 1) g_max = std::atoll(argv[1]);
    if (argc > 2) nu_max = std::atoi(argv[2]);

    using clock = std::chrono::steady_clock;

    const auto t0 = clock::now();
    const auto serial = gonalbn::crosscheck_tables(g_max, nu_max, 3, /*parallel=*/false);
    const auto t1 = clock::now();
    const auto parallel = gonalbn::crosscheck_tables(g_max, nu_max, 3, /*parallel=*/true);
    const auto t2 = clock::now();

    const double serial_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    const double parallel_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();

    std::cout << "grid g<=" << g_max << " nu<=" << nu_max << "  cells=" << serial.cells
              << " oracle_cells=" << serial.oracle_cells << "\n";
    std::cout << "serial   " << serial_ms << " ms\n";
    std::cout << "openmp   " << parallel_ms << " ms  ("
              << (gonalbn::openmp_enabled() ? "multithreaded" : "single thread") << ")\n";
    if (parallel_ms > 0) {
        std::cout << "speedup  " << serial_ms / parallel_ms << "x\n";
    }

    const bool same = serial.failures.size() == parallel.failures.size() &&
                      serial.notes.size() == parallel.notes.size() &&
                      serial.cells == parallel.cells;
    if (!same) {
        std::cout << "MISMATCH between serial and parallel outcomes\n";
        return 1;
    }
    if (!serial.pass()) {
        std::cout << "grid failures present (" << serial.failures.size() << ")\n";
        return 1;
    }
    std::cout << "serial and parallel outcomes agree\n";
    return 0;
}
