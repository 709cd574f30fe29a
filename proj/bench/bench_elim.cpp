// Compares the OpenMP Bareiss elimination against the serial reference on
// constraint systems of growing size.
#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "gssp/graph.hpp"
#include "gssp/linalg.hpp"
#include "gssp/strong.hpp"

using Clock = std::chrono::steady_clock;

static double time_ms(int (*fn)(const gssp::RatMatrix&), const gssp::RatMatrix& m, int reps,
                      int* rank_out) {
    double best = 1e18;
    for (int r = 0; r < reps; ++r) {
        auto t0 = Clock::now();
        *rank_out = fn(m);
        auto t1 = Clock::now();
        double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        if (ms < best) best = ms;
    }
    return best;
}

int main(int argc, char** argv) {
    int max_n = argc > 1 ? std::atoi(argv[1]) : 11;
    std::printf("%4s %6s %6s %12s %12s %8s\n", "n", "rows", "cols", "serial_ms", "openmp_ms",
                "speedup");
    for (int n = 6; n <= max_n; ++n) {
        gssp::Graph g = gssp::cycle(n);
        for (int v = 0; v + 3 < n; v += 3) g.add_edge(v, v + 2);
        gssp::RatMatrix a = gssp::sample_in_S(g, 7);
        gssp::ConstraintSystem sys = gssp::build_system(a, g, gssp::PropertyKind::SSP);
        int r1 = 0, r2 = 0;
        double serial = time_ms(gssp::rank_exact_serial, sys.matrix, 3, &r1);
        double parallel = time_ms(gssp::rank_exact, sys.matrix, 3, &r2);
        if (r1 != r2) {
            std::fprintf(stderr, "rank mismatch at n=%d: %d vs %d\n", n, r1, r2);
            return 1;
        }
        std::printf("%4d %6d %6d %12.3f %12.3f %8.2f\n", n, sys.matrix.rows(), sys.matrix.cols(),
                    serial, parallel, serial / parallel);
    }
    return 0;
}
