// Times the serial and OpenMP subset-sum kernels on a random count matrix
// and checks that they produce identical results.

#include <chrono>
#include <cstdint>
#include <iostream>

#include "CLI11.hpp"
#include "eulercat/category.hpp"
#include "eulercat/minor_sums.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
double best_ms(F&& run, int reps) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const auto start = Clock::now();
        run();
        const std::chrono::duration<double, std::milli> elapsed = Clock::now() - start;
        best = std::min(best, elapsed.count());
    }
    return best;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Benchmark the 2^n principal-minor enumeration"};
    std::size_t dim = 14;
    std::uint64_t max_entry = 4;
    std::uint64_t seed = 1;
    int reps = 3;
    app.add_option("--dim", dim, "matrix dimension (default 14)");
    app.add_option("--max-entry", max_entry, "largest entry (default 4)");
    app.add_option("--seed", seed, "RNG seed (default 1)");
    app.add_option("--reps", reps, "repetitions, best time wins (default 3)");
    CLI11_PARSE(app, argc, argv);

    const eulercat::CountMatrix z = eulercat::random_category_matrix(dim, max_entry, seed);
    const eulercat::QMatrix q = z.to_q();

    eulercat::MinorSums serial, parallel;
    const double serial_ms = best_ms([&] { serial = eulercat::minor_sums_serial(q); }, reps);
    const double parallel_ms = best_ms([&] { parallel = eulercat::minor_sums_parallel(q); }, reps);

    if (!(serial == parallel)) {
        std::cerr << "MISMATCH: serial and parallel kernels disagree\n";
        return 1;
    }

    std::cout << "dim " << dim << " (" << (1ull << dim) << " subsets), best of " << reps
              << " reps\n";
    std::cout << "serial:   " << serial_ms << " ms\n";
#ifdef _OPENMP
    std::cout << "parallel: " << parallel_ms << " ms (" << omp_get_max_threads()
              << " threads)\n";
#else
    std::cout << "parallel: " << parallel_ms << " ms (OpenMP disabled, serial fallback)\n";
#endif
    std::cout << "speedup:  " << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0) << "x\n";
    std::cout << "results agree\n";
    return 0;
}
