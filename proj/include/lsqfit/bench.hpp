#pragma once

#include <cstddef>
#include <cstdint>

namespace lsqfit {

/// Wall-clock comparison of sequential vs chunked accumulation on one
/// synthetic dataset.
struct BenchReport {
    std::size_t n_points = 0;
    int degree = 0;
    int chunks = 1;
    int repetitions = 0;
    double sequential_median_s = 0.0;
    double sequential_min_s = 0.0;
    double parallel_median_s = 0.0;
    double parallel_min_s = 0.0;
    double speedup = 0.0;                // sequential median / parallel median
    double max_relative_deviation = 0.0; // between the two strategies' sums
    bool valid = false;                  // deviation <= 1e-9
};

/// Times accumulate() and accumulate_parallel() on the same generated
/// dataset (medians over `repetitions` >= 3 runs) and cross-checks the two
/// strategies' sums, taken from the timed runs themselves.
BenchReport run_benchmark(std::size_t n, int degree, int chunks, int repetitions,
                          std::uint64_t seed);

}  // namespace lsqfit
