#include "lsqfit/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "lsqfit/power_sums.hpp"
#include "lsqfit/synthetic.hpp"

namespace lsqfit {
namespace {

using Clock = std::chrono::steady_clock;

double median(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    return values.size() % 2 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

double max_relative_deviation(const PowerSums& a, const PowerSums& b) {
    double worst = 0.0;
    auto update = [&worst](double x, double y) {
        const double denom = std::max(std::abs(x), std::abs(y));
        if (denom > 0.0) worst = std::max(worst, std::abs(x - y) / denom);
    };
    for (std::size_t k = 0; k < a.s.size(); ++k) update(a.s[k], b.s[k]);
    for (std::size_t j = 0; j < a.t.size(); ++j) update(a.t[j], b.t[j]);
    return worst;
}

}  // namespace

BenchReport run_benchmark(std::size_t n, int degree, int chunks, int repetitions,
                          std::uint64_t seed) {
    if (repetitions < 3)
        throw std::invalid_argument("benchmark needs at least 3 repetitions");

    const Dataset dataset = generate_synthetic(n, degree, 0.1, seed);

    // One untimed pass per strategy warms caches and the thread pool.
    PowerSums sequential = accumulate(dataset, degree);
    PowerSums parallel = accumulate_parallel(dataset, degree, chunks);

    std::vector<double> seq_times;
    std::vector<double> par_times;
    seq_times.reserve(static_cast<std::size_t>(repetitions));
    par_times.reserve(static_cast<std::size_t>(repetitions));

    for (int rep = 0; rep < repetitions; ++rep) {
        const auto t0 = Clock::now();
        sequential = accumulate(dataset, degree);
        seq_times.push_back(std::chrono::duration<double>(Clock::now() - t0).count());
    }
    for (int rep = 0; rep < repetitions; ++rep) {
        const auto t0 = Clock::now();
        parallel = accumulate_parallel(dataset, degree, chunks);
        par_times.push_back(std::chrono::duration<double>(Clock::now() - t0).count());
    }

    BenchReport report;
    report.n_points = n;
    report.degree = degree;
    report.chunks = chunks;
    report.repetitions = repetitions;
    report.sequential_median_s = median(seq_times);
    report.sequential_min_s = *std::min_element(seq_times.begin(), seq_times.end());
    report.parallel_median_s = median(par_times);
    report.parallel_min_s = *std::min_element(par_times.begin(), par_times.end());
    report.speedup = report.sequential_median_s / std::max(report.parallel_median_s, 1e-12);
    // The deviation comes from the timed runs themselves, not a separate pass.
    report.max_relative_deviation = max_relative_deviation(sequential, parallel);
    report.valid = report.max_relative_deviation <= 1e-9;
    return report;
}

}  // namespace lsqfit
