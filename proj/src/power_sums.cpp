#include "lsqfit/power_sums.hpp"

#include <cmath>
#include <stdexcept>

#include "lsqfit/errors.hpp"

namespace lsqfit {
namespace {

// Sequential sums over points [lo, hi). s has 2*degree+1 slots and t has
// degree+1, both zero-initialized by the caller.
void accumulate_into(const std::vector<Point>& pts, std::size_t lo, std::size_t hi,
                     int degree, double* s, double* t) noexcept {
    const int top = 2 * degree;
    for (std::size_t i = lo; i < hi; ++i) {
        const double x = pts[i].x;
        const double y = pts[i].y;
        double power = 1.0;
        for (int k = 0; k <= top; ++k) {
            s[k] += power;
            if (k <= degree) t[k] += power * y;
            power *= x;
        }
    }
}

void require_finite(const PowerSums& sums) {
    for (double v : sums.s)
        if (!std::isfinite(v))
            throw OverflowError("power sums overflowed; the data scale is incompatible with this degree");
    for (double v : sums.t)
        if (!std::isfinite(v))
            throw OverflowError("moment sums overflowed; the data scale is incompatible with this degree");
}

}  // namespace

PowerSums accumulate(const Dataset& dataset, int degree) {
    if (degree < 0) throw std::invalid_argument("degree must be nonnegative");

    PowerSums sums;
    sums.degree = degree;
    sums.n = dataset.size();
    sums.s.assign(static_cast<std::size_t>(2 * degree) + 1, 0.0);
    sums.t.assign(static_cast<std::size_t>(degree) + 1, 0.0);
    accumulate_into(dataset.points(), 0, dataset.size(), degree, sums.s.data(), sums.t.data());
    require_finite(sums);
    return sums;
}

PowerSums accumulate_parallel(const Dataset& dataset, int degree, int chunks) {
    if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
    if (chunks < 1) throw std::invalid_argument("chunks must be at least 1");

    const std::size_t n = dataset.size();
    const std::size_t s_len = static_cast<std::size_t>(2 * degree) + 1;
    const std::size_t t_len = static_cast<std::size_t>(degree) + 1;
    const std::size_t stride = s_len + t_len;

    // One flat buffer with a slot per chunk; no allocation inside the
    // parallel region.
    std::vector<double> partials(static_cast<std::size_t>(chunks) * stride, 0.0);
    const std::vector<Point>& pts = dataset.points();

#pragma omp parallel for schedule(static)
    for (int c = 0; c < chunks; ++c) {
        const auto uc = static_cast<std::size_t>(c);
        const std::size_t lo = n * uc / static_cast<std::size_t>(chunks);
        const std::size_t hi = n * (uc + 1) / static_cast<std::size_t>(chunks);
        double* slot = partials.data() + uc * stride;
        accumulate_into(pts, lo, hi, degree, slot, slot + s_len);
    }

    PowerSums sums;
    sums.degree = degree;
    sums.n = n;
    // Combining in ascending chunk order keeps the result a pure function of
    // (dataset, degree, chunks) regardless of thread scheduling.
    sums.s.assign(partials.begin(), partials.begin() + static_cast<std::ptrdiff_t>(s_len));
    sums.t.assign(partials.begin() + static_cast<std::ptrdiff_t>(s_len),
                  partials.begin() + static_cast<std::ptrdiff_t>(stride));
    for (int c = 1; c < chunks; ++c) {
        const double* slot = partials.data() + static_cast<std::size_t>(c) * stride;
        for (std::size_t k = 0; k < s_len; ++k) sums.s[k] += slot[k];
        for (std::size_t j = 0; j < t_len; ++j) sums.t[j] += slot[s_len + j];
    }
    require_finite(sums);
    return sums;
}

}  // namespace lsqfit
