#include "lsqfit/normal_backend.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "lsqfit/errors.hpp"

namespace lsqfit {

NormalSystem build_normal_system(const PowerSums& sums) {
    const std::size_t dim = static_cast<std::size_t>(sums.degree) + 1;
    DenseMatrix a(dim, dim);
    for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t k = 0; k < dim; ++k)
            a(j, k) = sums.s[j + k];
    return NormalSystem{std::move(a), sums.t, sums.degree};
}

Polynomial solve_gaussian(NormalSystem system) {
    DenseMatrix& a = system.a;
    DenseVector& b = system.b;
    const std::size_t dim = a.rows();
    if (dim == 0 || a.cols() != dim || b.size() != dim)
        throw std::invalid_argument("normal system dimensions are inconsistent");

    double max_entry = 0.0;
    for (double v : a.data()) max_entry = std::max(max_entry, std::abs(v));
    if (max_entry == 0.0)
        throw SingularSystemError("normal matrix is identically zero");
    const double pivot_floor = 1e-12 * max_entry;

    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t pivot_row = col;
        double pivot = std::abs(a(col, col));
        for (std::size_t r = col + 1; r < dim; ++r) {
            const double candidate = std::abs(a(r, col));
            if (candidate > pivot) {
                pivot = candidate;
                pivot_row = r;
            }
        }
        if (pivot < pivot_floor)
            throw SingularSystemError(
                "singular normal system at elimination step " + std::to_string(col) +
                " (fewer than degree+1 distinct x values, or hopeless conditioning)");
        if (pivot_row != col) {
            for (std::size_t k = col; k < dim; ++k)
                std::swap(a(col, k), a(pivot_row, k));
            std::swap(b[col], b[pivot_row]);
        }
        for (std::size_t r = col + 1; r < dim; ++r) {
            const double factor = a(r, col) / a(col, col);
            if (factor == 0.0) continue;
            a(r, col) = 0.0;
            for (std::size_t k = col + 1; k < dim; ++k)
                a(r, k) -= factor * a(col, k);
            b[r] -= factor * b[col];
        }
    }

    DenseVector x(dim);
    for (std::size_t i = dim; i-- > 0;) {
        double acc = b[i];
        for (std::size_t k = i + 1; k < dim; ++k) acc -= a(i, k) * x[k];
        x[i] = acc / a(i, i);
    }
    for (double v : x)
        if (!std::isfinite(v))
            throw OverflowError("elimination produced non-finite coefficients");
    return Polynomial(std::move(x));
}

FitReport fit_normal(const Dataset& dataset, int degree, int chunks) {
    if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
    if (degree > kMaxDegree)
        throw DegreeTooHighError("degree " + std::to_string(degree) + " exceeds the cap of " +
                                 std::to_string(kMaxDegree));
    const PowerSums sums = chunks == 1 ? accumulate(dataset, degree)
                                       : accumulate_parallel(dataset, degree, chunks);
    return make_fit_report(dataset, solve_gaussian(build_normal_system(sums)),
                           FitBackend::NormalEquations);
}

}  // namespace lsqfit
