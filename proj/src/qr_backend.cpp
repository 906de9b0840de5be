#include "lsqfit/qr_backend.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "lsqfit/errors.hpp"

namespace lsqfit {

VandermondeSystem build_vandermonde(const Dataset& dataset, int degree) {
    if (degree < 0) throw std::invalid_argument("degree must be nonnegative");

    const std::size_t n = dataset.size();
    const std::size_t cols = static_cast<std::size_t>(degree) + 1;
    DenseMatrix v(n, cols);
    DenseVector y(n);
    for (std::size_t i = 0; i < n; ++i) {
        double power = 1.0;
        for (std::size_t j = 0; j < cols; ++j) {
            v(i, j) = power;
            power *= dataset[i].x;
        }
        y[i] = dataset[i].y;
    }
    for (double entry : v.data())
        if (!std::isfinite(entry))
            throw OverflowError("Vandermonde entries overflowed; the data scale is incompatible with this degree");
    return VandermondeSystem{std::move(v), std::move(y), degree};
}

HouseholderQr householder_qr(DenseMatrix v, DenseVector y) {
    const std::size_t n = v.rows();
    const std::size_t cols = v.cols();
    if (cols == 0 || n < cols)
        throw RankDeficientError("system has fewer rows than columns");
    if (y.size() != n)
        throw std::invalid_argument("right-hand side length does not match the matrix");

    double max_col_norm = 0.0;
    for (std::size_t j = 0; j < cols; ++j) {
        double ss = 0.0;
        for (std::size_t i = 0; i < n; ++i) ss += v(i, j) * v(i, j);
        max_col_norm = std::max(max_col_norm, std::sqrt(ss));
    }
    if (max_col_norm == 0.0)
        throw RankDeficientError("matrix is identically zero");
    const double diag_floor = 1e-12 * max_col_norm;

    HouseholderQr f;
    f.tau.assign(cols, 0.0);
    f.column_sign.assign(cols, 1.0);

    for (std::size_t k = 0; k < cols; ++k) {
        double ss = 0.0;
        for (std::size_t i = k; i < n; ++i) ss += v(i, k) * v(i, k);
        const double sigma = std::sqrt(ss);
        if (sigma < diag_floor)
            throw RankDeficientError(
                "rank-deficient system at column " + std::to_string(k) +
                " (fewer than degree+1 distinct x values)");

        // Reflector v = x - beta*e1 with beta chosen so v(k,k) gains
        // magnitude instead of cancelling; u is v scaled to a unit head.
        const double x0 = v(k, k);
        const double beta = x0 >= 0.0 ? -sigma : sigma;
        const double v0 = x0 - beta;
        const double vtv = ss - 2.0 * beta * x0 + beta * beta;
        const double tau = 2.0 * v0 * v0 / vtv;
        f.tau[k] = tau;
        for (std::size_t i = k + 1; i < n; ++i) v(i, k) /= v0;

        for (std::size_t j = k + 1; j < cols; ++j) {
            double dot = v(k, j);
            for (std::size_t i = k + 1; i < n; ++i) dot += v(i, k) * v(i, j);
            const double scale = tau * dot;
            v(k, j) -= scale;
            for (std::size_t i = k + 1; i < n; ++i) v(i, j) -= scale * v(i, k);
        }
        {
            double dot = y[k];
            for (std::size_t i = k + 1; i < n; ++i) dot += v(i, k) * y[i];
            const double scale = tau * dot;
            y[k] -= scale;
            for (std::size_t i = k + 1; i < n; ++i) y[i] -= scale * v(i, k);
        }

        v(k, k) = beta;
        // Row k of R and entry k of Q^T y are final from here on; normalize
        // the diagonal to be nonnegative and absorb the sign into Q.
        if (beta < 0.0) {
            f.column_sign[k] = -1.0;
            for (std::size_t j = k; j < cols; ++j) v(k, j) = -v(k, j);
            y[k] = -y[k];
        }
    }

    f.packed = std::move(v);
    f.qty = std::move(y);
    return f;
}

Polynomial solve_qr(const VandermondeSystem& system) {
    const std::size_t cols = static_cast<std::size_t>(system.degree) + 1;
    if (system.v.cols() != cols)
        throw std::invalid_argument("matrix width does not match the degree");
    if (system.v.rows() < cols)
        throw RankDeficientError("need at least degree+1 points");

    const HouseholderQr f = householder_qr(system.v, system.y);

    DenseVector p(cols);
    for (std::size_t i = cols; i-- > 0;) {
        double acc = f.qty[i];
        for (std::size_t k = i + 1; k < cols; ++k) acc -= f.packed(i, k) * p[k];
        p[i] = acc / f.packed(i, i);
    }
    for (double v : p)
        if (!std::isfinite(v))
            throw OverflowError("back substitution produced non-finite coefficients");
    return Polynomial(std::move(p));
}

FitReport fit_qr(const Dataset& dataset, int degree) {
    if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
    if (degree > kMaxDegree)
        throw DegreeTooHighError("degree " + std::to_string(degree) + " exceeds the cap of " +
                                 std::to_string(kMaxDegree));
    return make_fit_report(dataset, solve_qr(build_vandermonde(dataset, degree)),
                           FitBackend::HouseholderQR);
}

}  // namespace lsqfit
