#pragma once

#include <cstddef>
#include <vector>

#include "lsqfit/dataset.hpp"
#include "lsqfit/polynomial.hpp"

namespace lsqfit {

/// Highest degree the fitting entry points accept; the normal matrix is too
/// ill-conditioned beyond this in 64-bit arithmetic.
inline constexpr int kMaxDegree = 12;

enum class FitBackend { NormalEquations, HouseholderQR };

/// "normal" or "qr".
const char* backend_name(FitBackend backend);

/// Fitted polynomial plus goodness-of-fit diagnostics.
struct FitReport {
    Polynomial polynomial;
    FitBackend backend;
    std::vector<double> residuals;  // y_i - f(x_i), in dataset order
    double sse;                     // sum of squared residuals
    double r;                       // correlation coefficient, in [0, 1]
    std::size_t n_points;
};

/// residuals[i] = y_i - evaluate(poly, x_i).
std::vector<double> residuals(const Dataset& dataset, const Polynomial& poly);

double sum_squared_error(const std::vector<double>& residuals);

/// R = sqrt(max(0, 1 - sse/sst)) with sst = sum((y_i - mean(y))^2). When sst
/// is zero (constant y), an exact fit (sse <= 1e-12 * n) gives 1, anything
/// else 0.
double correlation_coefficient(const Dataset& dataset, double sse);

/// Bundles residuals, SSE and R for a fitted polynomial. Throws
/// OverflowError if evaluating the polynomial on the data is non-finite.
FitReport make_fit_report(const Dataset& dataset, Polynomial poly, FitBackend backend);

}  // namespace lsqfit
