#pragma once

#include "lsqfit/dense_matrix.hpp"
#include "lsqfit/diagnostics.hpp"
#include "lsqfit/power_sums.hpp"

namespace lsqfit {

/// The (m+1) x (m+1) system A x = b with a(j,k) = s[j+k] and b[j] = t[j].
/// The matrix is symmetric and Hankel by construction.
struct NormalSystem {
    DenseMatrix a;
    DenseVector b;
    int degree = 0;
};

NormalSystem build_normal_system(const PowerSums& sums);

/// Solves A x = b by Gaussian elimination with partial (row) pivoting, then
/// back substitution. Throws SingularSystemError when the best available
/// pivot magnitude falls below 1e-12 * max|a|.
Polynomial solve_gaussian(NormalSystem system);

/// accumulate -> build_normal_system -> solve_gaussian -> diagnostics.
/// chunks > 1 uses the chunked accumulation strategy. Throws
/// DegreeTooHighError above kMaxDegree.
FitReport fit_normal(const Dataset& dataset, int degree, int chunks = 1);

}  // namespace lsqfit
