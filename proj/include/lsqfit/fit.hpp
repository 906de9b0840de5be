#pragma once

#include <optional>
#include <vector>

#include "lsqfit/dataset.hpp"
#include "lsqfit/diagnostics.hpp"

namespace lsqfit {

enum class BackendChoice { Normal, Qr, Both };

struct FitRequest {
    int degree = 1;
    BackendChoice backend = BackendChoice::Normal;
    int chunks = 1;  // accumulation slices used by the normal backend
};

/// One report for a single backend, two (normal first) for Both.
struct FitOutcome {
    std::vector<FitReport> reports;
    /// Both only: max over coefficients of |a_normal - a_qr|.
    std::optional<double> max_coef_discrepancy;
    /// False when Both and some coefficient pair differs by more than
    /// 1e-4 * (1 + |coef|). A warning, not an error.
    bool backends_agree = true;
};

/// Dispatches to the requested backend(s).
FitOutcome fit(const Dataset& dataset, const FitRequest& request);

/// max over k of |a_k - b_k| for two same-degree polynomials.
double max_coefficient_discrepancy(const Polynomial& a, const Polynomial& b);

/// True when every pair satisfies |a_k - b_k| <= rel_tol * (1 + max|coef|).
bool coefficients_agree(const Polynomial& a, const Polynomial& b, double rel_tol);

}  // namespace lsqfit
