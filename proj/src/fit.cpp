#include "lsqfit/fit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lsqfit/normal_backend.hpp"
#include "lsqfit/qr_backend.hpp"

namespace lsqfit {

double max_coefficient_discrepancy(const Polynomial& a, const Polynomial& b) {
    const std::vector<double>& ca = a.coefficients();
    const std::vector<double>& cb = b.coefficients();
    if (ca.size() != cb.size())
        throw std::invalid_argument("polynomials have different degrees");
    double worst = 0.0;
    for (std::size_t k = 0; k < ca.size(); ++k)
        worst = std::max(worst, std::abs(ca[k] - cb[k]));
    return worst;
}

bool coefficients_agree(const Polynomial& a, const Polynomial& b, double rel_tol) {
    const std::vector<double>& ca = a.coefficients();
    const std::vector<double>& cb = b.coefficients();
    if (ca.size() != cb.size()) return false;
    for (std::size_t k = 0; k < ca.size(); ++k) {
        const double scale = 1.0 + std::max(std::abs(ca[k]), std::abs(cb[k]));
        if (std::abs(ca[k] - cb[k]) > rel_tol * scale) return false;
    }
    return true;
}

FitOutcome fit(const Dataset& dataset, const FitRequest& request) {
    if (request.degree < 0) throw std::invalid_argument("degree must be nonnegative");
    if (request.chunks < 1) throw std::invalid_argument("chunks must be at least 1");

    FitOutcome outcome;
    switch (request.backend) {
        case BackendChoice::Normal:
            outcome.reports.push_back(fit_normal(dataset, request.degree, request.chunks));
            break;
        case BackendChoice::Qr:
            outcome.reports.push_back(fit_qr(dataset, request.degree));
            break;
        case BackendChoice::Both: {
            outcome.reports.push_back(fit_normal(dataset, request.degree, request.chunks));
            outcome.reports.push_back(fit_qr(dataset, request.degree));
            const Polynomial& pn = outcome.reports[0].polynomial;
            const Polynomial& pq = outcome.reports[1].polynomial;
            outcome.max_coef_discrepancy = max_coefficient_discrepancy(pn, pq);
            outcome.backends_agree = coefficients_agree(pn, pq, 1e-4);
            break;
        }
    }
    return outcome;
}

}  // namespace lsqfit
