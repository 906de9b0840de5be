#include "lsqfit/diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include "lsqfit/errors.hpp"

namespace lsqfit {

const char* backend_name(FitBackend backend) {
    return backend == FitBackend::NormalEquations ? "normal" : "qr";
}

std::vector<double> residuals(const Dataset& dataset, const Polynomial& poly) {
    std::vector<double> r(dataset.size());
    for (std::size_t i = 0; i < dataset.size(); ++i)
        r[i] = dataset[i].y - evaluate(poly, dataset[i].x);
    return r;
}

double sum_squared_error(const std::vector<double>& residuals) {
    double sse = 0.0;
    for (double e : residuals) sse += e * e;
    return sse;
}

double correlation_coefficient(const Dataset& dataset, double sse) {
    double mean = 0.0;
    for (const Point& p : dataset) mean += p.y;
    mean /= static_cast<double>(dataset.size());

    double sst = 0.0;
    for (const Point& p : dataset) sst += (p.y - mean) * (p.y - mean);

    if (sst == 0.0)
        return sse <= 1e-12 * static_cast<double>(dataset.size()) ? 1.0 : 0.0;
    return std::sqrt(std::max(0.0, 1.0 - sse / sst));
}

FitReport make_fit_report(const Dataset& dataset, Polynomial poly, FitBackend backend) {
    std::vector<double> res = residuals(dataset, poly);
    for (double e : res)
        if (!std::isfinite(e))
            throw OverflowError("polynomial evaluation overflowed on the input data");
    const double sse = sum_squared_error(res);
    const double r = correlation_coefficient(dataset, sse);
    return FitReport{std::move(poly), backend, std::move(res), sse, r, dataset.size()};
}

}  // namespace lsqfit
