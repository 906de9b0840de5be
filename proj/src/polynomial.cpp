#include "lsqfit/polynomial.hpp"

namespace lsqfit {

double evaluate(const Polynomial& poly, double x) {
    const std::vector<double>& a = poly.coefficients();
    double acc = a.back();
    for (auto it = a.rbegin() + 1; it != a.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

}  // namespace lsqfit
