#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace lsqfit {

/// Dense polynomial a_0 + a_1 x + ... + a_m x^m with coefficients stored in
/// ascending power order. Immutable after construction.
class Polynomial {
public:
    explicit Polynomial(std::vector<double> coefficients)
        : coefficients_(std::move(coefficients)) {
        if (coefficients_.empty())
            throw std::invalid_argument("polynomial needs at least one coefficient");
        for (double c : coefficients_)
            if (!std::isfinite(c))
                throw std::invalid_argument("polynomial coefficients must be finite");
    }

    int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
    const std::vector<double>& coefficients() const noexcept { return coefficients_; }

private:
    std::vector<double> coefficients_;
};

/// Value of the polynomial at x, by Horner's scheme.
double evaluate(const Polynomial& poly, double x);

}  // namespace lsqfit
