#include "lsqfit/synthetic.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

namespace lsqfit {
namespace {

// Top 53 bits of the raw engine output, mapped to [0, 1).
double uniform01(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

// Box-Muller from explicit uniforms; u1 is shifted into (0, 1] to keep the
// log finite.
double standard_normal(std::mt19937_64& gen) {
    const double u1 = 1.0 - uniform01(gen);
    const double u2 = uniform01(gen);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::vector<double> draw_truth(int degree, std::mt19937_64& gen) {
    std::vector<double> coeffs(static_cast<std::size_t>(degree) + 1);
    for (double& c : coeffs) c = -10.0 + 20.0 * uniform01(gen);
    return coeffs;
}

}  // namespace

Polynomial synthetic_ground_truth(int degree, std::uint64_t seed) {
    if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
    std::mt19937_64 gen(seed);
    return Polynomial(draw_truth(degree, gen));
}

Dataset generate_synthetic(std::size_t n, int degree, double noise_sigma,
                           std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("need at least two points");
    if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
    if (!(noise_sigma >= 0.0))
        throw std::invalid_argument("noise sigma must be nonnegative");

    std::mt19937_64 gen(seed);
    const Polynomial truth(draw_truth(degree, gen));

    std::vector<Point> points(n);
    for (Point& p : points) p.x = uniform01(gen);
    for (Point& p : points) {
        p.y = evaluate(truth, p.x);
        if (noise_sigma > 0.0) p.y += noise_sigma * standard_normal(gen);
    }
    return Dataset(std::move(points));
}

}  // namespace lsqfit
