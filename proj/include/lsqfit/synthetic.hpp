#pragma once

#include <cstdint>

#include "lsqfit/dataset.hpp"
#include "lsqfit/polynomial.hpp"

namespace lsqfit {

/// The ground-truth polynomial generate_synthetic draws for this (degree,
/// seed) pair: degree+1 coefficients uniform in [-10, 10].
Polynomial synthetic_ground_truth(int degree, std::uint64_t seed);

/// Deterministic synthetic dataset: x_i uniform on [0, 1] and
/// y_i = truth(x_i) + noise_sigma * z_i with z_i standard normal.
///
/// All randomness comes from a mt19937_64 seeded with `seed`, with uniforms
/// taken as the top 53 bits of the raw output and normals via Box-Muller,
/// so identical arguments produce an identical dataset on every platform
/// (the standard library distributions are not specified bit-identically).
Dataset generate_synthetic(std::size_t n, int degree, double noise_sigma,
                           std::uint64_t seed);

}  // namespace lsqfit
