#pragma once

#include <cstddef>
#include <vector>

#include "lsqfit/dataset.hpp"

namespace lsqfit {

/// Power sums s[k] = sum(x_i^k) for k = 0..2m and moment sums
/// t[j] = sum(x_i^j * y_i) for j = 0..m: every summation entering the
/// normal matrix and its right-hand side. s[0] is exactly the point count.
struct PowerSums {
    int degree = 0;
    std::vector<double> s;  // length 2*degree + 1
    std::vector<double> t;  // length degree + 1
    std::size_t n = 0;
};

/// Single-pass sequential accumulation. Per point the powers are produced by
/// incremental multiplication (p_{k+1} = p_k * x) and added in dataset
/// order. Throws OverflowError if any sum ends up non-finite.
PowerSums accumulate(const Dataset& dataset, int degree);

/// Chunked accumulation: the dataset is split into `chunks` contiguous
/// slices of near-equal size, each slice is accumulated independently with
/// the sequential algorithm (the slices may run on concurrent threads), and
/// the partial sums are added element-wise in ascending slice order. The
/// result is a pure function of (dataset, degree, chunks); chunks = 1 is
/// bit-identical to accumulate().
PowerSums accumulate_parallel(const Dataset& dataset, int degree, int chunks);

}  // namespace lsqfit
