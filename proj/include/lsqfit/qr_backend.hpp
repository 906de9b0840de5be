#pragma once

#include "lsqfit/dense_matrix.hpp"
#include "lsqfit/diagnostics.hpp"

namespace lsqfit {

/// The n x (m+1) system V p = y with v(i,j) = x_i^j.
struct VandermondeSystem {
    DenseMatrix v;
    DenseVector y;
    int degree = 0;
};

/// Rows built by incremental multiplication; y copied from the dataset.
/// Throws OverflowError if any entry is non-finite.
VandermondeSystem build_vandermonde(const Dataset& dataset, int degree);

/// Packed thin Householder QR of an n x c matrix, n >= c.
///
/// `packed` holds R on and above the diagonal (diagonal normalized to be
/// nonnegative) and the tails of the unit reflectors below it: reflector k
/// is u = [1, packed(k+1 .. n-1, k)] acting on rows k..n-1 as
/// H_k = I - tau[k] * u * u^T. column_sign[k] is the sign absorbed into
/// column k of Q when the diagonal was normalized, so
/// V = (H_0 H_1 ... H_{c-1} S) R with S = diag(column_sign, 1, ..., 1).
/// `qty` is Q^T y; its entries past row c-1 carry the least-squares
/// residual.
struct HouseholderQr {
    DenseMatrix packed;
    std::vector<double> tau;
    std::vector<double> column_sign;
    std::vector<double> qty;
};

/// Factors the matrix by successive Householder reflections applied column
/// by column, transforming y in the same pass (Q is never materialized).
/// Throws RankDeficientError when a diagonal entry of R falls below
/// 1e-12 times the largest initial column norm.
HouseholderQr householder_qr(DenseMatrix v, DenseVector y);

/// householder_qr + back substitution on the leading (m+1) x (m+1)
/// triangle. Requires at least degree+1 rows.
Polynomial solve_qr(const VandermondeSystem& system);

/// build_vandermonde -> solve_qr -> diagnostics. Throws DegreeTooHighError
/// above kMaxDegree.
FitReport fit_qr(const Dataset& dataset, int degree);

}  // namespace lsqfit
