#pragma once

#include <vector>

#include "unilog/matrix.hpp"

namespace unilog {

/// A = q t q*, q unitary, t upper triangular with exact zeros below the
/// diagonal.
struct SchurFactorization {
    ComplexMatrix q;
    ComplexMatrix t;
};

/**
 * Complex Schur factorization.
 *
 * Householder reduction to upper Hessenberg form followed by implicit
 * single-shift QR sweeps with a Wilkinson shift (exceptional shift every ten
 * stalled sweeps). A subdiagonal entry is deflated once
 * |h(k,k-1)| <= tol::qr_deflation * (|h(k-1,k-1)| + |h(k,k)|).
 *
 * Throws ConvergenceError after tol::max_qr_sweeps * n sweeps without full
 * deflation.
 */
SchurFactorization schur(const ComplexMatrix& a);

/// Eigenvalues only (diagonal of the Schur factor), skipping accumulation of q.
std::vector<Complex> eigenvalues(const ComplexMatrix& a);

/// A w = w diag(eigenvalues), columns of w normalized to unit 2-norm.
struct EigenFactorization {
    ComplexMatrix w;
    std::vector<Complex> eigenvalues;
    /// 1-norm condition number of w; +inf if w is numerically singular.
    double condition = 0.0;
    /// Set when exactly tied Schur diagonal entries had to be separated.
    bool perturbed = false;
};

/**
 * Diagonalization by Schur factorization plus back-substitution for the
 * eigenvectors of the triangular factor.
 *
 * Clustered eigenvalues give an ill-conditioned w; that is reported through
 * `condition`, never as an error. Exactly tied diagonal entries (relative gap
 * below tol::eig_tie) are separated by tol::eig_tie_perturbation * (1 + |t|)
 * on the later entry and flagged in `perturbed`.
 */
EigenFactorization eig_via_schur(const ComplexMatrix& a);

/// Spectral decomposition of a Hermitian matrix, eigenvalues ascending.
struct HermitianEigen {
    std::vector<double> values;
    ComplexMatrix vectors;
};

/// Only the Hermitian part of a is read.
HermitianEigen hermitian_eigen(const ComplexMatrix& a);

} // namespace unilog
