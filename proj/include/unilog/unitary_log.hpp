#pragma once

#include <string_view>

#include "unilog/matrix.hpp"
#include "unilog/schur.hpp"

namespace unilog {

enum class Algorithm {
    Diagonalize = 1,          // eigenvector basis, then Hermitian part
    Schur = 3,                // Schur basis, phases of the triangular diagonal
    PolarSchur = 4,           // polar factor first, then Schur
    NewtonSchur = 5,          // two Newton polar steps, then Schur
    SelfDual = 6,             // two Newton steps, structured Schur, self-dual output
    DiagonalizeSelfDual = 11, // Diagonalize followed by self-dual projection ("1A")
};

std::string_view algorithm_label(Algorithm alg);
/// Accepts the labels produced by algorithm_label ("1", "3", "4", "5", "6", "1A").
Algorithm parse_algorithm(std::string_view label);

/**
 * Hermitian logarithm of a near-unitary matrix together with the quantities
 * the benchmark tables report.
 *
 * h is exactly Hermitian (h(i,j) == conj(h(j,i)) bitwise) and satisfies
 * e^{-ih} ~ u with spectrum in [-pi, pi).
 */
struct UnitaryLogResult {
    ComplexMatrix h;
    double deviation = 0.0;      // ||u*u - I||
    double backward_error = 0.0; // ||e^{-ih} - u||
    double wall_time = 0.0;      // seconds spent computing h
    Algorithm algorithm = Algorithm::Schur;
};

/// ||u*u - I|| in the operator norm.
double deviation_from_unitary(const ComplexMatrix& u);

/// Diagonal D with D(j,j) = t(j,j) / |t(j,j)|. Only the diagonal of t is read.
/// Throws DomainError carrying the index of a zero diagonal entry.
ComplexMatrix phase_normalize_diagonal(const ComplexMatrix& t);

/// Diagonal L with L(j,j) = i theta_j, theta_j = arg d(j,j) in (-pi, pi].
/// Throws DomainError when some | |d(j,j)| - 1 | exceeds tol::unimodular.
ComplexMatrix principal_log_diagonal(const ComplexMatrix& d);

/// (h0 + h0*) / 2, exactly Hermitian; Hermitian inputs are returned unchanged.
ComplexMatrix hermitian_part(const ComplexMatrix& h0);

/// hermitian_part(i * basis * log_d * basis^{-1}), with basis^{-1} supplied by
/// the caller (the adjoint for a unitary basis).
ComplexMatrix hermitian_log(const ComplexMatrix& basis, const ComplexMatrix& log_d,
                            const ComplexMatrix& basis_inverse);

/// ||expm(-i h) - u|| in the operator norm.
double backward_error(const ComplexMatrix& u, const ComplexMatrix& h);

UnitaryLogResult log_unitary_diagonalize(const ComplexMatrix& u);
UnitaryLogResult log_unitary_schur(const ComplexMatrix& u);
UnitaryLogResult log_unitary_polar_schur(const ComplexMatrix& u);
UnitaryLogResult log_unitary_newton_schur(const ComplexMatrix& u);

/// Dispatch by algorithm id; the self-dual ids forward to selfdual.hpp.
UnitaryLogResult log_unitary(const ComplexMatrix& u, Algorithm alg);

// Error bounds from the near-unitary Schur analysis, d = ||U*U - I||.

/// (sqrt(2(n-1)) + 1) d^{1/2}: Schur basis with phase-normalized diagonal.
double schur_phase_bound(std::size_t n, double deviation);
/// (sqrt(2(n-1)) + 2) d: one Newton step before the Schur factorization.
double one_step_schur_bound(std::size_t n, double deviation);
/// (7/10) sqrt(n) d^2 + (7/10) d: two Newton steps before the Schur factorization.
double two_step_schur_bound(std::size_t n, double deviation);

/// Departure of an upper triangular t from its diagonal, next to the two a
/// priori estimates available for it.
struct DepartureEstimate {
    double measured = 0.0; // ||t - diag(t)||_F
    double unitary = 0.0;  // sqrt(2(n-1)) ||t*t - I||_F^{1/2}
    double henrici = 0.0;  // ((n^3 - n)/12)^{1/2} ||t*t - t t*||_F^{1/2}
};

DepartureEstimate departure_from_normality(const ComplexMatrix& t);

} // namespace unilog
