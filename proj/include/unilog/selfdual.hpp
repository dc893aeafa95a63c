#pragma once

#include "unilog/matrix.hpp"
#include "unilog/unitary_log.hpp"

namespace unilog {

/**
 * Dual of a 2N x 2N matrix with respect to J = [[0, I], [-I, 0]]:
 *
 *   [[A, B], [C, D]]# = [[D^T, -B^T], [-C^T, A^T]]  ( = -J X^T J ).
 *
 * An involutive anti-automorphism that commutes with the adjoint. Every
 * output entry is a signed copy of an input entry.
 */
ComplexMatrix dual(const ComplexMatrix& x);

/// J for n = 2N.
ComplexMatrix symplectic_form(std::size_t n);

/// How a Hermitian output is made self-dual.
enum class SelfDualProjection {
    Symmetrize, // (x + x#) / 2, idempotent, fixes self-dual inputs
    HalfDual,   // x# / 2, the literal alternative reading; kept for comparison
};

/// (x + x#) / 2. Bitwise self-dual, and bitwise Hermitian when x is.
ComplexMatrix selfdual_part(const ComplexMatrix& x);
ComplexMatrix selfdual_project(const ComplexMatrix& x, SelfDualProjection mode);

/// ||x - x#||_F.
double selfdual_defect(const ComplexMatrix& x);

/// X = q s q* with q unitary and symplectic (q# = q*).
struct PvlReduction {
    ComplexMatrix q;
    /// [[Hessenberg, B], [0, Hessenberg^T]] with an exactly zero lower-left
    /// block and exact zeros below the subdiagonal of the upper-left block.
    ComplexMatrix s;
};

/**
 * Paige / Van Loan style reduction of a self-dual matrix.
 *
 * Column by column: a reflector pair diag(P, conj(P)) compresses the
 * lower-left column, an SU(2) rotation in the (j+1, N+j+1) plane removes the
 * remaining entry, and a second reflector pair restores Hessenberg form in
 * the upper-left block. Each step is a symplectic unitary similarity, so
 * self-duality is preserved throughout.
 *
 * Throws DimensionError for odd n and DomainError when
 * ||x - x#||_F > tol::self_dual_input * ||x||_F.
 */
PvlReduction pvl_reduce(const ComplexMatrix& x);

/// X = q [[t, b], [0, t^T]] q*, q unitary symplectic, t upper triangular,
/// b skew-symmetric.
struct SymplecticSchurFactorization {
    ComplexMatrix q;
    ComplexMatrix t;
    ComplexMatrix b;

    /// The full 2N x 2N middle factor.
    ComplexMatrix middle() const;
};

/// pvl_reduce followed by a complex Schur factorization W T W* of the
/// Hessenberg block; q = q1 diag(W, conj(W)).
SymplecticSchurFactorization selfdual_schur(const ComplexMatrix& x);

/// Two Newton steps, structured Schur factorization, phases of t duplicated
/// onto both halves of the diagonal. Output is exactly Hermitian and exactly
/// self-dual.
UnitaryLogResult log_unitary_selfdual(const ComplexMatrix& u);

/// log_unitary_diagonalize followed by the chosen self-dual projection.
UnitaryLogResult log_unitary_diagonalize_selfdual(
    const ComplexMatrix& u, SelfDualProjection mode = SelfDualProjection::Symmetrize);

} // namespace unilog
