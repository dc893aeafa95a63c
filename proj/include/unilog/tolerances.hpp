#pragma once

#include <cstddef>

namespace unilog::tol {

// Schur factorization contract.
inline constexpr double qr_deflation = 1e-15;
inline constexpr double schur_residual = 1e-13;   // relative to ||A||_F
inline constexpr double schur_unitarity = 1e-14;  // times n
inline constexpr double schur_triangular = 1e-13; // relative, normal inputs only
inline constexpr std::size_t max_qr_sweeps = 30;  // times n

inline constexpr double op_norm = 1e-10;
inline constexpr std::size_t op_norm_max_iterations = 5000;

inline constexpr double expm = 1e-13;
inline constexpr double expm_max_norm = 700.0;

// Pivots (LU) and eigenvalues (U*U) below this fraction of the largest
// magnitude are treated as zero.
inline constexpr double singularity = 1e-15;

inline constexpr double polar = 1e-12;

// eig_via_schur: diagonal entries closer than this (relative) are a tie.
inline constexpr double eig_tie = 1e-300;
inline constexpr double eig_tie_perturbation = 1e-14;

// principal_log_diagonal accepts | |d| - 1 | up to this.
inline constexpr double unimodular = 1e-8;

// pvl_reduce accepts ||x - x#||_F up to this fraction of ||x||_F.
inline constexpr double self_dual_input = 1e-10;

} // namespace unilog::tol
