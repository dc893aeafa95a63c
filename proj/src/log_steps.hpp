#pragma once

// Building blocks shared by the unstructured and self-dual logarithms.

#include <chrono>

#include "unilog/unitary_log.hpp"

namespace unilog::detail {

using Clock = std::chrono::steady_clock;

inline double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Fills deviation and backward error (not part of the timed region).
UnitaryLogResult finish(const ComplexMatrix& u, ComplexMatrix h, double seconds, Algorithm alg);

/// Eigenvector basis, phases of the eigenvalues, Hermitian part.
ComplexMatrix diagonalize_log(const ComplexMatrix& u);

/// Schur basis, phases of the triangular diagonal, Hermitian part.
ComplexMatrix schur_log(const ComplexMatrix& v);

} // namespace unilog::detail
