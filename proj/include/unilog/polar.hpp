#pragma once

#include "unilog/matrix.hpp"

namespace unilog {

/// One Newton step toward the unitary polar factor: (U + (U^{-1})^*) / 2.
///
/// For ||U*U - I|| <= 3/4 the result V satisfies ||V*V - I|| <= ||U*U - I||^2
/// and ||U - V|| <= ||U*U - I||.
ComplexMatrix newton_step(const ComplexMatrix& u);

/// Exactly two Newton steps. For ||U*U - I|| = d <= 3/4:
/// ||V*V - I|| <= (4/25) d^4 and ||U - V|| <= (7/10) d.
ComplexMatrix newton_two_step(const ComplexMatrix& u);

/// U (U*U)^{-1/2} through the spectral decomposition of U*U.
///
/// Throws DomainError when an eigenvalue of U*U is below tol::singularity
/// relative to the largest one.
ComplexMatrix polar_unitary(const ComplexMatrix& u);

} // namespace unilog
