#pragma once

#include "unilog/matrix.hpp"

namespace unilog {

/// Matrix exponential by scaling and squaring with the [6/6] Pade
/// approximant; the scaled argument has norm at most 1/2.
///
/// Throws DomainError when the norm estimate exceeds tol::expm_max_norm.
ComplexMatrix expm(const ComplexMatrix& a);

} // namespace unilog
