#include "unilog/polar.hpp"

#include <cmath>
#include <string>

#include "unilog/errors.hpp"
#include "unilog/schur.hpp"
#include "unilog/tolerances.hpp"

namespace unilog {

ComplexMatrix newton_step(const ComplexMatrix& u) {
    require_square(u, "newton_step");
    ComplexMatrix v = inverse(u).adjoint();
    v += u;
    v *= 0.5;
    return v;
}

ComplexMatrix newton_two_step(const ComplexMatrix& u) { return newton_step(newton_step(u)); }

ComplexMatrix polar_unitary(const ComplexMatrix& u) {
    require_square(u, "polar_unitary");
    const std::size_t n = u.rows();
    if (n == 0) return u;

    const auto eig = hermitian_eigen(adjoint_times(u, u));
    const double top = eig.values.back();
    for (std::size_t k = 0; k < n; ++k) {
        if (!(eig.values[k] > tol::singularity * top))
            throw DomainError("polar_unitary: eigenvalue " + std::to_string(eig.values[k]) +
                                  " of U*U is numerically zero; matrix too far from unitary",
                              k);
    }

    // (U*U)^{-1/2} = W diag(lambda^{-1/2}) W*
    ComplexMatrix scaled = eig.vectors;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) scaled(i, k) /= std::sqrt(eig.values[k]);
    return u * times_adjoint(scaled, eig.vectors);
}

} // namespace unilog
