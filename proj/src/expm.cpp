#include "unilog/expm.hpp"

#include <array>
#include <cmath>
#include <string>

#include "unilog/errors.hpp"
#include "unilog/tolerances.hpp"

namespace unilog {

namespace {

// [6/6] Pade coefficients c_k = (12-k)! 6! / (12! k! (6-k)!).
constexpr std::array<double, 7> pade6 = {
    1.0, 1.0 / 2.0, 5.0 / 44.0, 1.0 / 66.0, 1.0 / 792.0, 1.0 / 15840.0, 1.0 / 665280.0,
};

void add_scaled_identity(ComplexMatrix& m, double s) {
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) += s;
}

} // namespace

ComplexMatrix expm(const ComplexMatrix& a) {
    require_square(a, "expm");
    const std::size_t n = a.rows();
    if (n == 0) return a;

    // sqrt(||A||_1 ||A||_inf) bounds the spectral norm.
    const double norm = std::sqrt(norm_1(a) * norm_inf(a));
    if (!std::isfinite(norm) || norm > tol::expm_max_norm)
        throw DomainError("expm: norm estimate " + std::to_string(norm) + " exceeds " +
                          std::to_string(tol::expm_max_norm));

    int squarings = 0;
    if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    ComplexMatrix x = a;
    x *= std::ldexp(1.0, -squarings);

    const ComplexMatrix x2 = x * x;
    const ComplexMatrix x4 = x2 * x2;
    const ComplexMatrix x6 = x4 * x2;

    // Odd part u = x (c1 I + c3 x^2 + c5 x^4), even part v = c0 I + c2 x^2 + c4 x^4 + c6 x^6.
    ComplexMatrix odd = pade6[3] * x2 + pade6[5] * x4;
    add_scaled_identity(odd, pade6[1]);
    odd = x * odd;
    ComplexMatrix even = pade6[2] * x2 + pade6[4] * x4 + pade6[6] * x6;
    add_scaled_identity(even, pade6[0]);

    ComplexMatrix r = solve(even - odd, even + odd);
    for (int s = 0; s < squarings; ++s) r = r * r;
    return r;
}

} // namespace unilog
