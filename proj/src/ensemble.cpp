#include "unilog/ensemble.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "kernels.hpp"
#include "unilog/errors.hpp"
#include "unilog/expm.hpp"
#include "unilog/selfdual.hpp"
#include "unilog/unitary_log.hpp"

namespace unilog {

namespace {

double random_phase(Rng& rng) { return std::numbers::pi * (2.0 * rng.uniform() - 1.0); }

Complex unit(double theta) { return std::polar(1.0, theta); }

// q diag(d) q*
ComplexMatrix conjugate_diagonal(const ComplexMatrix& q, const std::vector<Complex>& d) {
    ComplexMatrix scaled = q;
    for (std::size_t i = 0; i < q.rows(); ++i)
        for (std::size_t k = 0; k < q.cols(); ++k) scaled(i, k) *= d[k];
    return times_adjoint(scaled, q);
}

} // namespace

double EnsembleSpec::noise_scale() const {
    return noise_base * std::pow(static_cast<double>(n), noise_exponent);
}

void EnsembleSpec::validate() const {
    if (n < 4)
        throw DimensionError("ensemble: n = " + std::to_string(n) +
                             " is too small for the four-slot eigenvalue cluster");
    if (structured && n % 2 != 0)
        throw DimensionError("ensemble: self-dual ensembles need even n, got " +
                             std::to_string(n));
    if (!(noise_base >= 0.0) || !std::isfinite(noise_base))
        throw DomainError("ensemble: noise_base must be finite and nonnegative");
    if (!std::isfinite(noise_exponent)) throw DomainError("ensemble: noise_exponent must be finite");
    if (trials == 0) throw DomainError("ensemble: trials must be positive");
}

ComplexMatrix complex_gaussian(std::size_t n, Rng& rng) {
    ComplexMatrix g(n, n);
    for (auto& z : g.entries()) z = rng.complex_normal();
    return g;
}

ComplexMatrix uniform_noise(std::size_t n, Rng& rng) {
    ComplexMatrix g(n, n);
    for (auto& z : g.entries()) z = 2.0 * rng.uniform() - 1.0;
    return g;
}

ComplexMatrix haar_unitary(std::size_t n, Rng& rng) {
    if (n == 0) throw DimensionError("haar_unitary: n must be positive");
    ComplexMatrix a = complex_gaussian(n, rng);
    ComplexMatrix q = ComplexMatrix::identity(n);
    std::vector<Complex> col;
    for (std::size_t k = 0; k < n; ++k) {
        col.resize(n - k);
        for (std::size_t i = k; i < n; ++i) col[i - k] = a(i, k);
        const auto p = detail::make_reflector(col);
        detail::apply_left(a, p, k, k, n);
        detail::apply_right(q, p, k, 0, n);
        // Fold the phase of r_kk into column k so that R has a positive diagonal.
        const Complex r = p.is_identity() ? a(k, k) : p.alpha;
        const double ar = std::abs(r);
        if (ar > 0.0) {
            const Complex phase = r / ar;
            for (std::size_t i = 0; i < n; ++i) q(i, k) *= phase;
        }
    }
    return q;
}

ComplexMatrix adversarial_unitary(const EnsembleSpec& spec, Rng& rng) {
    if (spec.structured)
        throw DomainError("adversarial_unitary: spec is structured; use the self-dual generator");
    spec.validate();
    const std::size_t n = spec.n;
    const double pi = std::numbers::pi;

    const ComplexMatrix q = haar_unitary(n, rng);
    std::vector<Complex> d(n);
    d[0] = -1.0;
    d[1] = -1.0;
    d[2] = unit(pi - cluster_offset);
    d[3] = unit(-(pi - cluster_offset));
    for (std::size_t k = 4; k < n; ++k) d[k] = unit(random_phase(rng));

    ComplexMatrix u = conjugate_diagonal(q, d);
    const double s = spec.noise_scale();
    if (s > 0.0) {
        ComplexMatrix g = uniform_noise(n, rng);
        g *= s;
        u += g;
    }
    return u;
}

ComplexMatrix adversarial_selfdual_unitary(const EnsembleSpec& spec, Rng& rng) {
    if (!spec.structured)
        throw DomainError("adversarial_selfdual_unitary: spec is not structured");
    spec.validate();
    const std::size_t n = spec.n;
    const std::size_t half = n / 2;
    const double pi = std::numbers::pi;

    const ComplexMatrix h0 = selfdual_part(hermitian_part(complex_gaussian(n, rng)));
    ComplexMatrix ih0 = h0;
    ih0 *= Complex{0.0, 1.0};
    const ComplexMatrix q = selfdual_schur(selfdual_part(expm(ih0))).q;

    std::vector<Complex> d(half);
    d[0] = -1.0;
    d[1] = unit(pi - cluster_offset);
    if (half >= 3) d[2] = unit(-(pi - cluster_offset));
    for (std::size_t k = 3; k < half; ++k) d[k] = unit(random_phase(rng));
    std::vector<Complex> dd(n);
    for (std::size_t k = 0; k < half; ++k) dd[k] = dd[half + k] = d[k];

    ComplexMatrix u = conjugate_diagonal(q, dd);
    const double s = spec.noise_scale();
    if (s > 0.0) {
        ComplexMatrix g = uniform_noise(n, rng);
        g *= s;
        u += selfdual_part(g);
    }
    return selfdual_part(u);
}

ComplexMatrix ensemble_sample(const EnsembleSpec& spec, Rng& rng) {
    return spec.structured ? adversarial_selfdual_unitary(spec, rng) : adversarial_unitary(spec, rng);
}

} // namespace unilog
