#pragma once

#include <cstddef>
#include <cstdint>

#include "unilog/matrix.hpp"
#include "unilog/random.hpp"

namespace unilog {

/// One family of test matrices: size, noise law and seed.
struct EnsembleSpec {
    std::size_t n = 8;
    double noise_base = 1e-15;
    double noise_exponent = -0.56;
    std::size_t trials = 30;
    std::uint64_t seed = 1;
    bool structured = false; // self-dual ensemble

    /// noise_base * n^noise_exponent.
    double noise_scale() const;
    /// Throws DimensionError/DomainError for unusable parameters.
    void validate() const;
};

/// Phase offset of the two cluster eigenvalues straddling -1.
inline constexpr double cluster_offset = 1e-8;

/// n x n matrix of independent circular complex normals, E|g|^2 = 1.
ComplexMatrix complex_gaussian(std::size_t n, Rng& rng);

/// n x n real matrix with independent entries uniform on [-1, 1]. This is
/// the additive noise of both adversarial ensembles.
ComplexMatrix uniform_noise(std::size_t n, Rng& rng);

/// Haar-distributed unitary: Householder QR of a complex Gaussian sample with
/// the phases of diag(R) folded into Q.
ComplexMatrix haar_unitary(std::size_t n, Rng& rng);

/**
 * Q D0 Q* + noise_scale * G with Q Haar, G = uniform_noise and D0 diagonal
 * unitary holding {-1, -1, e^{i(pi - 1e-8)}, e^{-i(pi - 1e-8)}} plus uniform
 * random phases. Requires n >= 4 and an unstructured spec.
 */
ComplexMatrix adversarial_unitary(const EnsembleSpec& spec, Rng& rng);

/**
 * Exactly self-dual near-unitary matrix with a Kramers-doubled eigenvalue
 * cluster at -1 (at least four eigenvalues near -1).
 *
 * A random self-dual Hermitian H0 gives the self-dual unitary e^{iH0}; its
 * structured Schur basis q is a random symplectic unitary, which conjugates
 * diag(d, d) with d holding the cluster phases. Self-dual uniform noise is
 * added and the sum projected with selfdual_part. Requires even n >= 4.
 */
ComplexMatrix adversarial_selfdual_unitary(const EnsembleSpec& spec, Rng& rng);

/// Draws the matrix for `spec`, dispatching on spec.structured.
ComplexMatrix ensemble_sample(const EnsembleSpec& spec, Rng& rng);

} // namespace unilog
