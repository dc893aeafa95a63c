#pragma once

// Reference computations used only by the tests. They are deliberately
// simple and independent of the library's factorization code.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "unilog/matrix.hpp"

namespace oracle {

using unilog::Complex;
using unilog::ComplexMatrix;

inline ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Complex s{};
            for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
            c(i, j) = s;
        }
    return c;
}

inline ComplexMatrix adjoint(const ComplexMatrix& a) {
    ComplexMatrix c(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(j, i) = std::conj(a(i, j));
    return c;
}

inline ComplexMatrix eye(std::size_t n) {
    ComplexMatrix c(n, n);
    for (std::size_t i = 0; i < n; ++i) c(i, i) = 1.0;
    return c;
}

inline double frob(const ComplexMatrix& a) {
    double s = 0.0;
    for (const auto& z : a.entries()) s += std::norm(z);
    return std::sqrt(s);
}

inline ComplexMatrix sub(ComplexMatrix a, const ComplexMatrix& b) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= b(i, j);
    return a;
}

// Largest singular value via the largest eigenvalue of the 2x2 Gram matrix,
// closed form.
inline double norm2x2(const ComplexMatrix& a) {
    const ComplexMatrix g = multiply(adjoint(a), a);
    const double p = g(0, 0).real(), q = g(1, 1).real();
    const double r = std::abs(g(0, 1));
    const double top = 0.5 * (p + q) + std::sqrt(0.25 * (p - q) * (p - q) + r * r);
    return std::sqrt(top);
}

// Characteristic polynomial det(zI - A) by Faddeev-LeVerrier, coefficients
// c[0..n] of z^n .. z^0 with c[0] = 1. Adequate for n <= 8.
inline std::vector<Complex> char_poly(const ComplexMatrix& a) {
    const std::size_t n = a.rows();
    std::vector<Complex> c(n + 1);
    c[0] = 1.0;
    ComplexMatrix m(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        // M_k = A M_{k-1} + c_{k-1} I, c_k = -tr(A M_k) / k
        ComplexMatrix next = multiply(a, m);
        for (std::size_t i = 0; i < n; ++i) next(i, i) += c[k - 1];
        m = next;
        const ComplexMatrix am = multiply(a, m);
        Complex tr{};
        for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
        c[k] = -tr / static_cast<double>(k);
    }
    return c;
}

inline Complex horner(const std::vector<Complex>& c, Complex z) {
    Complex v{};
    for (const auto& ck : c) v = v * z + ck;
    return v;
}

// Durand-Kerner simultaneous iteration for a monic polynomial.
inline std::vector<Complex> poly_roots(const std::vector<Complex>& c) {
    const std::size_t n = c.size() - 1;
    std::vector<Complex> z(n);
    double radius = 0.0;
    for (std::size_t k = 1; k <= n; ++k) radius = std::max(radius, std::abs(c[k]));
    radius = 1.0 + radius;
    for (std::size_t k = 0; k < n; ++k)
        z[k] = std::polar(radius, 0.4 + 2.0 * 3.141592653589793 * static_cast<double>(k) /
                                            static_cast<double>(n));
    for (int it = 0; it < 2000; ++it) {
        double change = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            Complex den = 1.0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) den *= z[i] - z[j];
            const Complex step = horner(c, z[i]) / den;
            z[i] -= step;
            change = std::max(change, std::abs(step));
        }
        if (change < 1e-15) break;
    }
    return z;
}

// Greedy matching distance between two multisets of equal size.
inline double multiset_distance(std::vector<Complex> a, std::vector<Complex> b) {
    double worst = 0.0;
    for (const auto& x : a) {
        std::size_t best = 0;
        double d = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < b.size(); ++j)
            if (std::abs(x - b[j]) < d) {
                d = std::abs(x - b[j]);
                best = j;
            }
        worst = std::max(worst, d);
        b.erase(b.begin() + static_cast<std::ptrdiff_t>(best));
    }
    return worst;
}

// Monic q with q*q = p, for monic p of even degree; coefficients solved top
// down from the leading terms. Returns the residual max |q^2 - p| too.
inline std::vector<Complex> poly_sqrt(const std::vector<Complex>& p, double* residual) {
    const std::size_t deg = (p.size() - 1) / 2;
    std::vector<Complex> q(deg + 1);
    q[0] = 1.0;
    for (std::size_t k = 1; k <= deg; ++k) {
        Complex s{};
        for (std::size_t j = 1; j < k; ++j) s += q[j] * q[k - j];
        q[k] = (p[k] - s) / 2.0;
    }
    double worst = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) {
        Complex s{};
        for (std::size_t j = 0; j <= deg; ++j)
            if (k >= j && k - j <= deg) s += q[j] * q[k - j];
        worst = std::max(worst, std::abs(s - p[k]));
    }
    if (residual) *residual = worst;
    return q;
}

// exp(A) from a truncated Taylor series after scaling by 2^-s, ||A 2^-s|| <= 1/8.
inline ComplexMatrix expm_taylor(const ComplexMatrix& a) {
    const std::size_t n = a.rows();
    double nrm = frob(a);
    int s = 0;
    while (nrm > 0.125) {
        nrm /= 2.0;
        ++s;
    }
    ComplexMatrix x = a;
    for (auto& z : x.entries()) z = std::ldexp(1.0, -s) * z;
    ComplexMatrix sum = eye(n), term = eye(n);
    for (int k = 1; k <= 30; ++k) {
        term = multiply(term, x);
        for (auto& z : term.entries()) z /= static_cast<double>(k);
        for (std::size_t i = 0; i < n * n; ++i) sum.entries()[i] += term.entries()[i];
    }
    for (int k = 0; k < s; ++k) sum = multiply(sum, sum);
    return sum;
}

// Independent random source for test inputs (std::normal_distribution is
// fine here; test inputs need not be bit-reproducible across platforms).
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : engine_(seed) {}

    double normal() { return dist_(engine_); }
    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(engine_);
    }
    Complex cnormal() { return Complex{normal(), normal()} / std::sqrt(2.0); }

    ComplexMatrix gaussian(std::size_t n) {
        ComplexMatrix g(n, n);
        for (auto& z : g.entries()) z = cnormal();
        return g;
    }

    // Unitary by modified Gram-Schmidt (twice) on a Gaussian sample.
    ComplexMatrix unitary(std::size_t n) {
        ComplexMatrix g = gaussian(n);
        for (int pass = 0; pass < 2; ++pass)
            for (std::size_t k = 0; k < n; ++k) {
                for (std::size_t j = 0; j < k; ++j) {
                    Complex d{};
                    for (std::size_t i = 0; i < n; ++i) d += std::conj(g(i, j)) * g(i, k);
                    for (std::size_t i = 0; i < n; ++i) g(i, k) -= d * g(i, j);
                }
                double s = 0.0;
                for (std::size_t i = 0; i < n; ++i) s += std::norm(g(i, k));
                s = std::sqrt(s);
                for (std::size_t i = 0; i < n; ++i) g(i, k) /= s;
            }
        return g;
    }

    // U = Q1 diag(sigma) Q2 with max |sigma^2 - 1| = delta exactly, so that
    // ||U*U - I|| = delta.
    ComplexMatrix near_unitary(std::size_t n, double delta) {
        std::vector<Complex> sigma(n);
        for (std::size_t k = 0; k < n; ++k) sigma[k] = std::sqrt(1.0 + uniform(-delta, delta));
        sigma[0] = std::sqrt(1.0 + (uniform(0.0, 1.0) < 0.5 ? -delta : delta));
        const ComplexMatrix q1 = unitary(n), q2 = unitary(n);
        ComplexMatrix d(n, n);
        for (std::size_t k = 0; k < n; ++k) d(k, k) = sigma[k];
        return multiply(multiply(q1, d), q2);
    }

private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> dist_;
};

} // namespace oracle
