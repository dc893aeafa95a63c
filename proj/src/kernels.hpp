#pragma once

// Elementary unitary transforms shared by the factorization routines.

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "unilog/matrix.hpp"

namespace unilog::detail {

/// Hermitian reflector P = I - beta v v* with P x = alpha e1.
struct Reflector {
    std::vector<Complex> v;
    double beta = 0.0;
    Complex alpha;

    bool is_identity() const noexcept { return beta == 0.0; }
};

inline double norm2(std::span<const Complex> x) {
    double scale = 0.0;
    for (const auto& z : x) scale = std::max(scale, std::max(std::abs(z.real()), std::abs(z.imag())));
    if (scale == 0.0) return 0.0;
    double sum = 0.0;
    for (const auto& z : x) {
        const double re = z.real() / scale, im = z.imag() / scale;
        sum += re * re + im * im;
    }
    return scale * std::sqrt(sum);
}

/// Identity when the tail of x is already zero.
inline Reflector make_reflector(std::span<const Complex> x) {
    Reflector r;
    r.v.assign(x.begin(), x.end());
    r.alpha = x.empty() ? Complex{} : x[0];
    if (x.size() <= 1) return r;
    if (norm2(x.subspan(1)) == 0.0) return r;

    const double nrm = norm2(x);
    const double a0 = std::abs(x[0]);
    const Complex phase = a0 == 0.0 ? Complex{1.0, 0.0} : x[0] / a0;
    r.v[0] += phase * nrm;
    r.alpha = -phase * nrm;
    r.beta = 1.0 / (nrm * (nrm + a0));
    return r;
}

/// m(r0 : r0+len, c_begin : c_end) <- P m(...), len = v.size().
inline void apply_left(ComplexMatrix& m, const Reflector& p, std::size_t r0, std::size_t c_begin,
                       std::size_t c_end) {
    if (p.is_identity() || c_begin >= c_end) return;
    const std::size_t len = p.v.size();
    std::vector<Complex> w(c_end - c_begin, Complex{});
    for (std::size_t i = 0; i < len; ++i) {
        const Complex vi = std::conj(p.v[i]);
        const Complex* row = &m(r0 + i, c_begin);
        for (std::size_t j = 0; j < w.size(); ++j) w[j] += vi * row[j];
    }
    for (std::size_t i = 0; i < len; ++i) {
        const Complex vi = p.beta * p.v[i];
        Complex* row = &m(r0 + i, c_begin);
        for (std::size_t j = 0; j < w.size(); ++j) row[j] -= vi * w[j];
    }
}

/// m(r_begin : r_end, c0 : c0+len) <- m(...) P.
inline void apply_right(ComplexMatrix& m, const Reflector& p, std::size_t c0, std::size_t r_begin,
                        std::size_t r_end) {
    if (p.is_identity()) return;
    const std::size_t len = p.v.size();
    for (std::size_t i = r_begin; i < r_end; ++i) {
        Complex* row = &m(i, c0);
        Complex s{};
        for (std::size_t j = 0; j < len; ++j) s += row[j] * p.v[j];
        s *= p.beta;
        for (std::size_t j = 0; j < len; ++j) row[j] -= s * std::conj(p.v[j]);
    }
}

/// Complex Givens rotation G = [[c, s], [-conj(s), c]], c real, chosen so
/// that G [x; y] = [r; 0].
struct Rotation {
    double c = 1.0;
    Complex s{};
    Complex r{};
};

inline Rotation make_rotation(Complex x, Complex y) {
    Rotation g;
    const double ax = std::abs(x), ay = std::abs(y);
    if (ay == 0.0) {
        g.r = x;
        return g;
    }
    if (ax == 0.0) {
        g.c = 0.0;
        g.s = std::conj(y) / ay;
        g.r = ay;
        return g;
    }
    const double rho = std::hypot(ax, ay);
    const Complex phase = x / ax;
    g.c = ax / rho;
    g.s = phase * std::conj(y) / rho;
    g.r = phase * rho;
    return g;
}

/// Rows p, q of m over columns [c_begin, c_end) <- G [row p; row q].
inline void rotate_rows(ComplexMatrix& m, const Rotation& g, std::size_t p, std::size_t q,
                        std::size_t c_begin, std::size_t c_end) {
    Complex* rp = &m(p, 0);
    Complex* rq = &m(q, 0);
    const Complex sc = std::conj(g.s);
    for (std::size_t j = c_begin; j < c_end; ++j) {
        const Complex a = rp[j], b = rq[j];
        rp[j] = g.c * a + g.s * b;
        rq[j] = g.c * b - sc * a;
    }
}

/// Columns p, q of m over rows [r_begin, r_end) <- [col p, col q] G*.
inline void rotate_cols(ComplexMatrix& m, const Rotation& g, std::size_t p, std::size_t q,
                        std::size_t r_begin, std::size_t r_end) {
    const Complex sc = std::conj(g.s);
    for (std::size_t i = r_begin; i < r_end; ++i) {
        Complex* row = &m(i, 0);
        const Complex a = row[p], b = row[q];
        row[p] = g.c * a + sc * b;
        row[q] = g.c * b - g.s * a;
    }
}

inline double abs1(Complex z) noexcept { return std::abs(z.real()) + std::abs(z.imag()); }

} // namespace unilog::detail
