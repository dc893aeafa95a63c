#include "unilog/schur.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "kernels.hpp"
#include "unilog/errors.hpp"
#include "unilog/tolerances.hpp"

namespace unilog {

namespace {

using detail::abs1;

// Householder reduction to upper Hessenberg form, h <- P* h P, q <- q P.
void hessenberg_reduce(ComplexMatrix& h, ComplexMatrix* q) {
    const std::size_t n = h.rows();
    if (n < 3) return;
    std::vector<Complex> col;
    for (std::size_t k = 0; k + 2 < n; ++k) {
        col.resize(n - k - 1);
        for (std::size_t i = k + 1; i < n; ++i) col[i - k - 1] = h(i, k);
        const auto p = detail::make_reflector(col);
        if (p.is_identity()) continue;
        detail::apply_left(h, p, k + 1, k, n);
        detail::apply_right(h, p, k + 1, 0, n);
        if (q) detail::apply_right(*q, p, k + 1, 0, n);
        h(k + 1, k) = p.alpha;
        for (std::size_t i = k + 2; i < n; ++i) h(i, k) = 0.0;
    }
}

// Eigenvalue of [[a, b], [c, d]] closest to d.
Complex wilkinson_shift(Complex a, Complex b, Complex c, Complex d) {
    const Complex bc = b * c;
    if (bc == Complex{}) return d;
    const Complex p = 0.5 * (a - d);
    const Complex disc = std::sqrt(p * p + bc);
    const Complex e1 = p + disc, e2 = p - disc;
    const Complex e = std::abs(e1) >= std::abs(e2) ? e1 : e2;
    if (e == Complex{}) return d;
    return d - bc / e;
}

// Implicit single-shift QR on an upper Hessenberg h, reducing it to upper
// triangular form in place. Rotations are accumulated into q when given.
void hessenberg_qr(ComplexMatrix& h, ComplexMatrix* q) {
    const std::size_t n = h.rows();
    if (n < 2) return;

    const double hnorm = frobenius_norm(h);
    const double tiny = std::numeric_limits<double>::min() * static_cast<double>(n);
    const std::size_t max_sweeps = tol::max_qr_sweeps * n;
    std::size_t sweeps = 0;
    std::size_t stalled = 0;

    std::size_t hi = n - 1;
    while (hi > 0) {
        std::size_t l = hi;
        for (; l > 0; --l) {
            const double sub = std::abs(h(l, l - 1));
            double ref = abs1(h(l - 1, l - 1)) + abs1(h(l, l));
            if (ref == 0.0) ref = hnorm;
            if (sub <= tol::qr_deflation * ref || sub <= tiny) {
                h(l, l - 1) = 0.0;
                break;
            }
        }
        if (l == hi) {
            --hi;
            stalled = 0;
            continue;
        }
        if (++sweeps > max_sweeps)
            throw ConvergenceError("schur: QR iteration failed to deflate", sweeps);
        ++stalled;

        Complex shift;
        if (stalled % 10 == 0) {
            shift = h(hi, hi) + 0.75 * std::abs(h(hi, hi - 1).real()) +
                    Complex{0.0, 0.75 * std::abs(h(hi, hi - 1).imag())};
        } else {
            shift = wilkinson_shift(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi));
        }

        // Chase the bulge from row l down to hi.
        for (std::size_t k = l; k < hi; ++k) {
            detail::Rotation g;
            if (k == l) {
                g = detail::make_rotation(h(l, l) - shift, h(l + 1, l));
                detail::rotate_rows(h, g, k, k + 1, k, n);
            } else {
                g = detail::make_rotation(h(k, k - 1), h(k + 1, k - 1));
                detail::rotate_rows(h, g, k, k + 1, k - 1, n);
                h(k, k - 1) = g.r;
                h(k + 1, k - 1) = 0.0;
            }
            detail::rotate_cols(h, g, k, k + 1, 0, std::min(k + 3, hi + 1));
            if (q) detail::rotate_cols(*q, g, k, k + 1, 0, n);
        }
    }
}

SchurFactorization schur_impl(const ComplexMatrix& a, bool want_q) {
    require_square(a, "schur");
    if (!a.all_finite()) throw DomainError("schur: non-finite input");
    SchurFactorization f;
    f.t = a;
    if (want_q) f.q = ComplexMatrix::identity(a.rows());
    ComplexMatrix* q = want_q ? &f.q : nullptr;
    hessenberg_reduce(f.t, q);
    hessenberg_qr(f.t, q);
    return f;
}

} // namespace

SchurFactorization schur(const ComplexMatrix& a) { return schur_impl(a, true); }

std::vector<Complex> eigenvalues(const ComplexMatrix& a) { return schur_impl(a, false).t.diag(); }

EigenFactorization eig_via_schur(const ComplexMatrix& a) {
    const auto [q, t] = schur(a);
    const std::size_t n = t.rows();

    EigenFactorization f;
    std::vector<Complex> lambda = t.diag();
    for (std::size_t k = 1; k < n; ++k) {
        for (std::size_t j = 0; j < k; ++j) {
            const double gap = std::abs(lambda[k] - lambda[j]);
            const double ref = std::max(std::abs(lambda[k]), std::abs(lambda[j]));
            if (gap <= tol::eig_tie * ref) {
                lambda[k] += tol::eig_tie_perturbation * (1.0 + std::abs(lambda[k]));
                f.perturbed = true;
                j = static_cast<std::size_t>(-1); // recheck against every earlier entry
            }
        }
    }

    // Eigenvectors of t: x_k = 1, x_j = 0 for j > k, back-substitute upward.
    ComplexMatrix x(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        x(k, k) = 1.0;
        for (std::size_t jj = k; jj-- > 0;) {
            Complex s{};
            for (std::size_t l = jj + 1; l <= k; ++l) s += t(jj, l) * x(l, k);
            x(jj, k) = -s / (lambda[jj] - lambda[k]);
        }
    }

    f.w = q * x;
    for (std::size_t k = 0; k < n; ++k) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += std::norm(f.w(i, k));
        s = std::sqrt(s);
        if (s > 0.0 && std::isfinite(s))
            for (std::size_t i = 0; i < n; ++i) f.w(i, k) /= s;
    }
    f.eigenvalues = std::move(lambda);
    f.condition = f.w.all_finite() ? condition_1(f.w) : std::numeric_limits<double>::infinity();
    return f;
}

HermitianEigen hermitian_eigen(const ComplexMatrix& a) {
    require_square(a, "hermitian_eigen");
    const std::size_t n = a.rows();
    ComplexMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        h(i, i) = a(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex v = 0.5 * (a(i, j) + std::conj(a(j, i)));
            h(i, j) = v;
            h(j, i) = std::conj(v);
        }
    }
    const auto [q, t] = schur(h);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&t](std::size_t i, std::size_t j) { return t(i, i).real() < t(j, j).real(); });

    HermitianEigen e;
    e.values.resize(n);
    e.vectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        e.values[k] = t(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) e.vectors(i, k) = q(i, order[k]);
    }
    return e;
}

} // namespace unilog
