#include "unilog/selfdual.hpp"

#include <cmath>
#include <string>

#include "kernels.hpp"
#include "log_steps.hpp"
#include "unilog/errors.hpp"
#include "unilog/polar.hpp"
#include "unilog/schur.hpp"
#include "unilog/tolerances.hpp"

namespace unilog {

namespace {

std::size_t half_dimension(const ComplexMatrix& x, const char* what) {
    require_square(x, what);
    if (x.rows() % 2 != 0)
        throw DimensionError(std::string(what) + ": dimension " + std::to_string(x.rows()) +
                             " is odd");
    return x.rows() / 2;
}

// Reflector pair diag(P, conj(P)) with P acting on rows/columns offset..,
// applied as a similarity to s and accumulated into q. The pair is Hermitian,
// unitary and symplectic.
void apply_reflector_pair(ComplexMatrix& s, ComplexMatrix& q, const detail::Reflector& top,
                          std::size_t offset, std::size_t half) {
    if (top.is_identity()) return;
    detail::Reflector bottom = top;
    for (auto& z : bottom.v) z = std::conj(z);
    bottom.alpha = std::conj(top.alpha);

    const std::size_t n = s.rows();
    detail::apply_left(s, top, offset, 0, n);
    detail::apply_left(s, bottom, half + offset, 0, n);
    detail::apply_right(s, top, offset, 0, n);
    detail::apply_right(s, bottom, half + offset, 0, n);
    detail::apply_right(q, top, offset, 0, n);
    detail::apply_right(q, bottom, half + offset, 0, n);
}

// G = [[a, b], [-conj(b), conj(a)]] in the (p, p+N) plane; s <- G* s G, q <- q G.
void apply_symplectic_rotation(ComplexMatrix& s, ComplexMatrix& q, Complex a, Complex b,
                               std::size_t p, std::size_t pp) {
    const std::size_t n = s.rows();
    const Complex ac = std::conj(a), bc = std::conj(b);
    Complex* rp = &s(p, 0);
    Complex* rq = &s(pp, 0);
    for (std::size_t j = 0; j < n; ++j) {
        const Complex x = rp[j], y = rq[j];
        rp[j] = ac * x - b * y;
        rq[j] = bc * x + a * y;
    }
    auto right = [&](ComplexMatrix& m) {
        for (std::size_t i = 0; i < n; ++i) {
            Complex* row = &m(i, 0);
            const Complex x = row[p], y = row[pp];
            row[p] = a * x - bc * y;
            row[pp] = b * x + ac * y;
        }
    };
    right(s);
    right(q);
}

} // namespace

ComplexMatrix dual(const ComplexMatrix& x) {
    const std::size_t half = half_dimension(x, "dual");
    const std::size_t n = x.rows();
    ComplexMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const bool i_top = i < half;
        const std::size_t ii = i_top ? i + half : i - half;
        for (std::size_t j = 0; j < n; ++j) {
            const bool j_top = j < half;
            const std::size_t jj = j_top ? j + half : j - half;
            const Complex v = x(jj, ii);
            d(i, j) = i_top == j_top ? v : -v;
        }
    }
    return d;
}

ComplexMatrix symplectic_form(std::size_t n) {
    if (n % 2 != 0) throw DimensionError("symplectic_form: odd dimension");
    const std::size_t half = n / 2;
    ComplexMatrix j(n, n);
    for (std::size_t i = 0; i < half; ++i) {
        j(i, half + i) = 1.0;
        j(half + i, i) = -1.0;
    }
    return j;
}

ComplexMatrix selfdual_part(const ComplexMatrix& x) {
    ComplexMatrix d = dual(x);
    const auto xs = x.entries();
    auto ds = d.entries();
    for (std::size_t k = 0; k < ds.size(); ++k) ds[k] = 0.5 * xs[k] + 0.5 * ds[k];
    return d;
}

ComplexMatrix selfdual_project(const ComplexMatrix& x, SelfDualProjection mode) {
    if (mode == SelfDualProjection::Symmetrize) return selfdual_part(x);
    ComplexMatrix d = dual(x);
    d *= 0.5;
    return d;
}

double selfdual_defect(const ComplexMatrix& x) { return frobenius_norm(x - dual(x)); }

PvlReduction pvl_reduce(const ComplexMatrix& x) {
    const std::size_t half = half_dimension(x, "pvl_reduce");
    const std::size_t n = x.rows();
    const double defect = selfdual_defect(x);
    if (defect > tol::self_dual_input * frobenius_norm(x))
        throw DomainError("pvl_reduce: input is not self-dual (||x - x#||_F = " +
                          std::to_string(defect) + ")");

    PvlReduction r;
    r.s = selfdual_part(x);
    r.q = ComplexMatrix::identity(n);
    ComplexMatrix& s = r.s;
    std::vector<Complex> col;

    for (std::size_t j = 0; j + 1 < half; ++j) {
        // Compress lower-left column j (rows j+1..N-1) onto its first entry.
        // The reflector on the lower rows is conj(P), so P is built from conj(v).
        if (half - j - 1 >= 2) {
            col.assign(half - j - 1, Complex{});
            for (std::size_t i = j + 1; i < half; ++i) col[i - j - 1] = s(half + i, j);
            auto lower = detail::make_reflector(col);
            if (!lower.is_identity()) {
                detail::Reflector upper = lower;
                for (auto& z : upper.v) z = std::conj(z);
                apply_reflector_pair(s, r.q, upper, j + 1, half);
                s(half + j + 1, j) = lower.alpha;
                for (std::size_t i = j + 2; i < half; ++i) s(half + i, j) = 0.0;
            }
        }

        // Rotate the remaining lower-left entry into the upper-left block.
        const std::size_t p = j + 1, pp = half + j + 1;
        const Complex top = s(p, j), bottom = s(pp, j);
        if (bottom != Complex{}) {
            const double rho = std::hypot(std::abs(top), std::abs(bottom));
            apply_symplectic_rotation(s, r.q, top / rho, -std::conj(bottom) / rho, p, pp);
            s(p, j) = rho;
            s(pp, j) = 0.0;
        }

        // Restore Hessenberg form in upper-left column j.
        if (half >= j + 3) {
            col.assign(half - j - 1, Complex{});
            for (std::size_t i = j + 1; i < half; ++i) col[i - j - 1] = s(i, j);
            const auto upper = detail::make_reflector(col);
            if (!upper.is_identity()) {
                apply_reflector_pair(s, r.q, upper, j + 1, half);
                s(j + 1, j) = upper.alpha;
                for (std::size_t i = j + 2; i < half; ++i) s(i, j) = 0.0;
            }
        }
    }

    for (std::size_t i = 0; i < half; ++i) {
        for (std::size_t j = 0; j < half; ++j) s(half + i, j) = 0.0;
        for (std::size_t j = 0; j + 1 < i; ++j) s(i, j) = 0.0;
    }
    return r;
}

ComplexMatrix SymplecticSchurFactorization::middle() const {
    const std::size_t half = t.rows();
    ComplexMatrix m(2 * half, 2 * half);
    m.set_block(0, 0, t);
    m.set_block(0, half, b);
    m.set_block(half, half, t.transpose());
    return m;
}

SymplecticSchurFactorization selfdual_schur(const ComplexMatrix& x) {
    const std::size_t half = half_dimension(x, "selfdual_schur");
    const auto [q1, s1] = pvl_reduce(x);
    const auto [w, t] = schur(s1.block(0, 0, half, half));

    ComplexMatrix z(2 * half, 2 * half);
    z.set_block(0, 0, w);
    z.set_block(half, half, w.conjugate());

    SymplecticSchurFactorization f;
    f.q = q1 * z;
    f.t = t;
    const ComplexMatrix b = adjoint_times(w, s1.block(0, half, half, half)) * w.conjugate();
    f.b = ComplexMatrix(half, half);
    for (std::size_t i = 0; i < half; ++i)
        for (std::size_t j = 0; j < half; ++j) f.b(i, j) = 0.5 * b(i, j) - 0.5 * b(j, i);
    return f;
}

UnitaryLogResult log_unitary_selfdual(const ComplexMatrix& u) {
    const std::size_t half = half_dimension(u, "log_unitary_selfdual");
    const double defect = selfdual_defect(u);
    if (defect > tol::self_dual_input * frobenius_norm(u))
        throw DomainError("log_unitary_selfdual: input is not self-dual (||u - u#||_F = " +
                          std::to_string(defect) + ")");

    const auto start = detail::Clock::now();
    const ComplexMatrix v = newton_two_step(u);
    const auto f = selfdual_schur(v);
    const ComplexMatrix d_half = phase_normalize_diagonal(f.t);
    ComplexMatrix d(2 * half, 2 * half);
    for (std::size_t j = 0; j < half; ++j) {
        d(j, j) = d_half(j, j);
        d(half + j, half + j) = d_half(j, j);
    }
    ComplexMatrix h = hermitian_log(f.q, principal_log_diagonal(d), f.q.adjoint());
    h = selfdual_part(h);
    return detail::finish(u, std::move(h), detail::seconds_since(start), Algorithm::SelfDual);
}

UnitaryLogResult log_unitary_diagonalize_selfdual(const ComplexMatrix& u, SelfDualProjection mode) {
    half_dimension(u, "log_unitary_diagonalize_selfdual");
    const auto start = detail::Clock::now();
    ComplexMatrix h = selfdual_project(detail::diagonalize_log(u), mode);
    return detail::finish(u, std::move(h), detail::seconds_since(start),
                          Algorithm::DiagonalizeSelfDual);
}

} // namespace unilog
