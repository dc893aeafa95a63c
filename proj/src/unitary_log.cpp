#include "unilog/unitary_log.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <string>

#include "unilog/errors.hpp"
#include "unilog/expm.hpp"
#include "unilog/polar.hpp"
#include "unilog/selfdual.hpp"
#include "unilog/tolerances.hpp"

#include "log_steps.hpp"

namespace unilog {

namespace {

using detail::Clock;
using detail::seconds_since;

void require_diagonal(const ComplexMatrix& d, const char* what) {
    require_square(d, what);
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j)
            if (i != j && d(i, j) != Complex{})
                throw DomainError(std::string(what) + ": input is not diagonal", i);
}

} // namespace

namespace detail {

UnitaryLogResult finish(const ComplexMatrix& u, ComplexMatrix h, double seconds, Algorithm alg) {
    UnitaryLogResult r;
    r.h = std::move(h);
    r.wall_time = seconds;
    r.algorithm = alg;
    r.deviation = deviation_from_unitary(u);
    r.backward_error = backward_error(u, r.h);
    return r;
}

ComplexMatrix schur_log(const ComplexMatrix& v) {
    const auto [q, t] = schur(v);
    const ComplexMatrix log_d = principal_log_diagonal(phase_normalize_diagonal(t));
    return hermitian_log(q, log_d, q.adjoint());
}

ComplexMatrix diagonalize_log(const ComplexMatrix& u) {
    const auto eig = eig_via_schur(u);
    const ComplexMatrix log_d =
        principal_log_diagonal(phase_normalize_diagonal(ComplexMatrix::diagonal(eig.eigenvalues)));
    ComplexMatrix w_inv;
    try {
        w_inv = inverse(eig.w);
    } catch (const SingularMatrixError& e) {
        throw SingularMatrixError(std::string("eigenvector matrix is numerically singular "
                                              "(condition ") +
                                      std::to_string(eig.condition) + ")",
                                  e.index(), eig.condition);
    }
    return hermitian_log(eig.w, log_d, w_inv);
}

} // namespace detail

std::string_view algorithm_label(Algorithm alg) {
    switch (alg) {
    case Algorithm::Diagonalize: return "1";
    case Algorithm::Schur: return "3";
    case Algorithm::PolarSchur: return "4";
    case Algorithm::NewtonSchur: return "5";
    case Algorithm::SelfDual: return "6";
    case Algorithm::DiagonalizeSelfDual: return "1A";
    }
    return "?";
}

Algorithm parse_algorithm(std::string_view label) {
    for (Algorithm a : {Algorithm::Diagonalize, Algorithm::Schur, Algorithm::PolarSchur,
                        Algorithm::NewtonSchur, Algorithm::SelfDual,
                        Algorithm::DiagonalizeSelfDual}) {
        if (algorithm_label(a) == label) return a;
    }
    throw DomainError("unknown algorithm '" + std::string(label) + "'");
}

double deviation_from_unitary(const ComplexMatrix& u) {
    require_square(u, "deviation_from_unitary");
    ComplexMatrix m = adjoint_times(u, u);
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) -= 1.0;
    return operator_norm(m);
}

ComplexMatrix phase_normalize_diagonal(const ComplexMatrix& t) {
    require_square(t, "phase_normalize_diagonal");
    const std::size_t n = t.rows();
    ComplexMatrix d(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const double r = std::abs(t(j, j));
        if (r == 0.0)
            throw DomainError("phase_normalize_diagonal: zero diagonal entry at index " +
                                  std::to_string(j),
                              j);
        d(j, j) = t(j, j) / r;
    }
    return d;
}

ComplexMatrix principal_log_diagonal(const ComplexMatrix& d) {
    require_diagonal(d, "principal_log_diagonal");
    const std::size_t n = d.rows();
    ComplexMatrix l(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const Complex z = d(j, j);
        if (std::abs(std::abs(z) - 1.0) > tol::unimodular)
            throw DomainError("principal_log_diagonal: entry " + std::to_string(j) +
                                  " is not unimodular",
                              j);
        // A real negative entry may carry a -0.0 imaginary part; it still
        // belongs on the +pi side of the cut. Nonzero imaginary parts keep
        // the sign atan2 gives them, even when the phase rounds to -pi.
        const double theta = z.imag() == 0.0 && z.real() < 0.0 ? std::numbers::pi : std::arg(z);
        l(j, j) = Complex{0.0, theta};
    }
    return l;
}

ComplexMatrix hermitian_part(const ComplexMatrix& h0) {
    require_square(h0, "hermitian_part");
    const std::size_t n = h0.rows();
    ComplexMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        h(i, i) = Complex{h0(i, i).real(), 0.0};
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex v = 0.5 * h0(i, j) + 0.5 * std::conj(h0(j, i));
            h(i, j) = v;
            h(j, i) = std::conj(v);
        }
    }
    return h;
}

ComplexMatrix hermitian_log(const ComplexMatrix& basis, const ComplexMatrix& log_d,
                            const ComplexMatrix& basis_inverse) {
    require_diagonal(log_d, "hermitian_log");
    const std::size_t n = basis.rows();
    // i * basis * log_d: scale column k by i * log_d(k,k).
    ComplexMatrix scaled = basis;
    for (std::size_t k = 0; k < n; ++k) {
        const Complex lk = log_d(k, k);
        const Complex ilk{-lk.imag(), lk.real()};
        for (std::size_t i = 0; i < n; ++i) scaled(i, k) *= ilk;
    }
    return hermitian_part(scaled * basis_inverse);
}

double backward_error(const ComplexMatrix& u, const ComplexMatrix& h) {
    require_square(u, "backward_error");
    ComplexMatrix minus_ih = h;
    for (auto& z : minus_ih.entries()) z = Complex{z.imag(), -z.real()};
    return operator_norm(expm(minus_ih) - u);
}

UnitaryLogResult log_unitary_diagonalize(const ComplexMatrix& u) {
    require_square(u, "log_unitary_diagonalize");
    const auto start = Clock::now();
    ComplexMatrix h = detail::diagonalize_log(u);
    return detail::finish(u, std::move(h), seconds_since(start), Algorithm::Diagonalize);
}

UnitaryLogResult log_unitary_schur(const ComplexMatrix& u) {
    require_square(u, "log_unitary_schur");
    const auto start = Clock::now();
    ComplexMatrix h = detail::schur_log(u);
    return detail::finish(u, std::move(h), seconds_since(start), Algorithm::Schur);
}

UnitaryLogResult log_unitary_polar_schur(const ComplexMatrix& u) {
    require_square(u, "log_unitary_polar_schur");
    const auto start = Clock::now();
    ComplexMatrix h = detail::schur_log(polar_unitary(u));
    return detail::finish(u, std::move(h), seconds_since(start), Algorithm::PolarSchur);
}

UnitaryLogResult log_unitary_newton_schur(const ComplexMatrix& u) {
    require_square(u, "log_unitary_newton_schur");
    const auto start = Clock::now();
    ComplexMatrix h = detail::schur_log(newton_two_step(u));
    return detail::finish(u, std::move(h), seconds_since(start), Algorithm::NewtonSchur);
}

UnitaryLogResult log_unitary(const ComplexMatrix& u, Algorithm alg) {
    switch (alg) {
    case Algorithm::Diagonalize: return log_unitary_diagonalize(u);
    case Algorithm::Schur: return log_unitary_schur(u);
    case Algorithm::PolarSchur: return log_unitary_polar_schur(u);
    case Algorithm::NewtonSchur: return log_unitary_newton_schur(u);
    case Algorithm::SelfDual: return log_unitary_selfdual(u);
    case Algorithm::DiagonalizeSelfDual: return log_unitary_diagonalize_selfdual(u);
    }
    throw DomainError("log_unitary: unknown algorithm");
}

double schur_phase_bound(std::size_t n, double deviation) {
    const double k = std::sqrt(2.0 * (static_cast<double>(n) - 1.0)) + 1.0;
    return k * std::sqrt(deviation);
}

double one_step_schur_bound(std::size_t n, double deviation) {
    return (std::sqrt(2.0 * (static_cast<double>(n) - 1.0)) + 2.0) * deviation;
}

double two_step_schur_bound(std::size_t n, double deviation) {
    return 0.7 * std::sqrt(static_cast<double>(n)) * deviation * deviation + 0.7 * deviation;
}

DepartureEstimate departure_from_normality(const ComplexMatrix& t) {
    require_square(t, "departure_from_normality");
    const std::size_t n = t.rows();
    const double nd = static_cast<double>(n);

    ComplexMatrix off = t;
    for (std::size_t i = 0; i < n; ++i) off(i, i) = 0.0;

    const ComplexMatrix tt = adjoint_times(t, t);
    ComplexMatrix dev = tt;
    for (std::size_t i = 0; i < n; ++i) dev(i, i) -= 1.0;
    const ComplexMatrix commutator = tt - times_adjoint(t, t);

    DepartureEstimate e;
    e.measured = frobenius_norm(off);
    e.unitary = std::sqrt(2.0 * (nd - 1.0)) * std::sqrt(frobenius_norm(dev));
    e.henrici = std::sqrt((nd * nd * nd - nd) / 12.0) * std::sqrt(frobenius_norm(commutator));
    return e;
}

} // namespace unilog
