#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracle.hpp"
#include "unilog/errors.hpp"
#include "unilog/schur.hpp"
#include "unilog/selfdual.hpp"

using namespace unilog;

namespace {

// -J X^T J by explicit products with J.
ComplexMatrix dual_by_products(const ComplexMatrix& x) {
    const auto j = symplectic_form(x.rows());
    auto m = oracle::multiply(oracle::multiply(j, x.transpose()), j);
    return -m;
}

bool is_exactly_selfdual(const ComplexMatrix& x) { return dual(x) == x; }

ComplexMatrix random_selfdual(oracle::Sampler& s, std::size_t n) { return selfdual_part(s.gaussian(n)); }

} // namespace

TEST_SUITE("selfdual") {

TEST_CASE("dual block formula") {
    const ComplexMatrix x{{1.0, 2.0}, {3.0, 4.0}};
    CHECK(dual(x) == (ComplexMatrix{{4.0, -2.0}, {-3.0, 1.0}}));
    CHECK(dual(ComplexMatrix::identity(6)) == ComplexMatrix::identity(6));
    CHECK(dual(symplectic_form(6)) == -symplectic_form(6));
    CHECK_THROWS_AS(dual(ComplexMatrix::identity(3)), DimensionError);
}

TEST_CASE("dual axioms on random pairs") {
    oracle::Sampler s(151);
    for (std::size_t n : {2u, 4u, 10u}) {
        for (int k = 0; k < 10; ++k) {
            const auto x = s.gaussian(n), y = s.gaussian(n);
            CHECK(frobenius_norm(dual(x) - dual_by_products(x)) <= 1e-15 * frobenius_norm(x));
            CHECK(dual(dual(x)) == x);
            const auto xy = x * y;
            CHECK(frobenius_norm(dual(xy) - dual(y) * dual(x)) <= 1e-13 * frobenius_norm(xy));
            CHECK(dual(x.adjoint()) == dual(x).adjoint());
        }
    }
}

TEST_CASE("self-dual iff (XJ)^T = -XJ") {
    oracle::Sampler s(157);
    for (int k = 0; k < 20; ++k) {
        const auto x = random_selfdual(s, 8);
        const auto xj = oracle::multiply(x, symplectic_form(8));
        CHECK(frobenius_norm(xj.transpose() + xj) <= 1e-15 * frobenius_norm(x));

        const auto y = s.gaussian(8);
        const auto yj = oracle::multiply(y, symplectic_form(8));
        CHECK(frobenius_norm(yj.transpose() + yj) > 1e-3);
        CHECK(selfdual_defect(y) > 1e-3);
    }
}

TEST_CASE("selfdual_part") {
    oracle::Sampler s(163);
    const auto x = s.gaussian(8);
    const auto o = selfdual_part(x);
    CHECK(is_exactly_selfdual(o));
    CHECK(selfdual_part(o) == o);
    CHECK(selfdual_part(symplectic_form(4)) == ComplexMatrix::zeros(4));
    const auto g = s.gaussian(6);
    const auto h = g + g.adjoint();
    const auto sh = selfdual_part(h);
    CHECK(sh == sh.adjoint());
    CHECK(selfdual_project(o, SelfDualProjection::HalfDual) == o * Complex{0.5, 0.0});
    CHECK_THROWS_AS(selfdual_part(ComplexMatrix::identity(5)), DimensionError);
}

TEST_CASE("pvl_reduce structure, reconstruction and symplecticity") {
    oracle::Sampler s(167);
    for (std::size_t n : {2u, 4u, 6u, 8u, 16u, 30u}) {
        const auto x = random_selfdual(s, n);
        const auto [q, sm] = pvl_reduce(x);
        const std::size_t half = n / 2;
        for (std::size_t i = 0; i < half; ++i)
            for (std::size_t j = 0; j < half; ++j) {
                CHECK(sm(half + i, j) == Complex{});
                if (i > j + 1) CHECK(sm(i, j) == Complex{});
            }
        const auto recon = oracle::multiply(oracle::multiply(q, sm), oracle::adjoint(q));
        CHECK(frobenius_norm(recon - x) <= 1e-12 * frobenius_norm(x));
        const auto j = symplectic_form(n);
        CHECK(frobenius_norm(oracle::multiply(oracle::multiply(q.transpose(), j), q) - j) <= 1e-12);
        CHECK(frobenius_norm(adjoint_times(q, q) - ComplexMatrix::identity(n)) <= 1e-13 * n);
    }
}

TEST_CASE("pvl_reduce leaves already reduced input alone") {
    const ComplexMatrix a{{1.0, 2.0, 0.5}, {3.0, 4.0, 1.0}, {0.0, 5.0, 6.0}};
    ComplexMatrix x(6, 6);
    x.set_block(0, 0, a);
    x.set_block(3, 3, a.transpose());
    const auto [q, sm] = pvl_reduce(x);
    CHECK(q == ComplexMatrix::identity(6));
    CHECK(sm == x);
}

TEST_CASE("pvl_reduce rejects non-self-dual input") {
    oracle::Sampler s(173);
    CHECK_THROWS_AS(pvl_reduce(s.gaussian(6)), DomainError);
    CHECK_THROWS_AS(pvl_reduce(ComplexMatrix::identity(5)), DimensionError);
}

TEST_CASE("selfdual_schur contract") {
    oracle::Sampler s(179);
    for (std::size_t n : {2u, 4u, 8u, 20u, 64u}) {
        const auto x = random_selfdual(s, n);
        const auto f = selfdual_schur(x);
        const std::size_t half = n / 2;
        const auto recon = oracle::multiply(oracle::multiply(f.q, f.middle()), oracle::adjoint(f.q));
        CHECK(frobenius_norm(recon - x) <= 1e-12 * frobenius_norm(x));
        CHECK(frobenius_norm(dual(f.q) - f.q.adjoint()) <= 1e-12 * n);
        for (std::size_t i = 0; i < half; ++i)
            for (std::size_t j = 0; j < i; ++j) CHECK(f.t(i, j) == Complex{});
        CHECK(f.b == -f.b.transpose());
    }
    const auto id = selfdual_schur(ComplexMatrix::identity(6));
    CHECK(frobenius_norm(id.t - ComplexMatrix::identity(3)) <= 1e-15);
    CHECK(frobenius_norm(adjoint_times(id.q, id.q) - ComplexMatrix::identity(6)) <= 1e-15);
}

TEST_CASE("Kramers doubling against the unstructured solver and the characteristic polynomial") {
    oracle::Sampler s(181);
    for (std::size_t n : {2u, 4u, 6u, 8u}) {
        const auto x = random_selfdual(s, n);
        const auto t = selfdual_schur(x).t.diag();
        std::vector<Complex> doubled = t;
        doubled.insert(doubled.end(), t.begin(), t.end());
        CHECK(oracle::multiset_distance(eig_via_schur(x).eigenvalues, doubled) <= 1e-6);

        // det(zI - x) is the square of a monic polynomial of degree n/2
        // whose roots are diag(t).
        double residual = 0.0;
        const auto q = oracle::poly_sqrt(oracle::char_poly(x), &residual);
        CHECK(residual <= 1e-10 * std::pow(1.0 + frobenius_norm(x), static_cast<double>(n)));
        CHECK(oracle::multiset_distance(oracle::poly_roots(q), t) <= 1e-8);
    }
}

TEST_CASE("Algorithm 6 examples") {
    const auto r = log_unitary_selfdual(-ComplexMatrix::identity(4));
    CHECK(r.h == ComplexMatrix::identity(4) * Complex{-std::numbers::pi, 0.0});
    CHECK(r.backward_error <= 1e-13);
    CHECK_THROWS_AS(log_unitary_selfdual(ComplexMatrix::identity(3)), DimensionError);
    oracle::Sampler s(191);
    CHECK_THROWS_AS(log_unitary_selfdual(s.unitary(4)), DomainError);
}

TEST_CASE("Algorithm 6 output is exactly Hermitian and self-dual") {
    oracle::Sampler s(193);
    for (int k = 0; k < 20; ++k) {
        const std::size_t n = 2 * (1 + static_cast<std::size_t>(k % 8));
        const auto u = selfdual_part(s.near_unitary(n, s.uniform(0.0, 0.5)));
        for (auto alg : {Algorithm::SelfDual, Algorithm::DiagonalizeSelfDual}) {
            const auto r = log_unitary(u, alg);
            CHECK(r.h == r.h.adjoint());
            CHECK(dual(r.h) == r.h);
        }
    }
}

TEST_CASE("structured Schur error bound on self-dual samples") {
    oracle::Sampler s(197);
    for (int k = 0; k < 50; ++k) {
        const std::size_t n = 2 * (1 + static_cast<std::size_t>(k % 8));
        const auto u = selfdual_part(s.near_unitary(n, s.uniform(1e-6, 0.5)));
        const double d = deviation_from_unitary(u);
        const auto f = selfdual_schur(u);
        const auto dh = phase_normalize_diagonal(f.t);
        ComplexMatrix dd(n, n);
        for (std::size_t j = 0; j < n / 2; ++j) dd(j, j) = dd(n / 2 + j, n / 2 + j) = dh(j, j);
        CHECK(dual(dd) == dd);
        const auto w = f.q * times_adjoint(dd, f.q);
        CHECK(operator_norm(u - w) <= schur_phase_bound(n, d) + 1e-10);
    }
}

} // TEST_SUITE
