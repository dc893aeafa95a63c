#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "oracle.hpp"
#include "unilog/errors.hpp"
#include "unilog/expm.hpp"
#include "unilog/matrix.hpp"

using namespace unilog;

TEST_SUITE("matrix") {

TEST_CASE("construction rejects non-finite entries") {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS((ComplexMatrix{{1.0, Complex{nan, 0.0}}, {0.0, 1.0}}), DomainError);
    CHECK_THROWS_AS(ComplexMatrix::from_row_major(1, 1, {Complex{0.0, INFINITY}}), DomainError);
    CHECK_THROWS_AS((ComplexMatrix{{1.0, 2.0}, {3.0}}), DimensionError);
}

TEST_CASE("products agree with the naive triple loop") {
    oracle::Sampler s(11);
    for (std::size_t n : {1u, 2u, 5u, 17u}) {
        const auto a = s.gaussian(n), b = s.gaussian(n);
        const auto ref = oracle::multiply(a, b);
        CHECK(frobenius_norm(a * b - ref) <= 1e-14 * frobenius_norm(ref));
        CHECK(frobenius_norm(adjoint_times(a, b) - oracle::multiply(oracle::adjoint(a), b)) <=
              1e-14 * frobenius_norm(ref));
        CHECK(frobenius_norm(times_adjoint(a, b) - oracle::multiply(a, oracle::adjoint(b))) <=
              1e-14 * frobenius_norm(ref));
    }
    CHECK_THROWS_AS(ComplexMatrix(2, 3) * ComplexMatrix(2, 3), DimensionError);
}

TEST_CASE("frobenius norm examples") {
    CHECK(frobenius_norm(ComplexMatrix::identity(4)) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(frobenius_norm(ComplexMatrix::zeros(3)) == 0.0);
    const ComplexMatrix a{{3.0, Complex{0.0, 4.0}}, {0.0, 0.0}};
    CHECK(frobenius_norm(a) == doctest::Approx(5.0).epsilon(1e-15));
}

TEST_CASE("operator norm examples") {
    const std::vector<Complex> d{2.0, 1.0, 0.5};
    CHECK(operator_norm(ComplexMatrix::diagonal(d)) == doctest::Approx(2.0).epsilon(1e-10));
    oracle::Sampler s(3);
    for (std::size_t n : {2u, 8u, 32u})
        CHECK(std::abs(operator_norm(s.unitary(n)) - 1.0) <= 1e-10);
    CHECK(operator_norm(ComplexMatrix::zeros(3)) == 0.0);
}

TEST_CASE("operator norm matches the closed form on 2x2 inputs") {
    oracle::Sampler s(5);
    for (int k = 0; k < 200; ++k) {
        const auto a = s.gaussian(2);
        const double ref = oracle::norm2x2(a);
        CHECK(std::abs(operator_norm(a) - ref) <= 1e-10 * ref);
    }
}

TEST_CASE("operator norm of the branch-cut counterexample") {
    // e^{iK} - (-I) for K = [[pi, -pi], [-pi, -pi]].
    const double pi = std::numbers::pi;
    ComplexMatrix ik{{Complex{0.0, pi}, Complex{0.0, -pi}}, {Complex{0.0, -pi}, Complex{0.0, -pi}}};
    const auto m = oracle::expm_taylor(ik) + ComplexMatrix::identity(2);
    CHECK(operator_norm(m) == doctest::Approx(1.2114).epsilon(1e-4));
    CHECK(operator_norm(m) == doctest::Approx(oracle::norm2x2(m)).epsilon(1e-10));
}

TEST_CASE("norm sandwich and unitary invariance") {
    oracle::Sampler s(17);
    for (int k = 0; k < 100; ++k) {
        const std::size_t n = 2 + static_cast<std::size_t>(k % 15);
        const auto a = s.gaussian(n);
        const double op = operator_norm(a), fro = frobenius_norm(a);
        CHECK(op <= fro * (1.0 + 1e-12));
        CHECK(fro <= std::sqrt(static_cast<double>(n)) * op * (1.0 + 1e-10));
        const auto q = s.unitary(n);
        const auto b = q * times_adjoint(a, q);
        CHECK(std::abs(operator_norm(b) - op) <= 1e-10 * op);
        CHECK(std::abs(frobenius_norm(b) - fro) <= 1e-12 * fro);
    }
}

TEST_CASE("solve and inverse") {
    const auto b = ComplexMatrix{{1.0, 2.0}, {Complex{0.0, 1.0}, 4.0}};
    CHECK(solve(ComplexMatrix::identity(2), b) == b);
    const std::vector<Complex> d{2.0, 4.0};
    const auto x = solve(ComplexMatrix::diagonal(d), ComplexMatrix::identity(2));
    CHECK(x(0, 0) == Complex{0.5, 0.0});
    CHECK(x(1, 1) == Complex{0.25, 0.0});
    CHECK(x(0, 1) == Complex{});

    oracle::Sampler s(23);
    auto a = s.gaussian(16);
    for (std::size_t i = 0; i < 16; ++i) a(i, i) += 8.0;
    const auto rhs = s.gaussian(16);
    const auto sol = solve(a, rhs);
    CHECK(frobenius_norm(oracle::multiply(a, sol) - rhs) <= 1e-13 * frobenius_norm(rhs));
    CHECK(frobenius_norm(oracle::multiply(a, inverse(a)) - ComplexMatrix::identity(16)) <= 1e-13);
}

TEST_CASE("singular matrices are reported") {
    const ComplexMatrix a{{1.0, 2.0}, {2.0, 4.0}};
    CHECK_THROWS_AS(solve(a, ComplexMatrix::identity(2)), SingularMatrixError);
    CHECK_THROWS_AS(inverse(ComplexMatrix::zeros(3)), SingularMatrixError);
    CHECK(std::isinf(condition_1(a)));
    CHECK(condition_1(ComplexMatrix::identity(5)) == doctest::Approx(1.0));
}

TEST_CASE("non-square operands are rejected") {
    CHECK_THROWS_AS(inverse(ComplexMatrix(2, 3)), DimensionError);
    CHECK_THROWS_AS(expm(ComplexMatrix(2, 3)), DimensionError);
}

TEST_CASE("adjoint, transpose and blocks") {
    const ComplexMatrix a{{1.0, Complex{2.0, 1.0}}, {Complex{0.0, -3.0}, 4.0}};
    CHECK(a.adjoint()(0, 1) == Complex{0.0, 3.0});
    CHECK(a.transpose()(0, 1) == Complex{0.0, -3.0});
    CHECK(a.conjugate()(0, 1) == Complex{2.0, -1.0});
    ComplexMatrix big(4, 4);
    big.set_block(2, 2, a);
    CHECK(big.block(2, 2, 2, 2) == a);
    CHECK(big(0, 0) == Complex{});
}

} // TEST_SUITE
