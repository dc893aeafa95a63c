#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace unilog {

using Complex = std::complex<double>;

/**
 * Dense complex matrix, row-major storage.
 *
 * Construction from explicit entries rejects NaN/Inf. Every numerical routine
 * in the library requires square operands and checks this on entry.
 */
class ComplexMatrix {
public:
    ComplexMatrix() = default;

    /// rows x cols zero matrix.
    ComplexMatrix(std::size_t rows, std::size_t cols);

    /// Nested-list literal, one inner list per row.
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix from_row_major(std::size_t rows, std::size_t cols,
                                        std::vector<Complex> entries);
    static ComplexMatrix zeros(std::size_t n) { return ComplexMatrix(n, n); }
    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const Complex> diag);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool empty() const noexcept { return data_.empty(); }

    Complex& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const noexcept {
        return data_[i * cols_ + j];
    }

    std::span<Complex> row(std::size_t i) noexcept { return {data_.data() + i * cols_, cols_}; }
    std::span<const Complex> row(std::size_t i) const noexcept {
        return {data_.data() + i * cols_, cols_};
    }

    std::span<const Complex> entries() const noexcept { return data_; }
    std::span<Complex> entries() noexcept { return data_; }

    std::vector<Complex> diag() const;

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;

    ComplexMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const ComplexMatrix& b);

    bool all_finite() const noexcept;

    ComplexMatrix& operator+=(const ComplexMatrix& b);
    ComplexMatrix& operator-=(const ComplexMatrix& b);
    ComplexMatrix& operator*=(Complex s) noexcept;

    /// Bitwise entry comparison.
    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix a);
ComplexMatrix operator*(ComplexMatrix a, Complex s);

/// a* b without forming the adjoint.
ComplexMatrix adjoint_times(const ComplexMatrix& a, const ComplexMatrix& b);
/// a b* without forming the adjoint.
ComplexMatrix times_adjoint(const ComplexMatrix& a, const ComplexMatrix& b);

/// Throws DimensionError unless a is square.
void require_square(const ComplexMatrix& a, const char* what);

double frobenius_norm(const ComplexMatrix& a);
double max_abs(const ComplexMatrix& a);
double norm_1(const ComplexMatrix& a);
double norm_inf(const ComplexMatrix& a);

/// Largest singular value. Power iteration on A*A from a fixed-seed random
/// start; falls back to a Hermitian eigensolve of A*A when the iteration
/// does not settle within tol::op_norm_max_iterations.
double operator_norm(const ComplexMatrix& a);

/// LU factorization with partial pivoting, P A = L U.
class LuFactorization {
public:
    /// Throws SingularMatrixError when a pivot falls below tol::singularity
    /// times the largest entry of a.
    explicit LuFactorization(const ComplexMatrix& a);

    ComplexMatrix solve(const ComplexMatrix& b) const;
    ComplexMatrix inverse() const;
    std::size_t size() const noexcept { return lu_.rows(); }

private:
    ComplexMatrix lu_;
    std::vector<std::size_t> perm_;
};

/// x with a x = b.
ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix inverse(const ComplexMatrix& a);

/// ||a||_1 ||a^{-1}||_1, +inf when a is numerically singular.
double condition_1(const ComplexMatrix& a);

} // namespace unilog
