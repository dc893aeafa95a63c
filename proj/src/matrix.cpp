#include "unilog/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "unilog/errors.hpp"
#include "unilog/schur.hpp"
#include "unilog/tolerances.hpp"

namespace unilog {

namespace {

void require_finite(const ComplexMatrix& a) {
    const auto e = a.entries();
    for (std::size_t k = 0; k < e.size(); ++k) {
        if (!std::isfinite(e[k].real()) || !std::isfinite(e[k].imag()))
            throw DomainError("non-finite matrix entry at (" + std::to_string(k / a.cols()) + ", " +
                                  std::to_string(k % a.cols()) + ")",
                              k / a.cols());
    }
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError(std::string(what) + ": shape mismatch");
}

} // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionError("ComplexMatrix: ragged row list");
        data_.insert(data_.end(), r.begin(), r.end());
    }
    require_finite(*this);
}

ComplexMatrix ComplexMatrix::from_row_major(std::size_t rows, std::size_t cols,
                                            std::vector<Complex> entries) {
    if (entries.size() != rows * cols)
        throw DimensionError("ComplexMatrix: expected " + std::to_string(rows * cols) +
                             " entries, got " + std::to_string(entries.size()));
    ComplexMatrix m;
    m.rows_ = rows;
    m.cols_ = cols;
    m.data_ = std::move(entries);
    require_finite(m);
    return m;
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
    ComplexMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    require_finite(m);
    return m;
}

std::vector<Complex> ComplexMatrix::diag() const {
    const std::size_t k = std::min(rows_, cols_);
    std::vector<Complex> d(k);
    for (std::size_t i = 0; i < k; ++i) d[i] = (*this)(i, i);
    return d;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix m = *this;
    for (auto& z : m.data_) z = std::conj(z);
    return m;
}

ComplexMatrix ComplexMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                                   std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("block: out of range");
    ComplexMatrix m(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        std::copy_n(&(*this)(r0 + i, c0), nc, &m(i, 0));
    return m;
}

void ComplexMatrix::set_block(std::size_t r0, std::size_t c0, const ComplexMatrix& b) {
    if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_)
        throw DimensionError("set_block: out of range");
    for (std::size_t i = 0; i < b.rows(); ++i)
        std::copy_n(&b(i, 0), b.cols(), &(*this)(r0 + i, c0));
}

bool ComplexMatrix::all_finite() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](const Complex& z) {
        return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& b) {
    require_same_shape(*this, b, "operator+");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += b.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& b) {
    require_same_shape(*this, b, "operator-");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= b.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) noexcept {
    for (auto& z : data_) z *= s;
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator-(ComplexMatrix a) {
    for (auto& z : a.entries()) z = -z;
    return a;
}
ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("operator*: inner dimensions differ");
    ComplexMatrix c(a.rows(), b.cols());
    const std::size_t m = b.cols();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Complex* ci = &c(i, 0);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            const Complex* bk = &b(k, 0);
            for (std::size_t j = 0; j < m; ++j) ci[j] += aik * bk[j];
        }
    }
    return c;
}

ComplexMatrix adjoint_times(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows()) throw DimensionError("adjoint_times: inner dimensions differ");
    ComplexMatrix c(a.cols(), b.cols());
    const std::size_t m = b.cols();
    for (std::size_t k = 0; k < a.rows(); ++k) {
        const Complex* bk = &b(k, 0);
        for (std::size_t i = 0; i < a.cols(); ++i) {
            const Complex aki = std::conj(a(k, i));
            if (aki == Complex{}) continue;
            Complex* ci = &c(i, 0);
            for (std::size_t j = 0; j < m; ++j) ci[j] += aki * bk[j];
        }
    }
    return c;
}

ComplexMatrix times_adjoint(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.cols()) throw DimensionError("times_adjoint: inner dimensions differ");
    ComplexMatrix c(a.rows(), b.rows());
    const std::size_t m = a.cols();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const Complex* ai = &a(i, 0);
        for (std::size_t j = 0; j < b.rows(); ++j) {
            const Complex* bj = &b(j, 0);
            Complex s{};
            for (std::size_t k = 0; k < m; ++k) s += ai[k] * std::conj(bj[k]);
            c(i, j) = s;
        }
    }
    return c;
}

void require_square(const ComplexMatrix& a, const char* what) {
    if (!a.is_square())
        throw DimensionError(std::string(what) + ": expected a square matrix, got " +
                             std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
}

double frobenius_norm(const ComplexMatrix& a) {
    double scale = 0.0;
    for (const auto& z : a.entries()) scale = std::max(scale, std::abs(z));
    if (scale == 0.0) return 0.0;
    double sum = 0.0;
    for (const auto& z : a.entries()) sum += std::norm(z / scale);
    return scale * std::sqrt(sum);
}

double max_abs(const ComplexMatrix& a) {
    double m = 0.0;
    for (const auto& z : a.entries()) m = std::max(m, std::abs(z));
    return m;
}

double norm_1(const ComplexMatrix& a) {
    std::vector<double> col(a.cols(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) col[j] += std::abs(a(i, j));
    return col.empty() ? 0.0 : *std::max_element(col.begin(), col.end());
}

double norm_inf(const ComplexMatrix& a) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double s = 0.0;
        for (const auto& z : a.row(i)) s += std::abs(z);
        m = std::max(m, s);
    }
    return m;
}

double operator_norm(const ComplexMatrix& a) {
    const double scale = max_abs(a);
    if (scale == 0.0) return 0.0;
    // Work with a / scale so that squares neither overflow nor underflow.
    ComplexMatrix b = a;
    b *= 1.0 / scale;

    const std::size_t n = b.cols(), m = b.rows();
    std::mt19937_64 engine(0x9e3779b97f4a7c15ULL);
    auto centered = [&engine] { return static_cast<double>(engine() >> 11) * 0x1.0p-53 - 0.5; };
    std::vector<Complex> x(n), y(m);
    for (auto& z : x) z = {centered(), centered()};

    auto normalize = [](std::vector<Complex>& v) {
        double s = 0.0;
        for (const auto& z : v) s += std::norm(z);
        s = std::sqrt(s);
        if (s > 0.0)
            for (auto& z : v) z /= s;
        return s;
    };
    normalize(x);

    double lambda = 0.0;
    for (std::size_t it = 0; it < tol::op_norm_max_iterations; ++it) {
        // y = B x, x <- B* y
        for (std::size_t i = 0; i < m; ++i) {
            const Complex* row = &b(i, 0);
            Complex s{};
            for (std::size_t j = 0; j < n; ++j) s += row[j] * x[j];
            y[i] = s;
        }
        double sq = 0.0;
        for (const auto& z : y) sq += std::norm(z);
        std::fill(x.begin(), x.end(), Complex{});
        for (std::size_t i = 0; i < m; ++i) {
            const Complex* row = &b(i, 0);
            const Complex yi = y[i];
            for (std::size_t j = 0; j < n; ++j) x[j] += std::conj(row[j]) * yi;
        }
        if (normalize(x) == 0.0) {
            // Start vector fell into the null space; not expected, restart randomly.
            for (auto& z : x) z = {centered(), centered()};
            normalize(x);
            continue;
        }
        // The Rayleigh quotient of B*B increases monotonically; stop once it
        // has stalled well below op_norm tolerance.
        if (it > 0 && sq - lambda <= 1e-3 * tol::op_norm * sq) {
            lambda = std::max(lambda, sq);
            return scale * std::sqrt(lambda);
        }
        lambda = std::max(lambda, sq);
    }

    const auto eig = hermitian_eigen(adjoint_times(b, b));
    const double top = std::max(0.0, eig.values.back());
    return scale * std::sqrt(top);
}

LuFactorization::LuFactorization(const ComplexMatrix& a) : lu_(a), perm_(a.rows()) {
    require_square(a, "lu");
    const std::size_t n = a.rows();
    for (std::size_t i = 0; i < n; ++i) perm_[i] = i;
    const double threshold = tol::singularity * max_abs(a);

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(lu_(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double v = std::abs(lu_(i, k));
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (best <= threshold || best == 0.0)
            throw SingularMatrixError("singular matrix: pivot " + std::to_string(best) +
                                          " at column " + std::to_string(k),
                                      k);
        if (piv != k) {
            std::swap_ranges(&lu_(k, 0), &lu_(k, 0) + n, &lu_(piv, 0));
            std::swap(perm_[k], perm_[piv]);
        }
        const Complex inv = 1.0 / lu_(k, k);
        const Complex* rk = &lu_(k, 0);
        for (std::size_t i = k + 1; i < n; ++i) {
            Complex* ri = &lu_(i, 0);
            const Complex f = ri[k] * inv;
            ri[k] = f;
            if (f == Complex{}) continue;
            for (std::size_t j = k + 1; j < n; ++j) ri[j] -= f * rk[j];
        }
    }
}

ComplexMatrix LuFactorization::solve(const ComplexMatrix& b) const {
    const std::size_t n = lu_.rows();
    if (b.rows() != n) throw DimensionError("solve: right-hand side has wrong row count");
    const std::size_t m = b.cols();
    ComplexMatrix x(n, m);
    for (std::size_t i = 0; i < n; ++i) std::copy_n(&b(perm_[i], 0), m, &x(i, 0));
    // L y = P b
    for (std::size_t i = 0; i < n; ++i) {
        Complex* xi = &x(i, 0);
        for (std::size_t k = 0; k < i; ++k) {
            const Complex l = lu_(i, k);
            if (l == Complex{}) continue;
            const Complex* xk = &x(k, 0);
            for (std::size_t j = 0; j < m; ++j) xi[j] -= l * xk[j];
        }
    }
    // U x = y
    for (std::size_t ii = n; ii-- > 0;) {
        Complex* xi = &x(ii, 0);
        for (std::size_t k = ii + 1; k < n; ++k) {
            const Complex u = lu_(ii, k);
            if (u == Complex{}) continue;
            const Complex* xk = &x(k, 0);
            for (std::size_t j = 0; j < m; ++j) xi[j] -= u * xk[j];
        }
        const Complex inv = 1.0 / lu_(ii, ii);
        for (std::size_t j = 0; j < m; ++j) xi[j] *= inv;
    }
    return x;
}

ComplexMatrix LuFactorization::inverse() const {
    return solve(ComplexMatrix::identity(lu_.rows()));
}

ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b) {
    return LuFactorization(a).solve(b);
}

ComplexMatrix inverse(const ComplexMatrix& a) { return LuFactorization(a).inverse(); }

double condition_1(const ComplexMatrix& a) {
    try {
        return norm_1(a) * norm_1(inverse(a));
    } catch (const SingularMatrixError&) {
        return std::numeric_limits<double>::infinity();
    }
}

} // namespace unilog
