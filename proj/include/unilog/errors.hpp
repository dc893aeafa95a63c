#pragma once

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>

namespace unilog {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Shape problems: non-square input, mismatched operands, odd dimension where
/// a block split is required.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Input outside an operation's domain (non-finite entry, zero pivot on a
/// diagonal that must be invertible, non-unimodular phase, ...).
class DomainError : public Error {
public:
    DomainError(const std::string& what, std::size_t index = npos)
        : Error(what), index_(index) {}

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    /// Offending row/diagonal index, or npos when not applicable.
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

class SingularMatrixError : public Error {
public:
    SingularMatrixError(const std::string& what, std::size_t index,
                        double condition = std::numeric_limits<double>::infinity())
        : Error(what), index_(index), condition_(condition) {}

    std::size_t index() const noexcept { return index_; }
    /// 1-norm condition estimate when one is available, +inf otherwise.
    double condition() const noexcept { return condition_; }

private:
    std::size_t index_;
    double condition_;
};

class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, std::size_t iterations)
        : Error(what + " (" + std::to_string(iterations) + " iterations)"),
          iterations_(iterations) {}

    std::size_t iterations() const noexcept { return iterations_; }

private:
    std::size_t iterations_;
};

/// File or stream could not be read or written.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace unilog
