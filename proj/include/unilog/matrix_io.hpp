#pragma once

#include <filesystem>
#include <iosfwd>

#include "unilog/errors.hpp"
#include "unilog/matrix.hpp"

namespace unilog {

// Text format: first line n, then n*n lines "re im" in row-major order,
// printed with 17 significant digits so values round-trip exactly.

void write_matrix(std::ostream& out, const ComplexMatrix& a);
void write_matrix(const std::filesystem::path& path, const ComplexMatrix& a);

/// Throws IoError on malformed or truncated input.
ComplexMatrix read_matrix(std::istream& in);
ComplexMatrix read_matrix(const std::filesystem::path& path);

} // namespace unilog
