#include "unilog/matrix_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace unilog {

void write_matrix(std::ostream& out, const ComplexMatrix& a) {
    require_square(a, "write_matrix");
    out << a.rows() << '\n';
    char buf[64];
    for (const auto& z : a.entries()) {
        std::snprintf(buf, sizeof buf, "%.17g %.17g\n", z.real(), z.imag());
        out << buf;
    }
    if (!out) throw IoError("write_matrix: write failed");
}

void write_matrix(const std::filesystem::path& path, const ComplexMatrix& a) {
    std::ofstream f(path);
    if (!f) throw IoError("write_matrix: cannot open '" + path.string() + "'");
    write_matrix(f, a);
}

ComplexMatrix read_matrix(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    };

    if (!next_line()) throw IoError("read_matrix: empty input");
    long long n = -1;
    {
        std::istringstream ss(line);
        std::string rest;
        if (!(ss >> n) || n <= 0 || (ss >> rest))
            throw IoError("read_matrix: line " + std::to_string(line_no) +
                          ": expected a positive dimension");
    }
    const auto dim = static_cast<std::size_t>(n);
    std::vector<Complex> data;
    data.reserve(dim * dim);
    for (std::size_t k = 0; k < dim * dim; ++k) {
        if (!next_line())
            throw IoError("read_matrix: expected " + std::to_string(dim * dim) + " entries, got " +
                          std::to_string(k));
        std::istringstream ss(line);
        double re = 0.0, im = 0.0;
        std::string rest;
        if (!(ss >> re >> im) || (ss >> rest))
            throw IoError("read_matrix: line " + std::to_string(line_no) + ": expected 're im'");
        if (!std::isfinite(re) || !std::isfinite(im))
            throw IoError("read_matrix: line " + std::to_string(line_no) + ": non-finite entry");
        data.emplace_back(re, im);
    }
    if (next_line())
        throw IoError("read_matrix: trailing data at line " + std::to_string(line_no));
    return ComplexMatrix::from_row_major(dim, dim, data);
}

ComplexMatrix read_matrix(const std::filesystem::path& path) {
    std::ifstream f(path);
    if (!f) throw IoError("read_matrix: cannot open '" + path.string() + "'");
    return read_matrix(f);
}

} // namespace unilog
