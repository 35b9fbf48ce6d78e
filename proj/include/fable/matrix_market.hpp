// Copyright 2026 The fable-cc developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "fable/errors.hpp"
#include "fable/linalg.hpp"

namespace fable {

namespace detail {

inline std::string to_lower(std::string s)
{
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

inline std::string format_double(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

/// Next non-comment, non-blank line.
inline bool next_content_line(std::istream& in, std::string& line)
{
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r\n");
        if (first == std::string::npos) continue;
        if (line[first] == '%') continue;
        return true;
    }
    return false;
}

} // namespace detail

/// Parse a Matrix Market stream into a dense matrix. Accepts array and
/// coordinate formats, real and complex fields, and general, symmetric, or
/// hermitian symmetry. The dimension must be square and a power of two.
inline ComplexMatrix read_matrix_market(std::istream& in)
{
    std::string banner;
    if (!std::getline(in, banner))
        throw ParseError(ParseError::Kind::BadHeader, "empty Matrix Market stream");

    std::istringstream banner_stream(banner);
    std::string magic, object, format, field, symmetry;
    banner_stream >> magic >> object >> format >> field >> symmetry;
    if (detail::to_lower(magic) != "%%matrixmarket" || detail::to_lower(object) != "matrix")
        throw ParseError(ParseError::Kind::BadHeader, "not a Matrix Market matrix header");
    format = detail::to_lower(format);
    field = detail::to_lower(field);
    symmetry = detail::to_lower(symmetry);

    const bool coordinate = format == "coordinate";
    if (!coordinate && format != "array")
        throw ParseError(ParseError::Kind::BadHeader, "unsupported format '" + format + "'");
    const bool complex_field = field == "complex";
    if (!complex_field && field != "real")
        throw ParseError(ParseError::Kind::BadHeader, "unsupported field '" + field + "'");
    const bool symmetric = symmetry == "symmetric";
    const bool hermitian = symmetry == "hermitian";
    if (!symmetric && !hermitian && symmetry != "general")
        throw ParseError(ParseError::Kind::BadHeader, "unsupported symmetry '" + symmetry + "'");
    if (hermitian && !complex_field)
        throw ParseError(ParseError::Kind::BadHeader, "hermitian symmetry requires complex field");

    std::string line;
    if (!detail::next_content_line(in, line))
        throw ParseError(ParseError::Kind::Truncated, "missing size line");
    std::istringstream size_stream(line);
    long long rows = 0, cols = 0, nnz = 0;
    if (!(size_stream >> rows >> cols)) throw ParseError(ParseError::Kind::BadValue, "bad size line");
    if (coordinate && !(size_stream >> nnz))
        throw ParseError(ParseError::Kind::BadValue, "coordinate size line needs an entry count");

    if (rows <= 0 || cols <= 0 || rows != cols || !is_power_of_two(static_cast<std::size_t>(rows)) ||
        rows < 2)
        throw ParseError(ParseError::Kind::BadDimension,
                         "matrix must be square with power-of-two dimension >= 2");

    const std::size_t dim = static_cast<std::size_t>(rows);
    ComplexMatrix m(dim, dim);

    // Remaining tokens form one whitespace-separated value stream.
    std::ostringstream rest;
    std::string size_tail;
    std::getline(size_stream, size_tail);
    rest << size_tail;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r\n");
        if (first != std::string::npos && line[first] == '%') continue;
        rest << '\n' << line;
    }
    std::istringstream values(rest.str());

    const auto read_value = [&]() -> Complex {
        double re = 0.0, im = 0.0;
        if (!(values >> re)) throw ParseError(ParseError::Kind::Truncated, "value stream ended early");
        if (complex_field && !(values >> im))
            throw ParseError(ParseError::Kind::Truncated, "complex entry missing imaginary part");
        return {re, im};
    };

    if (coordinate) {
        for (long long e = 0; e < nnz; ++e) {
            long long i = 0, j = 0;
            if (!(values >> i >> j))
                throw ParseError(ParseError::Kind::Truncated, "coordinate entry missing indices");
            if (i < 1 || j < 1 || i > rows || j > cols)
                throw ParseError(ParseError::Kind::IndexOutOfBounds,
                                 "coordinate entry (" + std::to_string(i) + ", " +
                                     std::to_string(j) + ") out of bounds");
            const Complex v = read_value();
            const std::size_t r = static_cast<std::size_t>(i - 1);
            const std::size_t c = static_cast<std::size_t>(j - 1);
            m.at(r, c) = v;
            if ((symmetric || hermitian) && r != c) m.at(c, r) = hermitian ? std::conj(v) : v;
        }
    } else if (symmetric || hermitian) {
        // Array with symmetry stores the lower triangle column by column.
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t i = j; i < dim; ++i) {
                const Complex v = read_value();
                m.at(i, j) = v;
                if (i != j) m.at(j, i) = hermitian ? std::conj(v) : v;
            }
    } else {
        // General array is column-major.
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t i = 0; i < dim; ++i) m.at(i, j) = read_value();
    }
    return m;
}

inline ComplexMatrix read_matrix_market(const std::string& text)
{
    std::istringstream in(text);
    return read_matrix_market(in);
}

/// Emit a dense array-format file, complex only when an imaginary part is
/// present. Byte-deterministic for a fixed matrix.
inline void write_matrix_market(std::ostream& out, const ComplexMatrix& m)
{
    bool complex_field = false;
    for (const Complex& v : m.data)
        if (v.imag() != 0.0) {
            complex_field = true;
            break;
        }
    out << "%%MatrixMarket matrix array " << (complex_field ? "complex" : "real") << " general\n";
    out << m.rows << " " << m.cols << "\n";
    for (std::size_t j = 0; j < m.cols; ++j)
        for (std::size_t i = 0; i < m.rows; ++i) {
            const Complex v = m.at(i, j);
            out << detail::format_double(v.real());
            if (complex_field) out << " " << detail::format_double(v.imag());
            out << "\n";
        }
}

inline std::string write_matrix_market(const ComplexMatrix& m)
{
    std::ostringstream out;
    write_matrix_market(out, m);
    return out.str();
}

} // namespace fable
