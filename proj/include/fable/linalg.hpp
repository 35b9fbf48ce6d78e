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

#include <cmath>
#include <complex>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "fable/errors.hpp"

namespace fable {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

inline bool is_power_of_two(std::size_t n) { return n > 0 && (n & (n - 1)) == 0; }

/// Exact log2 of a power of two.
inline std::size_t log2_exact(std::size_t n)
{
    std::size_t k = 0;
    while ((std::size_t{1} << k) < n) ++k;
    return k;
}

/// Dense complex matrix in row-major layout. All values in this library are
/// immutable after construction; operations return fresh matrices.
struct ComplexMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    ComplexVector data;

    ComplexMatrix() = default;

    ComplexMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

    ComplexMatrix(std::size_t r, std::size_t c, ComplexVector values)
        : rows(r), cols(c), data(std::move(values))
    {
        if (data.size() != rows * cols)
            throw Error("matrix data length does not match dimensions");
    }

    static ComplexMatrix identity(std::size_t n)
    {
        ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
        return m;
    }

    static ComplexMatrix zero(std::size_t n) { return ComplexMatrix(n, n); }

    Complex& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const Complex& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    bool is_square() const { return rows == cols; }

    /// Number of qubits n for a 2^n x 2^n encoding target; throws if the
    /// matrix is not square with power-of-two dimension >= 2.
    std::size_t encoding_qubits() const
    {
        if (!is_square() || rows < 2 || !is_power_of_two(rows))
            throw EncodingError("encoding target must be square with dimension 2^n, n >= 1");
        return log2_exact(rows);
    }
};

/// Entries of the result may not exceed this count (2^20).
inline constexpr std::size_t kKronEntryCap = std::size_t{1} << 20;

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b)
{
    const std::size_t rows = a.rows * b.rows;
    const std::size_t cols = a.cols * b.cols;
    if (rows * cols > kKronEntryCap)
        throw ResourceError("kron result exceeds " + std::to_string(kKronEntryCap) + " entries");
    ComplexMatrix out(rows, cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) {
            const Complex aij = a.at(i, j);
            if (aij == Complex{}) continue;
            for (std::size_t k = 0; k < b.rows; ++k)
                for (std::size_t l = 0; l < b.cols; ++l)
                    out.at(i * b.rows + k, j * b.cols + l) = aij * b.at(k, l);
        }
    return out;
}

inline double frobenius_norm(const ComplexMatrix& a)
{
    double sum = 0.0;
    for (const Complex& v : a.data) sum += std::norm(v);
    return std::sqrt(sum);
}

struct SpectralNormEstimate {
    double value = 0.0;
    bool converged = false;
    std::size_t iterations = 0;
};

/// Largest singular value via power iteration on A^H A. Deterministic: the
/// start vector is drawn from a fixed-seed generator so repeated runs agree
/// bit for bit. On non-convergence the best estimate is returned with
/// converged = false.
inline SpectralNormEstimate
estimate_spectral_norm(const ComplexMatrix& a, double tol = 1e-13, std::size_t max_iter = 10000)
{
    if (tol <= 0.0) throw Error("spectral norm tolerance must be positive");
    const std::size_t m = a.rows;
    const std::size_t n = a.cols;
    if (m == 0 || n == 0) return {0.0, true, 0};

    std::mt19937_64 rng(0xFAB1E);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    ComplexVector v(n);
    double v0norm = 0.0;
    for (Complex& x : v) {
        x = Complex(dist(rng), dist(rng));
        v0norm += std::norm(x);
    }
    v0norm = std::sqrt(v0norm);
    for (Complex& x : v) x /= v0norm;

    ComplexVector av(m), w(n);
    double lambda_prev = 0.0;
    for (std::size_t iter = 1; iter <= max_iter; ++iter) {
        // w = A^H (A v)
        for (std::size_t i = 0; i < m; ++i) {
            Complex acc = 0.0;
            for (std::size_t j = 0; j < n; ++j) acc += a.at(i, j) * v[j];
            av[i] = acc;
        }
        for (std::size_t j = 0; j < n; ++j) {
            Complex acc = 0.0;
            for (std::size_t i = 0; i < m; ++i) acc += std::conj(a.at(i, j)) * av[i];
            w[j] = acc;
        }
        double wnorm = 0.0;
        for (const Complex& x : w) wnorm += std::norm(x);
        wnorm = std::sqrt(wnorm);
        if (wnorm == 0.0) return {0.0, true, iter};

        double vnorm = 0.0;
        for (const Complex& x : v) vnorm += std::norm(x);
        const double lambda = wnorm / vnorm; // Rayleigh estimate of sigma_max^2
        for (std::size_t j = 0; j < n; ++j) v[j] = w[j] / wnorm;

        if (iter > 1 && std::abs(lambda - lambda_prev) <= tol * lambda)
            return {std::sqrt(lambda), true, iter};
        lambda_prev = lambda;
    }
    return {std::sqrt(lambda_prev), false, max_iter};
}

inline double spectral_norm(const ComplexMatrix& a, double tol = 1e-13,
                            std::size_t max_iter = 10000)
{
    return estimate_spectral_norm(a, tol, max_iter).value;
}

/// vec(A) with index l = i*N + j: the row register occupies the most
/// significant bits, matching the circuit's qubit order.
inline ComplexVector vectorize(const ComplexMatrix& a)
{
    a.encoding_qubits();
    return a.data;
}

/// Inverse of vectorize.
inline ComplexMatrix devectorize(const ComplexVector& v)
{
    if (!is_power_of_two(v.size()) || log2_exact(v.size()) % 2 != 0)
        throw EncodingError("vectorized matrix must have length 4^n");
    const std::size_t n = std::size_t{1} << (log2_exact(v.size()) / 2);
    return ComplexMatrix(n, n, v);
}

} // namespace fable
