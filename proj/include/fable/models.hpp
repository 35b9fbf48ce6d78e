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
#include <cstddef>

#include "fable/errors.hpp"
#include "fable/linalg.hpp"

namespace fable {

/// Open spin chain with nearest-neighbour XX/YY/ZZ couplings and a uniform
/// longitudinal field.
struct HeisenbergSpec {
    std::size_t n = 2;
    double jx = 1.0;
    double jy = 1.0;
    double jz = 1.0;
    double hz = 0.0;
};

struct LaplacianSpec {
    std::size_t dims = 1;
    std::size_t points_x = 2;
    std::size_t points_y = 2; // 2D only
    bool periodic = false;
};

inline constexpr std::size_t kMaxHeisenbergSites = 10;
inline constexpr std::size_t kMaxLaplacianPoints = std::size_t{1} << 10;

namespace detail {

inline ComplexMatrix pauli_x()
{
    return ComplexMatrix(2, 2, {0.0, 1.0, 1.0, 0.0});
}

inline ComplexMatrix pauli_y()
{
    return ComplexMatrix(2, 2, {0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0});
}

inline ComplexMatrix pauli_z()
{
    return ComplexMatrix(2, 2, {1.0, 0.0, 0.0, -1.0});
}

/// I (x) ... (x) P (x) P (x) ... (x) I with the first factor on `site`.
inline ComplexMatrix chain_term(std::size_t n, std::size_t site, const ComplexMatrix& p,
                                bool two_local)
{
    ComplexMatrix term = ComplexMatrix::identity(1);
    for (std::size_t q = 0; q < n; ++q) {
        const bool hit = (q == site) || (two_local && q == site + 1);
        term = kron(term, hit ? p : ComplexMatrix::identity(2));
    }
    return term;
}

} // namespace detail

inline ComplexMatrix heisenberg_matrix(const HeisenbergSpec& spec)
{
    if (spec.n < 2) throw EncodingError("spin chain needs at least two sites");
    if (spec.n > kMaxHeisenbergSites)
        throw ResourceError("dense spin-chain assembly is capped at " +
                            std::to_string(kMaxHeisenbergSites) + " sites");

    const std::size_t dim = std::size_t{1} << spec.n;
    ComplexMatrix h = ComplexMatrix::zero(dim);
    const auto add = [&](const ComplexMatrix& term, double coeff) {
        if (coeff == 0.0) return;
        for (std::size_t idx = 0; idx < h.data.size(); ++idx) h.data[idx] += coeff * term.data[idx];
    };

    for (std::size_t site = 0; site + 1 < spec.n; ++site) {
        add(detail::chain_term(spec.n, site, detail::pauli_x(), true), spec.jx);
        add(detail::chain_term(spec.n, site, detail::pauli_y(), true), spec.jy);
        add(detail::chain_term(spec.n, site, detail::pauli_z(), true), spec.jz);
    }
    for (std::size_t site = 0; site < spec.n; ++site)
        add(detail::chain_term(spec.n, site, detail::pauli_z(), false), spec.hz);
    return h;
}

/// Three-point stencil: 2 on the diagonal, -1 off-diagonal, corner couplings
/// for periodic boundary conditions.
inline ComplexMatrix laplacian_1d(std::size_t points, bool periodic)
{
    if (points < 2 || !is_power_of_two(points))
        throw EncodingError("grid size must be a power of two >= 2");
    ComplexMatrix l = ComplexMatrix::zero(points);
    for (std::size_t j = 0; j < points; ++j) {
        l.at(j, j) += 2.0;
        if (j + 1 < points)
            l.at(j, j + 1) -= 1.0;
        else if (periodic)
            l.at(j, (j + 1) % points) -= 1.0;
        if (j > 0)
            l.at(j, j - 1) -= 1.0;
        else if (periodic)
            l.at(j, (j + points - 1) % points) -= 1.0;
    }
    return l;
}

/// Kronecker sum of the two 1D stencils (five-point stencil).
inline ComplexMatrix laplacian_2d(std::size_t points_x, std::size_t points_y, bool periodic)
{
    if (points_x * points_y > kMaxLaplacianPoints)
        throw ResourceError("2D grid is capped at " + std::to_string(kMaxLaplacianPoints) +
                            " points");
    const ComplexMatrix lxx = laplacian_1d(points_x, periodic);
    const ComplexMatrix lyy = laplacian_1d(points_y, periodic);
    const ComplexMatrix left = kron(lxx, ComplexMatrix::identity(points_y));
    const ComplexMatrix right = kron(ComplexMatrix::identity(points_x), lyy);
    ComplexMatrix out = left;
    for (std::size_t idx = 0; idx < out.data.size(); ++idx) out.data[idx] += right.data[idx];
    return out;
}

struct Prescaled {
    ComplexMatrix matrix;
    double scale = 1.0;
};

/// Divide by the largest entry magnitude when it exceeds one, so every entry
/// lies in the closed unit disk. The scale multiplies the reported
/// subnormalization downstream.
inline Prescaled prescale(const ComplexMatrix& a)
{
    double max_abs = 0.0;
    for (const Complex& v : a.data) max_abs = std::max(max_abs, std::abs(v));
    if (max_abs <= 1.0) return {a, 1.0};
    Prescaled out{a, max_abs};
    for (Complex& v : out.matrix.data) v /= max_abs;
    return out;
}

} // namespace fable
