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
//
// Brute-force reference constructions used only by tests. Everything here is
// built entrywise from first principles and stays independent of the library
// code paths it checks.

#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstddef>
#include <random>
#include <vector>

#include "fable/circuit.hpp"
#include "fable/linalg.hpp"

namespace oracles {

using fable::Complex;
using fable::ComplexMatrix;

/// Dense unnormalized Walsh matrix: W[r][c] = (-1)^popcount(r & c).
inline std::vector<std::vector<double>> dense_walsh(std::size_t k)
{
    const std::size_t dim = std::size_t{1} << k;
    std::vector<std::vector<double>> w(dim, std::vector<double>(dim));
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c)
            w[r][c] = (std::popcount(r & c) % 2 == 0) ? 1.0 : -1.0;
    return w;
}

/// Permutation matrix that moves element l to position gray(l) (binary order
/// to Gray-code order).
inline std::vector<std::vector<double>> dense_gray(std::size_t k)
{
    const std::size_t dim = std::size_t{1} << k;
    std::vector<std::vector<double>> p(dim, std::vector<double>(dim));
    for (std::size_t l = 0; l < dim; ++l) p[l ^ (l >> 1)][l] = 1.0;
    return p;
}

inline std::vector<double> mat_vec(const std::vector<std::vector<double>>& m,
                                   const std::vector<double>& v)
{
    std::vector<double> out(m.size(), 0.0);
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < v.size(); ++c) out[r] += m[r][c] * v[c];
    return out;
}

/// Gaussian elimination with partial pivoting; good enough for the tiny dense
/// systems the angle tests solve.
inline std::vector<double> dense_solve(std::vector<std::vector<double>> m, std::vector<double> rhs)
{
    const std::size_t dim = rhs.size();
    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < dim; ++r)
            if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
        std::swap(m[col], m[pivot]);
        std::swap(rhs[col], rhs[pivot]);
        for (std::size_t r = col + 1; r < dim; ++r) {
            const double f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < dim; ++c) m[r][c] -= f * m[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    std::vector<double> x(dim, 0.0);
    for (std::size_t r = dim; r-- > 0;) {
        double acc = rhs[r];
        for (std::size_t c = r + 1; c < dim; ++c) acc -= m[r][c] * x[c];
        x[r] = acc / m[r][r];
    }
    return x;
}

inline ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b)
{
    ComplexMatrix out(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            const Complex aik = a.at(i, k);
            if (aik == Complex{}) continue;
            for (std::size_t j = 0; j < b.cols; ++j) out.at(i, j) += aik * b.at(k, j);
        }
    return out;
}

/// Dense matrix of one gate on an m-qubit register (qubit 0 = most
/// significant bit), assembled entry by entry.
inline ComplexMatrix gate_matrix(const fable::Gate& g, std::size_t m)
{
    const std::size_t dim = std::size_t{1} << m;
    const auto mask_of = [m](std::size_t q) { return std::size_t{1} << (m - 1 - q); };
    ComplexMatrix u(dim, dim);

    if (g.kind == fable::GateKind::Cnot) {
        const std::size_t cmask = mask_of(g.control);
        const std::size_t tmask = mask_of(g.target);
        for (std::size_t j = 0; j < dim; ++j) u.at((j & cmask) ? (j ^ tmask) : j, j) = 1.0;
        return u;
    }
    if (g.kind == fable::GateKind::Swap) {
        const std::size_t amask = mask_of(g.target);
        const std::size_t bmask = mask_of(g.second);
        for (std::size_t j = 0; j < dim; ++j) {
            const bool a = j & amask;
            const bool b = j & bmask;
            std::size_t out = j & ~(amask | bmask);
            if (a) out |= bmask;
            if (b) out |= amask;
            u.at(out, j) = 1.0;
        }
        return u;
    }

    Complex cell[2][2];
    if (g.kind == fable::GateKind::Hadamard) {
        const double s = 1.0 / std::sqrt(2.0);
        cell[0][0] = s, cell[0][1] = s, cell[1][0] = s, cell[1][1] = -s;
    } else if (g.kind == fable::GateKind::RotY) {
        const double c = std::cos(g.angle / 2.0), s = std::sin(g.angle / 2.0);
        cell[0][0] = c, cell[0][1] = -s, cell[1][0] = s, cell[1][1] = c;
    } else {
        cell[0][0] = std::polar(1.0, -g.angle / 2.0), cell[0][1] = 0.0;
        cell[1][0] = 0.0, cell[1][1] = std::polar(1.0, g.angle / 2.0);
    }
    const std::size_t tmask = mask_of(g.target);
    for (std::size_t j = 0; j < dim; ++j) {
        const std::size_t row0 = j & ~tmask;
        const std::size_t bit = (j & tmask) ? 1 : 0;
        u.at(row0, j) = cell[0][bit];
        u.at(row0 | tmask, j) = cell[1][bit];
    }
    return u;
}

/// Product of the gate matrices, first gate applied first.
inline ComplexMatrix gate_list_unitary(const std::vector<fable::Gate>& gates, std::size_t m)
{
    ComplexMatrix u = ComplexMatrix::identity(std::size_t{1} << m);
    for (const fable::Gate& g : gates) u = mat_mul(gate_matrix(g, m), u);
    return u;
}

/// The operator a uniformly controlled rotation must implement, built the
/// naive way: one fully controlled rotation per control bitstring. Target is
/// qubit 0 (most significant bit), controls follow, so control state x pairs
/// basis indices x and x + 2^k. `full_angles` holds the doubled rotation angle
/// per control state.
inline ComplexMatrix controlled_rotation_oracle(const std::vector<double>& full_angles,
                                                fable::GateKind kind, std::size_t k)
{
    const std::size_t states = std::size_t{1} << k;
    ComplexMatrix u(2 * states, 2 * states);
    for (std::size_t x = 0; x < states; ++x) {
        const double half = full_angles[x] / 2.0;
        if (kind == fable::GateKind::RotY) {
            u.at(x, x) = std::cos(half);
            u.at(x, x + states) = -std::sin(half);
            u.at(x + states, x) = std::sin(half);
            u.at(x + states, x + states) = std::cos(half);
        } else {
            u.at(x, x) = std::polar(1.0, -half);
            u.at(x + states, x + states) = std::polar(1.0, half);
        }
    }
    return u;
}

/// Per-control-state angles a UCR with per-slot half-angles realizes,
/// computed with dense matrices: effective = W_k (P_G theta_hat).
inline std::vector<double> effective_angles_dense(const std::vector<double>& half_angles)
{
    std::size_t k = 0;
    while ((std::size_t{1} << k) < half_angles.size()) ++k;
    return mat_vec(dense_walsh(k), mat_vec(dense_gray(k), half_angles));
}

/// Largest singular value through a full Jacobi eigendecomposition of A^H A.
inline double jacobi_spectral_norm(const ComplexMatrix& a)
{
    const std::size_t dim = a.cols;
    ComplexMatrix h(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            Complex acc = 0.0;
            for (std::size_t k = 0; k < a.rows; ++k) acc += std::conj(a.at(k, i)) * a.at(k, j);
            h.at(i, j) = acc;
        }

    for (std::size_t sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < dim; ++p)
            for (std::size_t q = p + 1; q < dim; ++q) off += std::norm(h.at(p, q));
        if (off < 1e-30) break;

        for (std::size_t p = 0; p < dim; ++p)
            for (std::size_t q = p + 1; q < dim; ++q) {
                const Complex hpq = h.at(p, q);
                if (std::abs(hpq) < 1e-300) continue;
                const double app = h.at(p, p).real();
                const double aqq = h.at(q, q).real();
                const double absq = std::abs(hpq);
                const Complex phase = hpq / absq;
                const double tau = (aqq - app) / (2.0 * absq);
                const double t = (tau >= 0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // Columns p and q rotate by [[c, s*phase], [-s*conj(phase), c]].
                for (std::size_t r = 0; r < dim; ++r) {
                    const Complex hrp = h.at(r, p);
                    const Complex hrq = h.at(r, q);
                    h.at(r, p) = c * hrp - s * std::conj(phase) * hrq;
                    h.at(r, q) = s * phase * hrp + c * hrq;
                }
                for (std::size_t r = 0; r < dim; ++r) {
                    const Complex hpr = h.at(p, r);
                    const Complex hqr = h.at(q, r);
                    h.at(p, r) = c * hpr - s * phase * hqr;
                    h.at(q, r) = s * std::conj(phase) * hpr + c * hqr;
                }
            }
    }
    double max_eig = 0.0;
    for (std::size_t i = 0; i < dim; ++i) max_eig = std::max(max_eig, h.at(i, i).real());
    return std::sqrt(std::max(0.0, max_eig));
}

/// Random matrix with entries in the closed unit disk (real interval or
/// complex disk).
inline ComplexMatrix random_unit_disk_matrix(std::size_t dim, bool complex_entries,
                                             std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    ComplexMatrix m(dim, dim);
    for (Complex& v : m.data) {
        if (!complex_entries) {
            v = dist(rng);
        } else {
            double re = 0.0, im = 0.0;
            do {
                re = dist(rng);
                im = dist(rng);
            } while (re * re + im * im > 1.0);
            v = Complex(re, im);
        }
    }
    return m;
}

/// The matrix query operation built entrywise from its block structure. For
/// real data the flag-qubit action is the plain cos/sin rotation with
/// cos = a_ij; with a phase layer it is the magnitude/phase product, mapping
/// |0>|i>|j> to (a_ij |0> + sqrt(1 - |a_ij|^2) e^{-i arg a_ij} |1>) |i>|j>.
inline ComplexMatrix matrix_query_oracle(const ComplexMatrix& a, bool phase_layer)
{
    const std::size_t dim = a.rows;
    const std::size_t states = dim * dim;
    ComplexMatrix u(2 * states, 2 * states);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            const std::size_t l = i * dim + j;
            const Complex v = a.at(i, j);
            if (!phase_layer) {
                const double c = std::clamp(v.real(), -1.0, 1.0);
                const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
                u.at(l, l) = c;
                u.at(l, l + states) = -s;
                u.at(l + states, l) = s;
                u.at(l + states, l + states) = c;
                continue;
            }
            const double mag = std::min(1.0, std::abs(v));
            const double s = std::sqrt(std::max(0.0, 1.0 - mag * mag));
            const Complex phase = (mag == 0.0) ? Complex{1.0} : v / std::abs(v);
            u.at(l, l) = v;
            u.at(l, l + states) = -s * phase;
            u.at(l + states, l) = s * std::conj(phase);
            u.at(l + states, l + states) = std::conj(v);
        }
    return u;
}

} // namespace oracles
