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

#include <doctest.h>

#include <cmath>
#include <random>

#include "fable/models.hpp"

using fable::Complex;
using fable::ComplexMatrix;

namespace {

void check_hermitian(const ComplexMatrix& m, double tol = 1e-14)
{
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            CHECK(std::abs(m.at(i, j) - std::conj(m.at(j, i))) <= tol);
}

} // namespace

TEST_CASE("two-site isotropic chain matches the hand expansion")
{
    const ComplexMatrix h = fable::heisenberg_matrix({.n = 2, .jx = 1, .jy = 1, .jz = 1, .hz = 0});
    const ComplexMatrix expected(4, 4,
                                 {1, 0, 0, 0, 0, -1, 2, 0, 0, 2, -1, 0, 0, 0, 0, 1});
    REQUIRE(h.rows == 4);
    for (std::size_t idx = 0; idx < 16; ++idx) CHECK(h.data[idx] == expected.data[idx]);
}

TEST_CASE("a pure longitudinal field is diagonal")
{
    const ComplexMatrix h = fable::heisenberg_matrix({.n = 2, .jx = 0, .jy = 0, .jz = 0, .hz = 1});
    const double expected[4] = {2.0, 0.0, 0.0, -2.0};
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(h.at(i, i).real() == doctest::Approx(expected[i]));
        for (std::size_t j = 0; j < 4; ++j)
            if (i != j) CHECK(h.at(i, j) == Complex{});
    }
}

TEST_CASE("all couplings zero gives the zero matrix")
{
    const ComplexMatrix h = fable::heisenberg_matrix({.n = 3, .jx = 0, .jy = 0, .jz = 0, .hz = 0});
    for (const Complex& v : h.data) CHECK(v == Complex{});
}

TEST_CASE("spin chains are real symmetric")
{
    std::mt19937_64 rng(113);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    for (int trial = 0; trial < 4; ++trial) {
        const ComplexMatrix h = fable::heisenberg_matrix(
            {.n = 3, .jx = dist(rng), .jy = dist(rng), .jz = dist(rng), .hz = dist(rng)});
        check_hermitian(h);
        for (const Complex& v : h.data) CHECK(std::abs(v.imag()) <= 1e-14);
    }
}

TEST_CASE("spin chain caps and minimum size")
{
    CHECK_THROWS_AS((void)fable::heisenberg_matrix({.n = 1}), fable::EncodingError);
    CHECK_THROWS_AS((void)fable::heisenberg_matrix({.n = 11}), fable::ResourceError);
}

TEST_CASE("1D stencil with and without periodic wrap")
{
    const ComplexMatrix open = fable::laplacian_1d(4, false);
    const ComplexMatrix expected(4, 4,
                                 {2, -1, 0, 0, -1, 2, -1, 0, 0, -1, 2, -1, 0, 0, -1, 2});
    for (std::size_t idx = 0; idx < 16; ++idx) CHECK(open.data[idx] == expected.data[idx]);

    const ComplexMatrix periodic = fable::laplacian_1d(4, true);
    CHECK(periodic.at(0, 3) == Complex{-1.0});
    CHECK(periodic.at(3, 0) == Complex{-1.0});
    for (std::size_t i = 0; i < 4; ++i) {
        Complex row_sum = 0.0;
        for (std::size_t j = 0; j < 4; ++j) row_sum += periodic.at(i, j);
        CHECK(std::abs(row_sum) == 0.0);
    }
}

TEST_CASE("1D stencil rejects non-power-of-two grids")
{
    CHECK_THROWS_AS((void)fable::laplacian_1d(6, false), fable::EncodingError);
}

TEST_CASE("2D operator is the Kronecker sum of the 1D stencils")
{
    const ComplexMatrix l = fable::laplacian_2d(2, 2, false);
    const ComplexMatrix expected(4, 4,
                                 {4, -1, -1, 0, -1, 4, 0, -1, -1, 0, 4, -1, 0, -1, -1, 4});
    REQUIRE(l.rows == 4);
    for (std::size_t idx = 0; idx < 16; ++idx) CHECK(l.data[idx] == expected.data[idx]);
    check_hermitian(l);

    CHECK(fable::laplacian_2d(4, 2, false).rows == 8);
}

TEST_CASE("swapping the 2D grid axes permutes the operator")
{
    const ComplexMatrix a = fable::laplacian_2d(4, 2, false);
    const ComplexMatrix b = fable::laplacian_2d(2, 4, false);
    // Index (x, y) with strides (2, 1) on one side and (1, 4) on the other.
    for (std::size_t x1 = 0; x1 < 4; ++x1)
        for (std::size_t y1 = 0; y1 < 2; ++y1)
            for (std::size_t x2 = 0; x2 < 4; ++x2)
                for (std::size_t y2 = 0; y2 < 2; ++y2)
                    CHECK(a.at(x1 * 2 + y1, x2 * 2 + y2) == b.at(y1 * 4 + x1, y2 * 4 + x2));
}

TEST_CASE("2D grids above the point cap are rejected")
{
    CHECK_THROWS_AS((void)fable::laplacian_2d(64, 32, false), fable::ResourceError);
}

TEST_CASE("prescale only shrinks and reports the factor")
{
    std::mt19937_64 rng(127);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    ComplexMatrix small(2, 2, {0.5, -0.25, 0.0, 1.0});
    const fable::Prescaled unchanged = fable::prescale(small);
    CHECK(unchanged.scale == 1.0);
    CHECK(unchanged.matrix.data == small.data);

    const fable::Prescaled lap = fable::prescale(fable::laplacian_1d(8, false));
    CHECK(lap.scale == 2.0);
    CHECK(lap.matrix.at(0, 0) == Complex{1.0});
    CHECK(lap.matrix.at(0, 1) == Complex{-0.5});

    const fable::Prescaled zero = fable::prescale(ComplexMatrix::zero(4));
    CHECK(zero.scale == 1.0);

    const ComplexMatrix chain = fable::heisenberg_matrix({.n = 3, .jx = 1, .jy = 1, .jz = 1});
    double max_abs = 0.0;
    for (const Complex& v : chain.data) max_abs = std::max(max_abs, std::abs(v));
    const fable::Prescaled scaled = fable::prescale(chain);
    CHECK(scaled.scale == doctest::Approx(max_abs));
    double max_after = 0.0;
    for (const Complex& v : scaled.matrix.data) max_after = std::max(max_after, std::abs(v));
    CHECK(max_after <= 1.0 + 1e-15);
}
