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
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "fable/errors.hpp"
#include "fable/linalg.hpp"

namespace fable {

/// Oracle angles (one per matrix entry, index l = i*N + j) together with the
/// transformed per-gate circuit angles. All four vectors have length 4^n.
/// Angles are stored as half-angles; the gate level doubles them exactly once.
struct AngleSet {
    std::size_t n = 0;
    bool is_complex = false;
    std::vector<double> theta_oracle;
    std::vector<double> phi_oracle;
    std::vector<double> theta_circuit;
    std::vector<double> phi_circuit;
};

/// Imaginary parts at or below this magnitude are treated as zero when
/// deciding whether a phase-rotation layer is needed.
inline constexpr double kComplexDetectionTol = 1e-14;

/// Slack allowed on |a_ij| <= 1 before input is rejected as unnormalized.
inline constexpr double kUnitDiskSlack = 1e-12;

inline std::size_t gray_code(std::size_t i) { return i ^ (i >> 1); }

/// Unnormalized Walsh-Hadamard transform, in place: v <- H^{(x) k} v with
/// H = [[1,1],[1,-1]]. Applying it twice scales by 2^k.
inline void fwht_inplace(std::span<double> v)
{
    if (!is_power_of_two(v.size()))
        throw Error("transform length must be a power of two");
    const std::size_t len = v.size();
    for (std::size_t h = 1; h < len; h *= 2) {
        for (std::size_t i = 0; i < len; i += h * 2) {
            for (std::size_t j = i; j < i + h; ++j) {
                const double x = v[j];
                const double y = v[j + h];
                v[j] = x + y;
                v[j + h] = x - y;
            }
        }
    }
}

inline std::vector<double> fwht(std::vector<double> v)
{
    fwht_inplace(v);
    return v;
}

enum class GrayDirection {
    Forward, // out[l] = in[gray(l)]
    Inverse, // out[gray(l)] = in[l]
};

inline std::vector<double> gray_permute(const std::vector<double>& v, GrayDirection direction)
{
    if (!is_power_of_two(v.size()))
        throw Error("permutation length must be a power of two");
    std::vector<double> out(v.size());
    for (std::size_t l = 0; l < v.size(); ++l) {
        if (direction == GrayDirection::Forward)
            out[l] = v[gray_code(l)];
        else
            out[gray_code(l)] = v[l];
    }
    return out;
}

/// Rotation angles the circuit realizes for each control basis state: the
/// state-x entry is sum_l (-1)^<gray(l),x> v[l]. This is the forward map the
/// circuit-angle solve inverts.
inline std::vector<double> effective_ucr_angles(const std::vector<double>& v)
{
    return fwht(gray_permute(v, GrayDirection::Inverse));
}

/// Oracle angles from matrix data. Real inputs use theta = arccos(a_ij) and a
/// zero phase layer; complex inputs split each entry into magnitude and phase.
inline AngleSet oracle_angles(const ComplexMatrix& a)
{
    const std::size_t n = a.encoding_qubits();
    const std::size_t len = a.rows * a.cols;

    double max_imag = 0.0;
    for (const Complex& v : a.data) {
        if (std::abs(v) > 1.0 + kUnitDiskSlack)
            throw EncodingError("matrix entries must lie in the closed unit disk; prescale first");
        max_imag = std::max(max_imag, std::abs(v.imag()));
    }

    AngleSet angles;
    angles.n = n;
    angles.is_complex = max_imag > kComplexDetectionTol;
    angles.theta_oracle.resize(len);
    angles.phi_oracle.assign(len, 0.0);

    for (std::size_t l = 0; l < len; ++l) {
        const Complex v = a.data[l];
        if (angles.is_complex) {
            const double mag = std::min(std::abs(v), 1.0);
            angles.theta_oracle[l] = std::acos(mag);
            // The phase of a zero entry is pinned to 0 so it stays compressible.
            angles.phi_oracle[l] = (mag == 0.0) ? 0.0 : -std::arg(v);
        } else {
            angles.theta_oracle[l] = std::acos(std::clamp(v.real(), -1.0, 1.0));
        }
    }
    return angles;
}

/// Solve the Gray-code/Walsh-Hadamard linear system for the per-gate angles.
/// The transform is its own inverse up to scale and the permutation inverts by
/// transposition, so the solve is a permuted transform scaled by 1/4^n.
inline AngleSet circuit_angles(AngleSet angles)
{
    const std::size_t len = angles.theta_oracle.size();
    if (len == 0 || angles.phi_oracle.size() != len)
        throw Error("oracle angles must be populated before the circuit solve");
    const double scale = 1.0 / static_cast<double>(len);

    angles.theta_circuit = gray_permute(fwht(angles.theta_oracle), GrayDirection::Forward);
    for (double& x : angles.theta_circuit) x *= scale;

    angles.phi_circuit = gray_permute(fwht(angles.phi_oracle), GrayDirection::Forward);
    for (double& x : angles.phi_circuit) x *= scale;

    return angles;
}

} // namespace fable
