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

#include <cstddef>
#include <optional>
#include <vector>

#include "fable/angles.hpp"
#include "fable/circuit.hpp"
#include "fable/compress.hpp"
#include "fable/errors.hpp"
#include "fable/linalg.hpp"
#include "fable/models.hpp"

namespace fable {

/// Largest matrix the compiler will take on: 2^10 x 2^10 keeps the angle
/// vectors and gate lists at desk scale.
inline constexpr std::size_t kMaxEncodingQubits = 10;

/// Assemble the full block-encoding circuit: Hadamards on the row register, a
/// uniformly controlled RotY over both registers targeting the flag qubit (a
/// RotZ layer follows for complex data), the register swap, and the closing
/// Hadamards. When a mask is supplied the rotation layers are emitted through
/// the compression passes.
inline Circuit assemble_fable(const ComplexMatrix& a, const AngleSet& angles,
                              const std::optional<CompressionMask>& mask = std::nullopt,
                              CompressionReport* report = nullptr)
{
    const std::size_t n = a.encoding_qubits();
    const std::size_t len = std::size_t{1} << (2 * n);
    if (angles.n != n || angles.theta_circuit.size() != len)
        throw Error("angle set does not match the matrix dimension");
    if (mask && (mask->n != n || mask->keep_theta.size() != len))
        throw Error("compression mask does not match the matrix dimension");

    const QubitLayout layout = fable_layout(n);
    Circuit c;
    c.num_qubits = 2 * n + 1;
    c.ancilla_count = n + 1;
    c.subnormalization = static_cast<double>(std::size_t{1} << n);
    c.ucr_layers = angles.is_complex ? 2 : 1;

    CompressionReport total;
    total.threshold = mask ? mask->threshold : 0.0;

    for (std::size_t q : layout.row_register) c.append(Gate::h(q));

    const std::vector<std::size_t> controls = layout.controls();
    if (mask) {
        auto [gates, layer] =
            compress_ucr(angles.theta_circuit, mask->keep_theta, GateKind::RotY, layout.flag,
                         controls);
        c.append(gates);
        total.rotations_kept += layer.rotations_kept;
        total.rotations_removed += layer.rotations_removed;
        total.cnots_kept += layer.cnots_kept;
        total.cnots_removed += layer.cnots_removed;
    } else {
        c.append(synthesize_ucr(angles.theta_circuit, GateKind::RotY, layout.flag, controls));
        total.rotations_kept += len;
        total.cnots_kept += len;
    }

    if (angles.is_complex) {
        if (mask) {
            auto [gates, layer] =
                compress_ucr(angles.phi_circuit, mask->keep_phi, GateKind::RotZ, layout.flag,
                             controls);
            c.append(gates);
            total.rotations_kept += layer.rotations_kept;
            total.rotations_removed += layer.rotations_removed;
            total.cnots_kept += layer.cnots_kept;
            total.cnots_removed += layer.cnots_removed;
        } else {
            c.append(synthesize_ucr(angles.phi_circuit, GateKind::RotZ, layout.flag, controls));
            total.rotations_kept += len;
            total.cnots_kept += len;
        }
    }

    for (std::size_t k = 0; k < n; ++k)
        c.append(Gate::swap(layout.row_register[k], layout.column_register[k]));
    for (std::size_t q : layout.row_register) c.append(Gate::h(q));

    const GateStats stats = circuit_gate_stats(c);
    total.roty_fraction = stats.roty_fraction;
    total.rotz_fraction = stats.rotz_fraction;
    total.cnot_fraction = stats.cnot_fraction;
    if (report) *report = total;
    return c;
}

struct EncodeOptions {
    double delta_c = 0.0;
    bool auto_scale = true;
};

/// Everything the encoding pipeline produces for one matrix.
struct EncodeResult {
    ComplexMatrix target; // the matrix actually encoded (input / scale)
    double scale = 1.0;
    AngleSet angles;
    CompressionMask mask;
    Circuit circuit;
    CompressionReport compression;
};

/// Full pipeline: prescale, oracle angles, circuit-angle solve, threshold
/// mask, circuit assembly.
inline EncodeResult encode_matrix(const ComplexMatrix& a, const EncodeOptions& options = {})
{
    if (a.encoding_qubits() > kMaxEncodingQubits)
        throw ResourceError("encoding is capped at " + std::to_string(kMaxEncodingQubits) +
                            "-qubit matrices");
    EncodeResult result;
    if (options.auto_scale) {
        Prescaled scaled = prescale(a);
        result.target = std::move(scaled.matrix);
        result.scale = scaled.scale;
    } else {
        result.target = a;
        result.scale = 1.0;
    }
    result.angles = circuit_angles(oracle_angles(result.target));
    result.mask = threshold_mask(result.angles, options.delta_c);
    result.circuit = assemble_fable(result.target, result.angles, result.mask, &result.compression);
    return result;
}

} // namespace fable
