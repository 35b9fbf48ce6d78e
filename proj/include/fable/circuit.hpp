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
#include <string>
#include <vector>

#include "fable/errors.hpp"

namespace fable {

enum class GateKind {
    Hadamard,
    RotY,
    RotZ,
    Cnot,
    Swap,
};

/// One primitive gate. Rotation gates carry the full rotation angle (the
/// doubled oracle angle), matching hardware conventions.
struct Gate {
    GateKind kind = GateKind::Hadamard;
    std::size_t target = 0;
    std::size_t control = 0; // Cnot only
    std::size_t second = 0;  // Swap only
    double angle = 0.0;      // RotY / RotZ only

    static Gate h(std::size_t q) { return {GateKind::Hadamard, q, 0, 0, 0.0}; }
    static Gate ry(std::size_t q, double angle) { return {GateKind::RotY, q, 0, 0, angle}; }
    static Gate rz(std::size_t q, double angle) { return {GateKind::RotZ, q, 0, 0, angle}; }
    static Gate cnot(std::size_t control, std::size_t target)
    {
        return {GateKind::Cnot, target, control, 0, 0.0};
    }
    static Gate swap(std::size_t a, std::size_t b) { return {GateKind::Swap, a, 0, b, 0.0}; }

    friend bool operator==(const Gate&, const Gate&) = default;
};

/// Ordered gate list on a fixed qubit register. For a block-encoding circuit
/// of an n-qubit matrix: 2n+1 qubits, n+1 ancillas, subnormalization 2^n.
struct Circuit {
    std::size_t num_qubits = 0;
    std::vector<Gate> gates;
    double subnormalization = 1.0;
    std::size_t ancilla_count = 0;
    std::size_t ucr_layers = 0; // rotation layers the oracle was built from

    void append(const Gate& g) { gates.push_back(g); }
    void append(const std::vector<Gate>& gs) { gates.insert(gates.end(), gs.begin(), gs.end()); }
};

/// Wire assignment: the flag ancilla on top, then the row register, then the
/// column register. Qubit 0 is the most significant bit of a basis index.
struct QubitLayout {
    std::size_t flag = 0;
    std::vector<std::size_t> row_register;
    std::vector<std::size_t> column_register;

    std::vector<std::size_t> controls() const
    {
        std::vector<std::size_t> all = row_register;
        all.insert(all.end(), column_register.begin(), column_register.end());
        return all;
    }
};

inline QubitLayout fable_layout(std::size_t n)
{
    QubitLayout layout;
    layout.flag = 0;
    for (std::size_t k = 0; k < n; ++k) layout.row_register.push_back(1 + k);
    for (std::size_t k = 0; k < n; ++k) layout.column_register.push_back(n + 1 + k);
    return layout;
}

/// Throws if any gate addresses a qubit outside the register or targets a
/// qubit it also controls.
inline void validate_circuit(const Circuit& c)
{
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        const Gate& g = c.gates[i];
        const auto check = [&](std::size_t q) {
            if (q >= c.num_qubits)
                throw Error("gate " + std::to_string(i) + " addresses qubit " + std::to_string(q) +
                            " outside a " + std::to_string(c.num_qubits) + "-qubit register");
        };
        check(g.target);
        if (g.kind == GateKind::Cnot) {
            check(g.control);
            if (g.control == g.target)
                throw Error("gate " + std::to_string(i) + " controls its own target");
        }
        if (g.kind == GateKind::Swap) {
            check(g.second);
            if (g.second == g.target)
                throw Error("gate " + std::to_string(i) + " swaps a qubit with itself");
        }
    }
}

namespace detail {

/// Bit position (0 = least significant) in which consecutive Gray codes
/// differ, wrapping the final step back to code 0.
inline std::size_t gray_step_bit(std::size_t l, std::size_t k)
{
    const std::size_t len = std::size_t{1} << k;
    const std::size_t diff =
        (l ^ (l >> 1)) ^ (((l + 1) & (len - 1)) ^ (((l + 1) & (len - 1)) >> 1));
    std::size_t bit = 0;
    while ((diff >> bit) != 1) ++bit;
    return bit;
}

} // namespace detail

/// Uniformly controlled rotation: alternating rotations and CNOTs along a
/// Gray-code walk over the control register. Entry l of `angles` is the
/// half-angle for the gate in slot l; the CNOT after slot l is controlled on
/// the qubit whose Gray-code bit flips next, with bit 0 mapped to the last
/// control in the list (the bottom wire).
inline std::vector<Gate> synthesize_ucr(const std::vector<double>& angles, GateKind kind,
                                        std::size_t target,
                                        const std::vector<std::size_t>& controls)
{
    if (kind != GateKind::RotY && kind != GateKind::RotZ)
        throw Error("uniformly controlled gates must be RotY or RotZ");
    const std::size_t k = controls.size();
    if (angles.size() != (std::size_t{1} << k))
        throw Error("angle count must be 2^k for k controls");

    std::vector<Gate> gates;
    if (k == 0) {
        gates.push_back(Gate{kind, target, 0, 0, 2.0 * angles[0]});
        return gates;
    }
    gates.reserve(2 * angles.size());
    for (std::size_t l = 0; l < angles.size(); ++l) {
        gates.push_back(Gate{kind, target, 0, 0, 2.0 * angles[l]});
        const std::size_t bit = detail::gray_step_bit(l, k);
        gates.push_back(Gate::cnot(controls[k - 1 - bit], target));
    }
    return gates;
}

/// Per-kind gate counts and the compression fractions plotted against the
/// 4^n per-layer maximum.
struct GateStats {
    std::size_t hadamard = 0;
    std::size_t roty = 0;
    std::size_t rotz = 0;
    std::size_t cnot = 0;
    std::size_t swap = 0;
    double roty_fraction = 0.0;
    double rotz_fraction = 0.0;
    double cnot_fraction = 0.0;

    std::size_t total() const { return hadamard + roty + rotz + cnot + swap; }
};

/// Counts gates and, when the circuit records how many rotation layers its
/// oracle used, normalizes by 4^n per layer.
inline GateStats circuit_gate_stats(const Circuit& c)
{
    GateStats stats;
    for (const Gate& g : c.gates) {
        switch (g.kind) {
            case GateKind::Hadamard: ++stats.hadamard; break;
            case GateKind::RotY: ++stats.roty; break;
            case GateKind::RotZ: ++stats.rotz; break;
            case GateKind::Cnot: ++stats.cnot; break;
            case GateKind::Swap: ++stats.swap; break;
        }
    }
    if (c.ancilla_count >= 1 && c.num_qubits == 2 * (c.ancilla_count - 1) + 1) {
        const std::size_t n = c.ancilla_count - 1;
        const double per_layer = static_cast<double>(std::size_t{1} << (2 * n));
        const double layers = static_cast<double>(c.ucr_layers == 0 ? 1 : c.ucr_layers);
        stats.roty_fraction = static_cast<double>(stats.roty) / per_layer;
        stats.rotz_fraction = static_cast<double>(stats.rotz) / per_layer;
        stats.cnot_fraction = static_cast<double>(stats.cnot) / (per_layer * layers);
    }
    return stats;
}

} // namespace fable
