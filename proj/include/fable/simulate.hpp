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
#include <string>
#include <utility>
#include <vector>

#include "fable/circuit.hpp"
#include "fable/errors.hpp"
#include "fable/linalg.hpp"

namespace fable {

/// Hard cap on simulated registers: 2^21 amplitudes is desk-scale memory.
inline constexpr std::size_t kMaxSimulatedQubits = 21;

/// Exact amplitude-level register state. Qubit 0 holds the most significant
/// bit of a basis index, so the flag-and-row ancillas of a block-encoding
/// circuit occupy the leading bits and the encoded block is the leading
/// principal block of the circuit unitary.
class StateVector {
  public:
    explicit StateVector(std::size_t num_qubits, std::size_t basis_index = 0)
        : num_qubits_(check_qubits(num_qubits)),
          amplitudes_(std::size_t{1} << num_qubits, Complex{})
    {
        if (basis_index >= amplitudes_.size())
            throw Error("basis state index out of range");
        amplitudes_[basis_index] = 1.0;
    }

    StateVector(std::size_t num_qubits, ComplexVector amplitudes)
        : num_qubits_(check_qubits(num_qubits)), amplitudes_(std::move(amplitudes))
    {
        if (amplitudes_.size() != (std::size_t{1} << num_qubits_))
            throw Error("amplitude count must be 2^num_qubits");
    }

    std::size_t num_qubits() const { return num_qubits_; }
    const ComplexVector& amplitudes() const { return amplitudes_; }
    Complex amplitude(std::size_t index) const { return amplitudes_[index]; }

    double norm() const
    {
        double sum = 0.0;
        for (const Complex& a : amplitudes_) sum += std::norm(a);
        return std::sqrt(sum);
    }

    void apply(const Gate& g)
    {
        switch (g.kind) {
            case GateKind::Hadamard: apply_hadamard(g.target); break;
            case GateKind::RotY: apply_roty(g.target, g.angle); break;
            case GateKind::RotZ: apply_rotz(g.target, g.angle); break;
            case GateKind::Cnot: apply_cnot(g.control, g.target); break;
            case GateKind::Swap: apply_swap(g.target, g.second); break;
        }
    }

  private:
    static std::size_t check_qubits(std::size_t num_qubits)
    {
        if (num_qubits == 0) throw Error("register needs at least one qubit");
        if (num_qubits > kMaxSimulatedQubits)
            throw ResourceError("simulation is capped at " +
                                std::to_string(kMaxSimulatedQubits) + " qubits");
        return num_qubits;
    }

    std::size_t bit_mask(std::size_t qubit) const
    {
        if (qubit >= num_qubits_) throw Error("qubit index out of range");
        return std::size_t{1} << (num_qubits_ - 1 - qubit);
    }

    template <typename PairOp> void for_each_pair(std::size_t mask, PairOp&& op)
    {
        const std::size_t size = amplitudes_.size();
        for (std::size_t base = 0; base < size; ++base) {
            if (base & mask) continue;
            op(amplitudes_[base], amplitudes_[base | mask]);
        }
    }

    void apply_hadamard(std::size_t qubit)
    {
        const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
        for_each_pair(bit_mask(qubit), [&](Complex& a0, Complex& a1) {
            const Complex x = a0;
            const Complex y = a1;
            a0 = (x + y) * inv_sqrt2;
            a1 = (x - y) * inv_sqrt2;
        });
    }

    void apply_roty(std::size_t qubit, double angle)
    {
        const double c = std::cos(angle / 2.0);
        const double s = std::sin(angle / 2.0);
        for_each_pair(bit_mask(qubit), [&](Complex& a0, Complex& a1) {
            const Complex x = a0;
            const Complex y = a1;
            a0 = c * x - s * y;
            a1 = s * x + c * y;
        });
    }

    void apply_rotz(std::size_t qubit, double angle)
    {
        const Complex lower = std::polar(1.0, -angle / 2.0);
        const Complex upper = std::polar(1.0, angle / 2.0);
        for_each_pair(bit_mask(qubit), [&](Complex& a0, Complex& a1) {
            a0 *= lower;
            a1 *= upper;
        });
    }

    void apply_cnot(std::size_t control, std::size_t target)
    {
        const std::size_t cmask = bit_mask(control);
        const std::size_t tmask = bit_mask(target);
        const std::size_t size = amplitudes_.size();
        for (std::size_t idx = 0; idx < size; ++idx)
            if ((idx & cmask) && !(idx & tmask))
                std::swap(amplitudes_[idx], amplitudes_[idx | tmask]);
    }

    void apply_swap(std::size_t a, std::size_t b)
    {
        const std::size_t amask = bit_mask(a);
        const std::size_t bmask = bit_mask(b);
        const std::size_t size = amplitudes_.size();
        for (std::size_t idx = 0; idx < size; ++idx)
            if ((idx & amask) && !(idx & bmask))
                std::swap(amplitudes_[idx], amplitudes_[(idx & ~amask) | bmask]);
    }

    std::size_t num_qubits_;
    ComplexVector amplitudes_;
};

/// Pure form of gate application.
inline StateVector apply_gate(StateVector state, const Gate& g)
{
    state.apply(g);
    return state;
}

/// Run the circuit left to right on a copy of the input state.
inline StateVector run(const Circuit& c, StateVector input)
{
    if (input.num_qubits() != c.num_qubits)
        throw Error("state and circuit qubit counts differ");
    for (const Gate& g : c.gates) input.apply(g);
    return input;
}

/// Extract the encoded block: column j is the leading 2^n amplitudes of the
/// circuit run on the basis state with all ancillas zero and signal j. One
/// statevector per column, never the full circuit unitary.
inline ComplexMatrix extract_block(const Circuit& c, std::size_t n)
{
    if (c.num_qubits != 2 * n + 1)
        throw Error("block extraction expects a 2n+1 qubit register");
    const std::size_t dim = std::size_t{1} << n;
    ComplexMatrix block(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
        StateVector column = run(c, StateVector(c.num_qubits, j));
        for (std::size_t i = 0; i < dim; ++i) block.at(i, j) = column.amplitude(i);
    }
    return block;
}

/// Error certificate for one encoding run.
struct EncodingReport {
    double alpha = 1.0;
    std::size_t ancillas = 0;
    double epsilon_spectral = 0.0;
    double epsilon_frobenius = 0.0;
    double max_entry_error = 0.0;
    double error_bound = 0.0; // N^3 * delta_c
    bool passed = false;
};

/// Tolerances for declaring a verification run passed: exact encodings must
/// sit at roundoff; thresholded ones must respect the cubic-size bound.
inline constexpr double kExactEncodingTol = 1e-10;
inline constexpr double kBoundSlack = 1e-9;

/// Simulate the circuit, extract the block, and compare the rescaled block
/// against the target matrix in spectral, Frobenius, and max-entry norms.
inline EncodingReport verify_encoding(const Circuit& c, const ComplexMatrix& a, double delta_c)
{
    const std::size_t n = a.encoding_qubits();
    const double alpha = static_cast<double>(std::size_t{1} << n);
    const ComplexMatrix block = extract_block(c, n);

    ComplexMatrix diff(a.rows, a.cols);
    double max_entry = 0.0;
    for (std::size_t idx = 0; idx < a.data.size(); ++idx) {
        diff.data[idx] = a.data[idx] - alpha * block.data[idx];
        max_entry = std::max(max_entry, std::abs(diff.data[idx]));
    }

    EncodingReport report;
    report.alpha = alpha;
    report.ancillas = n + 1;
    report.epsilon_spectral = spectral_norm(diff);
    report.epsilon_frobenius = frobenius_norm(diff);
    report.max_entry_error = max_entry;
    const double dim = static_cast<double>(a.rows);
    report.error_bound = dim * dim * dim * delta_c;
    report.passed = (delta_c > 0.0)
                        ? report.epsilon_spectral <= report.error_bound + kBoundSlack
                        : report.epsilon_spectral <= kExactEncodingTol;
    return report;
}

} // namespace fable
