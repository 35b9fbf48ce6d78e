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
#include <map>
#include <vector>

#include "fable/angles.hpp"
#include "fable/circuit.hpp"
#include "fable/errors.hpp"

namespace fable {

/// Which circuit angles survive thresholding at cutoff delta_c.
struct CompressionMask {
    std::size_t n = 0;
    std::vector<bool> keep_theta;
    std::vector<bool> keep_phi;
    double threshold = 0.0;

    static CompressionMask keep_all(std::size_t n, bool is_complex)
    {
        CompressionMask mask;
        mask.n = n;
        const std::size_t len = std::size_t{1} << (2 * n);
        mask.keep_theta.assign(len, true);
        mask.keep_phi.assign(len, is_complex);
        return mask;
    }
};

/// Outcome of the two compression passes, per rotation layer and in total.
struct CompressionReport {
    std::size_t rotations_removed = 0;
    std::size_t cnots_removed = 0;
    std::size_t rotations_kept = 0;
    std::size_t cnots_kept = 0;
    double roty_fraction = 0.0;
    double rotz_fraction = 0.0;
    double cnot_fraction = 0.0;
    double threshold = 0.0;
};

/// Keep an angle iff its magnitude exceeds delta_c. The comparison is on
/// |angle|: removed gates then perturb each angle by at most delta_c, which is
/// what the encoding error bound assumes.
inline CompressionMask threshold_mask(const AngleSet& angles, double delta_c)
{
    if (delta_c < 0.0) throw Error("compression threshold must be nonnegative");
    if (angles.theta_circuit.empty())
        throw Error("circuit angles must be solved before thresholding");

    CompressionMask mask;
    mask.n = angles.n;
    mask.threshold = delta_c;
    mask.keep_theta.resize(angles.theta_circuit.size());
    mask.keep_phi.assign(angles.phi_circuit.size(), false);
    for (std::size_t l = 0; l < angles.theta_circuit.size(); ++l)
        mask.keep_theta[l] = std::abs(angles.theta_circuit[l]) > delta_c;
    if (angles.is_complex)
        for (std::size_t l = 0; l < angles.phi_circuit.size(); ++l)
            mask.keep_phi[l] = std::abs(angles.phi_circuit[l]) > delta_c;
    return mask;
}

/// Parity-cancel runs of consecutive CNOTs that share a target: an even
/// number of CNOTs with the same control vanishes, an odd number collapses to
/// one. Survivors are emitted in ascending control order; everything else
/// passes through unchanged.
inline std::vector<Gate> parity_cancel(const std::vector<Gate>& gates)
{
    std::vector<Gate> out;
    out.reserve(gates.size());

    std::map<std::size_t, std::size_t> run_counts;
    std::size_t run_target = 0;
    bool in_run = false;

    const auto flush = [&]() {
        if (!in_run) return;
        for (const auto& [control, count] : run_counts)
            if (count % 2 == 1) out.push_back(Gate::cnot(control, run_target));
        run_counts.clear();
        in_run = false;
    };

    for (const Gate& g : gates) {
        if (g.kind == GateKind::Cnot) {
            if (in_run && g.target != run_target) flush();
            in_run = true;
            run_target = g.target;
            ++run_counts[g.control];
        } else {
            flush();
            out.push_back(g);
        }
    }
    flush();
    return out;
}

/// Masked UCR synthesis followed by parity cancellation. The result is
/// exactly the UCR of the masked angle vector (zeros substituted).
inline std::pair<std::vector<Gate>, CompressionReport>
compress_ucr(const std::vector<double>& angles, const std::vector<bool>& keep, GateKind kind,
             std::size_t target, const std::vector<std::size_t>& controls)
{
    if (keep.size() != angles.size()) throw Error("mask length must match angle count");
    const std::size_t k = controls.size();
    if (angles.size() != (std::size_t{1} << k))
        throw Error("angle count must be 2^k for k controls");

    std::vector<Gate> gates;
    std::size_t kept_rotations = 0;
    if (k == 0) {
        if (keep[0]) {
            gates.push_back(Gate{kind, target, 0, 0, 2.0 * angles[0]});
            ++kept_rotations;
        }
    } else {
        for (std::size_t l = 0; l < angles.size(); ++l) {
            if (keep[l]) {
                gates.push_back(Gate{kind, target, 0, 0, 2.0 * angles[l]});
                ++kept_rotations;
            }
            const std::size_t bit = detail::gray_step_bit(l, k);
            gates.push_back(Gate::cnot(controls[k - 1 - bit], target));
        }
    }

    const std::size_t full_cnots = (k == 0) ? 0 : angles.size();
    std::vector<Gate> reduced = parity_cancel(gates);

    CompressionReport report;
    report.rotations_kept = kept_rotations;
    report.rotations_removed = angles.size() - kept_rotations;
    report.cnots_kept = reduced.size() - kept_rotations;
    report.cnots_removed = full_cnots - report.cnots_kept;
    return {std::move(reduced), report};
}

} // namespace fable
