// Copyright 2026 The eqgan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "eqgan/simulator.h"

#include <stdexcept>
#include <string>

namespace eqgan {

namespace {

void apply_1q(std::span<Complex> amps, int q, const Matrix2 &m) {
    const std::size_t stride = std::size_t{1} << q;
    const std::size_t n = amps.size();
    for (std::size_t base = 0; base < n; base += 2 * stride) {
        for (std::size_t j = base; j < base + stride; ++j) {
            const Complex a0 = amps[j];
            const Complex a1 = amps[j + stride];
            amps[j] = m[0] * a0 + m[1] * a1;
            amps[j + stride] = m[2] * a0 + m[3] * a1;
        }
    }
}

void apply_1q_diagonal(std::span<Complex> amps, int q, Complex d0, Complex d1) {
    const std::size_t mask = std::size_t{1} << q;
    for (std::size_t j = 0; j < amps.size(); ++j) {
        amps[j] *= (j & mask) ? d1 : d0;
    }
}

constexpr std::size_t insert_zero_bit(std::size_t k, int pos) {
    const std::size_t low = k & ((std::size_t{1} << pos) - 1);
    return ((k >> pos) << (pos + 1)) | low;
}

// Calls fn(i) for every basis index with bits `lo` and `hi` cleared (lo < hi).
template <typename Fn>
void for_each_pair_base(std::size_t n, int lo, int hi, Fn &&fn) {
    for (std::size_t k = 0; k < n / 4; ++k) {
        fn(insert_zero_bit(insert_zero_bit(k, lo), hi));
    }
}

void apply_2q(std::span<Complex> amps, int q0, int q1, const Matrix4 &m) {
    const std::size_t m0 = std::size_t{1} << q0;
    const std::size_t m1 = std::size_t{1} << q1;
    for_each_pair_base(amps.size(), std::min(q0, q1), std::max(q0, q1), [&](std::size_t i) {
        const std::size_t idx[4] = {i, i | m0, i | m1, i | m0 | m1};
        const Complex a[4] = {amps[idx[0]], amps[idx[1]], amps[idx[2]], amps[idx[3]]};
        for (int r = 0; r < 4; ++r) {
            amps[idx[r]] = m[4 * r] * a[0] + m[4 * r + 1] * a[1] + m[4 * r + 2] * a[2] + m[4 * r + 3] * a[3];
        }
    });
}

void apply_controlled_phase(std::span<Complex> amps, int q0, int q1, Complex phase) {
    const std::size_t both = (std::size_t{1} << q0) | (std::size_t{1} << q1);
    for (std::size_t j = 0; j < amps.size(); ++j) {
        if ((j & both) == both) {
            amps[j] *= phase;
        }
    }
}

void apply_cnot(std::span<Complex> amps, int control, int target) {
    const std::size_t cm = std::size_t{1} << control;
    const std::size_t tm = std::size_t{1} << target;
    for (std::size_t j = 0; j < amps.size(); ++j) {
        if ((j & cm) && !(j & tm)) {
            std::swap(amps[j], amps[j | tm]);
        }
    }
}

void apply_resolved(StateVector &state, const GateOp &gate, double angle) {
    auto amps = state.mutable_amplitudes();
    for (int k = 0; k < gate.arity(); ++k) {
        if (gate.qubits[k] < 0 || gate.qubits[k] >= state.num_qubits()) {
            throw std::out_of_range(
                std::string(gate_name(gate.kind)) + " on qubit " + std::to_string(gate.qubits[k]) + " of a " +
                std::to_string(state.num_qubits()) + "-qubit state");
        }
    }
    const int q0 = gate.qubits[0];
    const int q1 = gate.qubits[1];
    switch (gate.kind) {
        case GateKind::RZ:
            apply_1q_diagonal(amps, q0, std::polar(1.0, -angle / 2), std::polar(1.0, angle / 2));
            return;
        case GateKind::H:
        case GateKind::RX:
        case GateKind::RY:
            apply_1q(amps, q0, single_qubit_matrix(gate.kind, angle));
            return;
        case GateKind::CZ:
            apply_controlled_phase(amps, q0, q1, -1.0);
            return;
        case GateKind::PCZ:
            apply_controlled_phase(amps, q0, q1, std::polar(1.0, angle));
            return;
        case GateKind::CNOT:
            apply_cnot(amps, q0, q1);
            return;
        case GateKind::ISWAP:
        case GateKind::PCNOT:
        case GateKind::PISWAP:
            apply_2q(amps, q0, q1, two_qubit_matrix(gate.kind, angle));
            return;
    }
}

}  // namespace

void apply_gate(StateVector &state, const GateOp &gate, std::optional<double> angle_binding) {
    double angle = 0.0;
    if (gate.slot()) {
        if (!angle_binding) {
            throw std::invalid_argument(std::string(gate_name(gate.kind)) + ": symbolic gate needs an angle binding");
        }
        angle = *angle_binding;
    } else {
        if (angle_binding) {
            throw std::invalid_argument(std::string(gate_name(gate.kind)) + ": gate does not accept an angle binding");
        }
        angle = gate.bound_angle().value_or(0.0);
    }
    apply_resolved(state, gate, angle);
}

void apply_circuit(StateVector &state, const Circuit &circuit, std::span<const double> params) {
    if (params.size() != circuit.param_count()) {
        throw std::invalid_argument(
            "circuit expects " + std::to_string(circuit.param_count()) + " parameters, got " +
            std::to_string(params.size()));
    }
    if (state.num_qubits() != circuit.num_qubits()) {
        throw std::invalid_argument("circuit and state qubit counts differ");
    }
    for (const auto &op : circuit.ops()) {
        const auto slot = op.slot();
        apply_resolved(state, op, slot ? params[*slot] : op.bound_angle().value_or(0.0));
    }
}

StateVector run_circuit(const Circuit &circuit, std::span<const double> params) {
    StateVector state = StateVector::zero(circuit.num_qubits());
    apply_circuit(state, circuit, params);
    return state;
}

StateVector run_circuit(const Circuit &circuit, std::span<const double> params, const NoiseModel &noise, Rng &rng) {
    if (!noise.enabled) {
        return run_circuit(circuit, params);
    }
    return run_circuit(inject_noise(circuit, noise, rng), params);
}

}  // namespace eqgan
