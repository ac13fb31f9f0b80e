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

#include "eqgan/noise.h"

#include <cmath>
#include <stdexcept>

namespace eqgan {

NoiseModel NoiseModel::disabled() {
    NoiseModel m;
    m.enabled = false;
    return m;
}

void NoiseModel::validate() const {
    for (double v : {single_qubit_mu, single_qubit_sigma, two_qubit_mu, two_qubit_sigma}) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("noise parameters must be finite");
        }
    }
    if (single_qubit_sigma < 0 || two_qubit_sigma < 0) {
        throw std::invalid_argument("noise sigmas must be non-negative");
    }
}

GateOp sample_error_gate(const GateOp &gate, const NoiseModel &model, Rng &rng) {
    if (!model.enabled) {
        throw std::logic_error("sample_error_gate called with a disabled noise model");
    }
    if (gate.arity() == 1) {
        const double eps = sample_normal(rng, model.single_qubit_mu, model.single_qubit_sigma);
        const GateKind axis = gate.kind == GateKind::H ? GateKind::RZ : gate.kind;
        return GateOp::bound(axis, eps, gate.qubits[0]);
    }
    const double eps = sample_normal(rng, model.two_qubit_mu, model.two_qubit_sigma);
    return GateOp::bound(parametrized_equivalent(gate.kind), eps, gate.qubits[0], gate.qubits[1]);
}

Circuit inject_noise(const Circuit &circuit, const NoiseModel &model, Rng &rng) {
    if (!model.enabled) {
        return circuit;
    }
    Circuit noisy(circuit.num_qubits());
    noisy.reserve_slots(circuit.param_count());
    for (const auto &op : circuit.ops()) {
        noisy.append(op);
        noisy.append(sample_error_gate(op, model, rng));
    }
    return noisy;
}

}  // namespace eqgan
