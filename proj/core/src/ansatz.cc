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

#include "eqgan/ansatz.h"

#include <stdexcept>
#include <string>

namespace eqgan {

std::string_view entangler_name(Entangler e) {
    switch (e) {
        case Entangler::CNOT:
            return "CNOT";
        case Entangler::CZ:
            return "CZ";
        case Entangler::ISWAP:
            return "ISWAP";
    }
    return "?";
}

std::optional<Entangler> parse_entangler(std::string_view name) {
    for (auto e : {Entangler::CNOT, Entangler::CZ, Entangler::ISWAP}) {
        if (entangler_name(e) == name) {
            return e;
        }
    }
    return std::nullopt;
}

GateKind entangler_gate(Entangler e, bool parametrized) {
    GateKind fixed = GateKind::CNOT;
    switch (e) {
        case Entangler::CNOT:
            fixed = GateKind::CNOT;
            break;
        case Entangler::CZ:
            fixed = GateKind::CZ;
            break;
        case Entangler::ISWAP:
            fixed = GateKind::ISWAP;
            break;
    }
    return parametrized ? parametrized_equivalent(fixed) : fixed;
}

void AnsatzConfig::validate() const {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw std::invalid_argument("ansatz qubit count " + std::to_string(num_qubits) + " out of range");
    }
    if (num_layers < 1) {
        throw std::invalid_argument("ansatz needs at least one layer");
    }
}

std::size_t param_count(const AnsatzConfig &config) {
    const auto n = static_cast<std::size_t>(config.num_qubits);
    const std::size_t per_layer = 3 * n + (config.parametrized_entangler ? n - 1 : 0);
    return static_cast<std::size_t>(config.num_layers) * per_layer;
}

Circuit build_generator(const AnsatzConfig &config) {
    config.validate();
    Circuit circuit(config.num_qubits);
    const GateKind coupler = entangler_gate(config.entangler, config.parametrized_entangler);
    std::size_t slot = 0;
    for (int layer = 0; layer < config.num_layers; ++layer) {
        for (int q = 0; q < config.num_qubits; ++q) {
            circuit.append(GateOp::symbolic(GateKind::RZ, slot++, q));
            circuit.append(GateOp::symbolic(GateKind::RY, slot++, q));
            circuit.append(GateOp::symbolic(GateKind::RZ, slot++, q));
        }
        for (int q = 0; q + 1 < config.num_qubits; ++q) {
            if (config.parametrized_entangler) {
                circuit.append(GateOp::symbolic(coupler, slot++, q, q + 1));
            } else {
                circuit.append(GateOp::fixed(coupler, q, q + 1));
            }
        }
    }
    circuit.reserve_slots(slot);
    return circuit;
}

std::vector<double> init_params(const AnsatzConfig &config, Rng &rng) {
    std::vector<double> params(param_count(config));
    for (auto &p : params) {
        p = sample_angle(rng);
    }
    return params;
}

}  // namespace eqgan
