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

#include "eqgan/circuit.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace eqgan {

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw std::invalid_argument("circuit qubit count " + std::to_string(num_qubits) + " out of range");
    }
}

Circuit &Circuit::append(const GateOp &op) {
    for (int k = 0; k < op.arity(); ++k) {
        if (op.qubits[k] < 0 || op.qubits[k] >= num_qubits_) {
            throw std::out_of_range(
                std::string(gate_name(op.kind)) + " on qubit " + std::to_string(op.qubits[k]) + " of a " +
                std::to_string(num_qubits_) + "-qubit circuit");
        }
    }
    if (auto s = op.slot()) {
        param_count_ = std::max(param_count_, *s + 1);
    }
    ops_.push_back(op);
    return *this;
}

void Circuit::reserve_slots(std::size_t count) {
    param_count_ = std::max(param_count_, count);
}

}  // namespace eqgan
