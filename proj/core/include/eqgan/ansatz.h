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

#ifndef EQGAN_ANSATZ_H
#define EQGAN_ANSATZ_H

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "eqgan/circuit.h"
#include "eqgan/rng.h"

namespace eqgan {

enum class Entangler { CNOT, CZ, ISWAP };

std::string_view entangler_name(Entangler e);
std::optional<Entangler> parse_entangler(std::string_view name);
GateKind entangler_gate(Entangler e, bool parametrized);

/// Layered generator: each layer is a Z-Y-Z Euler triple on every qubit followed
/// by the entangler on the open chain (0,1), (1,2), ..., (N-2,N-1).
struct AnsatzConfig {
    int num_qubits = 2;
    int num_layers = 1;
    Entangler entangler = Entangler::CZ;
    bool parametrized_entangler = false;

    /// Throws std::invalid_argument on zero layers or qubits out of range.
    void validate() const;

    bool operator==(const AnsatzConfig &) const = default;
};

/// L * (3N + (N-1) if parametrized).
std::size_t param_count(const AnsatzConfig &config);

/// Parameter layout is layer-major; inside a layer q0:[z,y,z], q1:[z,y,z], ...,
/// then one angle per entangled pair when the entangler is parametrized.
Circuit build_generator(const AnsatzConfig &config);

/// Uniform [0, 2pi) per slot.
std::vector<double> init_params(const AnsatzConfig &config, Rng &rng);

}  // namespace eqgan

#endif
