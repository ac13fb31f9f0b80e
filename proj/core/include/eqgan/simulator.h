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

#ifndef EQGAN_SIMULATOR_H
#define EQGAN_SIMULATOR_H

#include <optional>
#include <span>

#include "eqgan/circuit.h"
#include "eqgan/noise.h"
#include "eqgan/state_vector.h"

namespace eqgan {

/// Applies one gate in place.
///
/// A symbolic gate needs `angle_binding`; fixed gates and gates carrying a bound
/// angle must not get one. Throws std::invalid_argument on a missing or extra
/// binding and std::out_of_range on a qubit outside the state.
void apply_gate(StateVector &state, const GateOp &gate, std::optional<double> angle_binding = std::nullopt);

/// Evolves `state` through every op of `circuit`, resolving slots from `params`.
void apply_circuit(StateVector &state, const Circuit &circuit, std::span<const double> params);

/// |0...0> evolved through `circuit`.
StateVector run_circuit(const Circuit &circuit, std::span<const double> params);

/// Same, with a freshly sampled error gate after each op when `noise.enabled`.
StateVector run_circuit(const Circuit &circuit, std::span<const double> params, const NoiseModel &noise, Rng &rng);

}  // namespace eqgan

#endif
