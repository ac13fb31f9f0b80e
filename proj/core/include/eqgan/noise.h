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

#ifndef EQGAN_NOISE_H
#define EQGAN_NOISE_H

#include "eqgan/circuit.h"
#include "eqgan/rng.h"

namespace eqgan {

/// Gaussian over-rotation noise: every gate is followed by an error gate whose
/// angle is drawn from N(mu, sigma^2).
struct NoiseModel {
    double single_qubit_mu = 0.06;
    double single_qubit_sigma = 0.02;
    double two_qubit_mu = 0.0;
    double two_qubit_sigma = 0.005;
    bool enabled = true;

    // Which circuits the noise is applied to.
    bool apply_to_real = true;
    bool apply_to_generator = true;
    bool apply_to_discriminator = true;

    static NoiseModel disabled();

    /// Throws std::invalid_argument on negative or non-finite parameters.
    void validate() const;
};

/// Error gate that follows `gate`: RP(e) on the same qubit for an RP rotation,
/// RZ(e) for H, and the parametrized equivalent at angle e for two-qubit gates.
/// Throws std::logic_error if the model is disabled.
GateOp sample_error_gate(const GateOp &gate, const NoiseModel &model, Rng &rng);

/// Copy of `circuit` with a freshly sampled error gate after every op. The error
/// angles are bound constants, so param_count is unchanged. Returns the circuit
/// untouched when the model is disabled.
Circuit inject_noise(const Circuit &circuit, const NoiseModel &model, Rng &rng);

}  // namespace eqgan

#endif
