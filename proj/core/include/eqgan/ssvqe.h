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

#ifndef EQGAN_SSVQE_H
#define EQGAN_SSVQE_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "eqgan/ansatz.h"
#include "eqgan/gradient.h"
#include "eqgan/pauli_sum.h"

namespace eqgan {

/// Subspace-search VQE for the two lowest eigenstates.
///
/// The ansatz U is applied to the orthogonal inputs |0...0> and |0...01>
/// (basis indices 0 and 1) and w0 <H>_0 + w1 <H>_1 is minimized.
struct SsvqeConfig {
    double weight0 = 1.0;
    double weight1 = 0.5;
    int iterations = 500;
    double lr = 0.01;
    GradientMode gradient_mode = GradientMode::ParameterShift;
    int restarts = 1;  // independent random initializations; the lowest objective wins

    /// Requires weight0 > weight1 > 0, iterations >= 1, lr > 0, restarts >= 1.
    void validate() const;
};

/// Basis index of the k-th SSVQE input state.
constexpr std::size_t ssvqe_input_index(std::size_t k) {
    return k;
}

/// U|input_k>.
StateVector ssvqe_state(std::span<const double> theta, const AnsatzConfig &ansatz, std::size_t input);

/// Circuit preparing U|input_k> from |0...0>: an RX(pi) on qubit 0 for input 1,
/// followed by the ansatz. Its slots are the ansatz slots.
Circuit ssvqe_state_circuit(const AnsatzConfig &ansatz, std::size_t input);

double ssvqe_objective(std::span<const double> theta, const PauliSum &h, const SsvqeConfig &config, const AnsatzConfig &ansatz);

struct SsvqeResult {
    std::vector<double> theta;
    std::array<double, 2> energies{};        // ascending
    std::array<std::size_t, 2> inputs{};     // input state preparing each energy level
    double objective = 0;
    std::vector<double> objective_history;
};

/// Adam minimization of ssvqe_objective from uniform [0, 2pi) starting angles.
SsvqeResult ssvqe_train(const PauliSum &h, const AnsatzConfig &ansatz, const SsvqeConfig &config, std::uint64_t seed);

}  // namespace eqgan

#endif
