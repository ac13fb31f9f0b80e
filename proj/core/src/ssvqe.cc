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

#include "eqgan/ssvqe.h"

#include <numbers>
#include <stdexcept>

#include "eqgan/adam.h"
#include "eqgan/simulator.h"

namespace eqgan {

void SsvqeConfig::validate() const {
    if (!(weight1 > 0) || !(weight0 > weight1)) {
        throw std::invalid_argument("SSVQE weights must satisfy w0 > w1 > 0");
    }
    if (iterations < 1 || !(lr > 0) || restarts < 1) {
        throw std::invalid_argument("SSVQE needs iterations >= 1, lr > 0 and restarts >= 1");
    }
}

Circuit ssvqe_state_circuit(const AnsatzConfig &ansatz, std::size_t input) {
    if (input > 1) {
        throw std::invalid_argument("SSVQE has two input states");
    }
    const Circuit u = build_generator(ansatz);
    Circuit c(ansatz.num_qubits);
    if (input == 1) {
        c.append(GateOp::bound(GateKind::RX, std::numbers::pi, 0));
    }
    for (const auto &op : u.ops()) {
        c.append(op);
    }
    c.reserve_slots(u.param_count());
    return c;
}

StateVector ssvqe_state(std::span<const double> theta, const AnsatzConfig &ansatz, std::size_t input) {
    if (input > 1) {
        throw std::invalid_argument("SSVQE has two input states");
    }
    StateVector s = StateVector::zero(ansatz.num_qubits);
    if (input == 1) {
        s[0] = 0;
        s[ssvqe_input_index(1)] = 1;
    }
    apply_circuit(s, build_generator(ansatz), theta);
    return s;
}

namespace {

std::array<double, 2> input_energies(
    const Circuit &u, std::span<const double> theta, const PauliSum &h, int num_qubits) {
    std::array<double, 2> e{};
    for (std::size_t k = 0; k < 2; ++k) {
        StateVector s = StateVector::zero(num_qubits);
        s[0] = 0;
        s[ssvqe_input_index(k)] = 1;
        apply_circuit(s, u, theta);
        e[k] = expectation(s, h);
    }
    return e;
}

}  // namespace

double ssvqe_objective(
    std::span<const double> theta, const PauliSum &h, const SsvqeConfig &config, const AnsatzConfig &ansatz) {
    if (h.num_qubits() != ansatz.num_qubits) {
        throw std::invalid_argument("Hamiltonian and ansatz qubit counts differ");
    }
    if (theta.size() != param_count(ansatz)) {
        throw std::invalid_argument("theta length does not match the ansatz");
    }
    const auto e = input_energies(build_generator(ansatz), theta, h, ansatz.num_qubits);
    return config.weight0 * e[0] + config.weight1 * e[1];
}

SsvqeResult ssvqe_train(const PauliSum &h, const AnsatzConfig &ansatz, const SsvqeConfig &config, std::uint64_t seed) {
    config.validate();
    ansatz.validate();
    if (h.num_qubits() != ansatz.num_qubits) {
        throw std::invalid_argument("Hamiltonian and ansatz qubit counts differ");
    }
    if (ansatz.num_qubits < 1) {
        throw std::invalid_argument("SSVQE needs at least one qubit");
    }
    const Circuit u = build_generator(ansatz);
    const auto rules = slot_rules(u);
    const CostFn objective = [&](std::span<const double> theta) {
        const auto e = input_energies(u, theta, h, ansatz.num_qubits);
        return config.weight0 * e[0] + config.weight1 * e[1];
    };

    Rng rng(seed);
    SsvqeResult best;
    bool have_best = false;
    for (int attempt = 0; attempt < config.restarts; ++attempt) {
        std::vector<double> theta = init_params(ansatz, rng);
        AdamState adam = AdamState::zeros(theta.size());
        std::vector<double> history;
        history.reserve(static_cast<std::size_t>(config.iterations));
        for (int it = 0; it < config.iterations; ++it) {
            const auto grad = gradient(objective, theta, rules, config.gradient_mode);
            adam_step(theta, grad, adam, config.lr, Direction::Descend);
            history.push_back(objective(theta));
        }
        const double value = history.back();
        if (!have_best || value < best.objective) {
            best.theta = std::move(theta);
            best.objective = value;
            best.objective_history = std::move(history);
            have_best = true;
        }
    }

    const auto e = input_energies(u, best.theta, h, ansatz.num_qubits);
    if (e[0] <= e[1]) {
        best.energies = {e[0], e[1]};
        best.inputs = {0, 1};
    } else {
        best.energies = {e[1], e[0]};
        best.inputs = {1, 0};
    }
    return best;
}

}  // namespace eqgan
