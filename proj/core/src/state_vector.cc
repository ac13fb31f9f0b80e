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

#include "eqgan/state_vector.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace eqgan {

namespace {

void check_qubit_count(int num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw std::invalid_argument(
            "qubit count " + std::to_string(num_qubits) + " outside [1, " + std::to_string(kMaxQubits) + "]");
    }
}

void check_same_size(const StateVector &a, const StateVector &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument(
            "state dimension mismatch: " + std::to_string(a.num_qubits()) + " vs " + std::to_string(b.num_qubits()) +
            " qubits");
    }
}

}  // namespace

StateVector::StateVector(int num_qubits, std::vector<Complex> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
}

StateVector StateVector::zero(int num_qubits) {
    check_qubit_count(num_qubits);
    std::vector<Complex> amps(std::size_t{1} << num_qubits);
    amps[0] = 1.0;
    return StateVector(num_qubits, std::move(amps));
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
    const std::size_t n = amplitudes.size();
    if (n < 2 || !std::has_single_bit(n)) {
        throw std::invalid_argument("amplitude count " + std::to_string(n) + " is not a power of two >= 2");
    }
    const int num_qubits = std::countr_zero(n);
    check_qubit_count(num_qubits);
    return StateVector(num_qubits, std::move(amplitudes));
}

double StateVector::norm_squared() const noexcept {
    double total = 0;
    for (const auto &a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

void StateVector::normalize() {
    const double n2 = norm_squared();
    if (!(n2 > 0) || !std::isfinite(n2)) {
        throw std::domain_error("cannot normalize a zero or non-finite state");
    }
    const double scale = 1.0 / std::sqrt(n2);
    for (auto &a : amplitudes_) {
        a *= scale;
    }
}

StateVector init_zero(int num_qubits) {
    return StateVector::zero(num_qubits);
}

Complex inner_product(const StateVector &a, const StateVector &b) {
    check_same_size(a, b);
    Complex total = 0;
    const auto lhs = a.amplitudes();
    const auto rhs = b.amplitudes();
    for (std::size_t k = 0; k < lhs.size(); ++k) {
        total += std::conj(lhs[k]) * rhs[k];
    }
    return total;
}

double fidelity(const StateVector &a, const StateVector &b) {
    return std::norm(inner_product(a, b));
}

StateVector tensor_product(const StateVector &low, const StateVector &high) {
    const int total = low.num_qubits() + high.num_qubits();
    check_qubit_count(total);
    std::vector<Complex> amps(std::size_t{1} << total);
    const std::size_t low_size = low.size();
    for (std::size_t h = 0; h < high.size(); ++h) {
        const Complex hv = high[h];
        for (std::size_t l = 0; l < low_size; ++l) {
            amps[h * low_size + l] = hv * low[l];
        }
    }
    return StateVector::from_amplitudes(std::move(amps));
}

}  // namespace eqgan
