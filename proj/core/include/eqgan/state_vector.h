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

#ifndef EQGAN_STATE_VECTOR_H
#define EQGAN_STATE_VECTOR_H

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace eqgan {

using Complex = std::complex<double>;

/// Largest register the dense simulator accepts (6 + 6 discriminator qubits plus one spare).
inline constexpr int kMaxQubits = 13;

/// Dense pure state of `num_qubits` qubits.
///
/// Basis index bit k holds the value of qubit k (little-endian). Amplitudes are
/// never rephased; comparisons between states should go through `fidelity`.
class StateVector {
   public:
    /// |0...0> on `num_qubits` qubits. Throws std::invalid_argument outside [1, kMaxQubits].
    static StateVector zero(int num_qubits);

    /// Wraps raw amplitudes. The length must be a power of two in range; the
    /// vector is taken as-is (no normalization).
    static StateVector from_amplitudes(std::vector<Complex> amplitudes);

    int num_qubits() const noexcept { return num_qubits_; }
    std::size_t size() const noexcept { return amplitudes_.size(); }

    std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
    std::span<Complex> mutable_amplitudes() noexcept { return amplitudes_; }

    const Complex &operator[](std::size_t index) const { return amplitudes_[index]; }
    Complex &operator[](std::size_t index) { return amplitudes_[index]; }

    double norm_squared() const noexcept;

    /// Rescales to unit norm. Throws std::domain_error on a zero vector.
    void normalize();

    bool operator==(const StateVector &) const = default;

   private:
    StateVector(int num_qubits, std::vector<Complex> amplitudes);

    int num_qubits_;
    std::vector<Complex> amplitudes_;
};

StateVector init_zero(int num_qubits);

/// <a|b>. Throws std::invalid_argument on a qubit-count mismatch.
Complex inner_product(const StateVector &a, const StateVector &b);

/// |<a|b>|^2.
double fidelity(const StateVector &a, const StateVector &b);

/// low (x) high, with `low` on qubits [0, n_low) and `high` on the qubits above it.
StateVector tensor_product(const StateVector &low, const StateVector &high);

}  // namespace eqgan

#endif
