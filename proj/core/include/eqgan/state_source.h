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

#ifndef EQGAN_STATE_SOURCE_H
#define EQGAN_STATE_SOURCE_H

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "eqgan/ansatz.h"
#include "eqgan/circuit.h"
#include "eqgan/noise.h"
#include "eqgan/state_vector.h"

namespace eqgan {

/// Haar-random pure state: i.i.d. standard complex Gaussian amplitudes, normalized.
StateVector sample_haar_state(int num_qubits, Rng &rng);

/// Target angles for a fixed random circuit, uniform in [0, 2pi).
std::vector<double> random_circuit_params(const AnsatzConfig &config, Rng &rng);

/// Adds N(0, sigma^2) to the real and imaginary part of every amplitude, then renormalizes.
StateVector perturb_amplitudes(const StateVector &base, double sigma, Rng &rng);

enum class SourceKind { FixedCircuit, ParamFamily, StateFamily };

/// Supplier of "real" training states.
///
/// Perturbed instances are drawn once, at construction, into a pool; training
/// batches then pick pool members uniformly with replacement. Circuit-backed
/// sources re-run their circuit on every draw so device noise can be applied.
class RealSource {
   public:
    static RealSource fixed_circuit(Circuit circuit, std::vector<double> theta_star);
    /// Pool of theta_star + eps, eps ~ N(0, sigma^2) per angle.
    static RealSource param_family(
        Circuit circuit, std::vector<double> theta_star, double sigma, std::size_t pool_size, std::uint64_t seed);
    /// Pool of perturb_amplitudes(base, sigma). Injected directly; never noisy.
    static RealSource state_family(StateVector base, double sigma, std::size_t pool_size, std::uint64_t seed);

    SourceKind kind() const noexcept { return kind_; }
    int num_qubits() const noexcept { return reference_.num_qubits(); }
    std::size_t pool_size() const noexcept;
    double perturbation_sigma() const noexcept { return sigma_; }

    /// The unperturbed, noiseless target.
    const StateVector &reference_state() const noexcept { return reference_; }

    std::size_t draw_index(Rng &rng) const;

    /// Pool member `index`, run through the real circuit with noise when the
    /// model is enabled for real circuits.
    StateVector prepare(std::size_t index, const NoiseModel &noise, Rng &rng) const;

    StateVector draw_real(Rng &rng) const;
    StateVector draw_real(Rng &rng, const NoiseModel &noise) const;

    const std::vector<std::vector<double>> &param_pool() const noexcept { return param_pool_; }
    const std::vector<StateVector> &state_pool() const noexcept { return state_pool_; }

   private:
    RealSource(SourceKind kind, StateVector reference);

    SourceKind kind_;
    StateVector reference_;
    double sigma_ = 0.0;
    std::optional<Circuit> circuit_;
    std::vector<std::vector<double>> param_pool_;
    std::vector<StateVector> state_pool_;
};

/// Reads {"num_qubits": n, "amplitudes": [[re, im], ...]}. The state is
/// renormalized, with a note written to `warnings`, if its norm is off by more
/// than 1e-6. Throws std::runtime_error on malformed input.
StateVector parse_state_json(std::string_view text, std::ostream *warnings);
StateVector load_state_file(const std::filesystem::path &path, std::ostream *warnings);

}  // namespace eqgan

#endif
