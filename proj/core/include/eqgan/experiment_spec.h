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

#ifndef EQGAN_EXPERIMENT_SPEC_H
#define EQGAN_EXPERIMENT_SPEC_H

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "eqgan/ansatz.h"
#include "eqgan/noise.h"
#include "eqgan/ssvqe.h"
#include "eqgan/training.h"

namespace eqgan {

/// Raised for any spec-file problem: bad JSON, unknown keys, out-of-range values,
/// missing Hamiltonian files. The CLI maps it to exit code 2.
class SpecError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

enum class ExperimentKind { Rand2q, VqeLearn, RandState, SsvqeSolve };

std::string_view experiment_name(ExperimentKind kind);
std::optional<ExperimentKind> parse_experiment_kind(std::string_view name);

struct RandStateGrid {
    std::vector<int> qubits{2, 4, 6};
    std::vector<int> layers{1, 2, 3, 4, 5};
    std::vector<Entangler> gates{Entangler::CNOT, Entangler::CZ, Entangler::ISWAP};
    std::vector<bool> parametrized{false, true};
};

/// Fully resolved experiment description. Defaults depend on the experiment
/// kind; see `default_spec`.
struct ExperimentSpec {
    ExperimentKind experiment = ExperimentKind::Rand2q;
    std::uint64_t seed = 1;
    int threads = 1;

    int samples = 200;          // rand2q target circuits
    int states_per_cell = 20;   // rand-state Haar states per grid cell

    AnsatzConfig ansatz;
    TrainConfig train;  // train.seed is ignored; every run gets a derived sub-seed
    std::vector<DiscriminatorMode> modes;
    NoiseModel noise;

    double perturbation_sigma = 0.01;
    std::size_t pool_size = 100;

    // vqe-learn / ssvqe-solve. The *_names fields keep the strings from the spec
    // file; the paths are resolved against the spec file's directory.
    std::vector<std::string> hamiltonian_names;
    std::vector<std::filesystem::path> hamiltonians;
    std::vector<std::string> ssvqe_solution_names;
    std::vector<std::filesystem::path> ssvqe_solutions;
    std::vector<std::size_t> eigenstates{0, 1};
    SsvqeConfig ssvqe;

    RandStateGrid grid;
};

ExperimentSpec default_spec(ExperimentKind kind);

/// Parses a JSON spec. Relative file paths resolve against `base_dir`.
ExperimentSpec parse_experiment_spec(std::string_view json_text, const std::filesystem::path &base_dir);
ExperimentSpec load_experiment_spec(const std::filesystem::path &path);

/// Throws SpecError when the spec is inconsistent.
void validate_spec(const ExperimentSpec &spec);

/// Full-size sample counts: 10^4 circuits for rand2q, 200 states per rand-state cell.
void apply_full_scale(ExperimentSpec &spec);

/// Canonical JSON rendering of the resolved spec (stable key order, no paths outside the spec's own strings).
std::string spec_to_json(const ExperimentSpec &spec);

}  // namespace eqgan

#endif
