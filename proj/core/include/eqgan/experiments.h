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

#ifndef EQGAN_EXPERIMENTS_H
#define EQGAN_EXPERIMENTS_H

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eqgan/experiment_spec.h"
#include "eqgan/ssvqe.h"
#include "eqgan/summary.h"

namespace eqgan {

// rand2q ------------------------------------------------------------------

struct Rand2qRun {
    std::size_t run_id = 0;
    std::uint64_t seed = 0;  // run sub-seed; theta* and the training seed derive from it, shared across modes
    DiscriminatorMode mode = DiscriminatorMode::Perfect;
    double final_fidelity = 0;
    double best_fidelity = 0;
    int episodes = 0;
    std::vector<double> theta_star;
    std::vector<double> final_theta_g;
};

struct Rand2qResult {
    std::vector<Rand2qRun> runs;  // ordered by (run_id, mode order in the spec)
    std::vector<std::pair<DiscriminatorMode, SummaryStats>> summaries;  // final-fidelity distribution per mode
};

Rand2qResult run_rand2q(const ExperimentSpec &spec, std::ostream *log = nullptr);

// ssvqe-solve -------------------------------------------------------------

struct SsvqeSolution {
    std::string hamiltonian;
    std::optional<double> bond_length_angstrom;
    AnsatzConfig ansatz;
    SsvqeResult result;
    std::array<double, 2> exact{};  // lowest two exact eigenvalues
    std::array<double, 2> gap{};    // energies - exact
};

SsvqeSolution solve_ssvqe(const PauliSum &h, const AnsatzConfig &ansatz, const SsvqeConfig &config, std::uint64_t seed);
SsvqeSolution run_ssvqe_solve(const ExperimentSpec &spec, std::ostream *log = nullptr);
std::string ssvqe_solution_to_json(const SsvqeSolution &solution);
SsvqeSolution parse_ssvqe_solution(std::string_view json_text);
SsvqeSolution load_ssvqe_solution(const std::filesystem::path &path);

// vqe-learn ---------------------------------------------------------------

struct VqeLearnRow {
    double bond_length = 0;
    std::size_t state_index = 0;
    DiscriminatorMode mode = DiscriminatorMode::Perfect;
    double ssvqe_energy = 0;
    double gan_energy = 0;
    double infidelity = 0;  // 1 - |<generated|SSVQE state>|^2, noiseless
    double exact_energy = 0;
    std::uint64_t seed = 0;
    std::vector<double> final_theta_g;
};

struct VqeLearnResult {
    std::vector<SsvqeSolution> solutions;  // one per Hamiltonian, spec order
    std::vector<VqeLearnRow> rows;         // ordered by (Hamiltonian, state, mode)
};

VqeLearnResult run_vqe_learn(const ExperimentSpec &spec, std::ostream *log = nullptr);

// rand-state --------------------------------------------------------------

struct RandStateRun {
    int qubits = 0;
    Entangler gate = Entangler::CZ;
    bool parametrized = false;
    int layers = 0;
    std::size_t state_index = 0;
    std::uint64_t seed = 0;
    double final_fidelity = 0;
    double best_fidelity = 0;
};

struct RandStateCell {
    int qubits = 0;
    Entangler gate = Entangler::CZ;
    bool parametrized = false;
    int layers = 0;
    DiscriminatorMode mode = DiscriminatorMode::Adversarial;
    double mean_infidelity = 0;
    double std_error = 0;
    std::size_t n_states = 0;
};

struct RandStateResult {
    std::vector<RandStateCell> cells;  // ordered by (qubits, gate, parametrized, layers, mode)
    std::vector<RandStateRun> runs;
};

RandStateResult run_rand_state(const ExperimentSpec &spec, std::ostream *log = nullptr);

// output ------------------------------------------------------------------

/// Shortest round-trip decimal form.
std::string format_double(double value);

/// Per-episode histories, final and best parameters of one training run.
std::string train_record_to_json(const TrainRecord &record);

std::string rand2q_csv(const Rand2qResult &result);
std::string rand2q_summary_json(const Rand2qResult &result);
std::string vqe_learn_csv(const VqeLearnResult &result);
std::string vqe_learn_runs_json(const VqeLearnResult &result);
std::string rand_state_csv(const RandStateResult &result);
std::string rand_state_runs_csv(const RandStateResult &result);

/// Runs the experiment described by `spec` and writes every output file plus
/// manifest.json into `out_dir`. Returns the written file names, manifest last.
std::vector<std::string> run_experiment(
    const ExperimentSpec &spec, const std::filesystem::path &out_dir, std::ostream *log = nullptr);

}  // namespace eqgan

#endif
