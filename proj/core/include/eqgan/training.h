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

#ifndef EQGAN_TRAINING_H
#define EQGAN_TRAINING_H

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "eqgan/adam.h"
#include "eqgan/ansatz.h"
#include "eqgan/gradient.h"
#include "eqgan/noise.h"
#include "eqgan/state_source.h"
#include "eqgan/swap_test.h"

namespace eqgan {

/// Perfect: fixed SWAP test, only the generator trains. Adversarial: the
/// parametrized test is trained to maximize the cost while the generator minimizes it.
enum class DiscriminatorMode { Perfect, Adversarial };

std::string_view discriminator_mode_name(DiscriminatorMode mode);
std::optional<DiscriminatorMode> parse_discriminator_mode(std::string_view name);

struct TrainConfig {
    int episodes = 80;
    int batch_size = 4;
    double lr_generator = 0.01;
    double lr_discriminator = 0.01;
    DiscriminatorMode discriminator_mode = DiscriminatorMode::Adversarial;
    std::uint64_t seed = 0;
    GradientMode gradient_mode = GradientMode::ParameterShift;
    int discriminator_steps = 1;          // ascent steps before each generator step
    std::vector<double> initial_theta_g;  // empty: uniform [0, 2pi)

    void validate() const;
};

struct TrainRecord {
    std::vector<double> cost_history;      // mean batch cost per episode
    std::vector<double> fidelity_history;  // noiseless fidelity to the reference state after each episode
    std::vector<double> final_theta_g;
    std::vector<double> final_theta_d;
    double final_fidelity = 0;
    double best_fidelity = 0;
    int best_episode = -1;
    std::vector<double> best_theta_g;
};

/// 1 - clamp(D, 0, 1), with D the score of the test in `disc` on (real, G(theta_g)|0>).
/// The generator is run with noise when the model is enabled for generators.
double cost(
    std::span<const double> theta_g, const StateVector &real, const Circuit &generator, const SwapTestConfig &disc,
    const NoiseModel &noise, Rng &rng);

/// theta_g -> 1 - D for fixed real state and fixed (already noise-injected)
/// circuits. Unclamped, so it is a trigonometric polynomial in each rotation slot.
CostFn make_generator_objective(Circuit generator, const Circuit &test, std::span<const double> theta_d, const StateVector &real);

/// theta_d -> 1 - D for fixed real and generated states.
CostFn make_discriminator_objective(Circuit test, StateVector real, StateVector gen);

/// Minimax EQ-GAN training.
///
/// Each episode draws batch_size real samples. Per sample, in adversarial mode,
/// the discriminator takes `discriminator_steps` Adam ascent steps on the cost,
/// then the generator takes one Adam descent step. Noise is resampled for every
/// step and held fixed across the evaluations of that step's gradient.
/// theta_d starts at zero (the perfect SWAP test).
TrainRecord train_eqgan(
    const RealSource &source, const AnsatzConfig &generator, const TrainConfig &config, const NoiseModel &noise);

}  // namespace eqgan

#endif
