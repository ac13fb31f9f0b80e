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

#include "eqgan/training.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "eqgan/simulator.h"

namespace eqgan {

std::string_view discriminator_mode_name(DiscriminatorMode mode) {
    return mode == DiscriminatorMode::Perfect ? "perfect" : "adversarial";
}

std::optional<DiscriminatorMode> parse_discriminator_mode(std::string_view name) {
    if (name == "perfect") {
        return DiscriminatorMode::Perfect;
    }
    if (name == "adversarial") {
        return DiscriminatorMode::Adversarial;
    }
    return std::nullopt;
}

void TrainConfig::validate() const {
    if (episodes < 1) {
        throw std::invalid_argument("episodes must be >= 1");
    }
    if (batch_size < 1) {
        throw std::invalid_argument("batch_size must be >= 1");
    }
    if (!(lr_generator > 0) || !(lr_discriminator > 0)) {
        throw std::invalid_argument("learning rates must be > 0");
    }
    if (discriminator_steps < 1) {
        throw std::invalid_argument("discriminator_steps must be >= 1");
    }
}

double cost(
    std::span<const double> theta_g, const StateVector &real, const Circuit &generator, const SwapTestConfig &disc,
    const NoiseModel &noise, Rng &rng) {
    if (theta_g.size() != generator.param_count()) {
        throw std::invalid_argument("theta_g length does not match the generator");
    }
    const StateVector gen = noise.enabled && noise.apply_to_generator ? run_circuit(generator, theta_g, noise, rng)
                                                                      : run_circuit(generator, theta_g);
    const double score = discriminator_score(real, gen, disc, noise, rng);
    return 1.0 - std::clamp(score, 0.0, 1.0);
}

CostFn make_generator_objective(
    Circuit generator, const Circuit &test, std::span<const double> theta_d, const StateVector &real) {
    Eigen::MatrixXcd k = PairwiseSwapObservable::from_circuit(test, theta_d).reduced_on_generated(real);
    return [generator = std::move(generator), k = std::move(k)](std::span<const double> theta_g) {
        return 1.0 - quadratic_form(k, run_circuit(generator, theta_g));
    };
}

CostFn make_discriminator_objective(Circuit test, StateVector real, StateVector gen) {
    return [test = std::move(test), real = std::move(real), gen = std::move(gen)](std::span<const double> theta_d) {
        return 1.0 - PairwiseSwapObservable::from_circuit(test, theta_d).expectation(real, gen);
    };
}

TrainRecord train_eqgan(
    const RealSource &source, const AnsatzConfig &generator_config, const TrainConfig &config,
    const NoiseModel &noise) {
    config.validate();
    noise.validate();
    generator_config.validate();
    const int n = generator_config.num_qubits;
    if (source.num_qubits() != n) {
        throw std::invalid_argument(
            "real source has " + std::to_string(source.num_qubits()) + " qubits but the generator has " +
            std::to_string(n));
    }

    Rng rng(config.seed);
    const Circuit generator = build_generator(generator_config);
    std::vector<double> theta_g = config.initial_theta_g;
    if (theta_g.empty()) {
        theta_g = init_params(generator_config, rng);
    } else if (theta_g.size() != generator.param_count()) {
        throw std::invalid_argument("initial_theta_g has the wrong length");
    }

    const bool adversarial = config.discriminator_mode == DiscriminatorMode::Adversarial;
    const Circuit test = adversarial ? build_parametrized_swap(n) : build_perfect_swap(n);
    std::vector<double> theta_d(test.param_count(), 0.0);

    const auto gen_rules = slot_rules(generator);
    const auto disc_rules = slot_rules(test);
    AdamState adam_g = AdamState::zeros(theta_g.size());
    AdamState adam_d = AdamState::zeros(theta_d.size());

    auto noisy = [&](const Circuit &c, bool applies) {
        return noise.enabled && applies ? inject_noise(c, noise, rng) : c;
    };

    TrainRecord record;
    record.cost_history.reserve(static_cast<std::size_t>(config.episodes));
    record.fidelity_history.reserve(static_cast<std::size_t>(config.episodes));

    for (int episode = 0; episode < config.episodes; ++episode) {
        double cost_sum = 0;
        for (int item = 0; item < config.batch_size; ++item) {
            const std::size_t sample = source.draw_index(rng);

            if (adversarial) {
                for (int k = 0; k < config.discriminator_steps; ++k) {
                    StateVector real = source.prepare(sample, noise, rng);
                    StateVector gen = run_circuit(noisy(generator, noise.apply_to_generator), theta_g);
                    const CostFn objective = make_discriminator_objective(
                        noisy(test, noise.apply_to_discriminator), std::move(real), std::move(gen));
                    const auto grad = gradient(objective, theta_d, disc_rules, config.gradient_mode);
                    adam_step(theta_d, grad, adam_d, config.lr_discriminator, Direction::Ascend);
                }
            }

            const StateVector real = source.prepare(sample, noise, rng);
            const Circuit noisy_test = noisy(test, noise.apply_to_discriminator);
            const CostFn objective =
                make_generator_objective(noisy(generator, noise.apply_to_generator), noisy_test, theta_d, real);
            const double raw = objective(theta_g);
            cost_sum += 1.0 - std::clamp(1.0 - raw, 0.0, 1.0);
            const auto grad = gradient(objective, theta_g, gen_rules, config.gradient_mode);
            adam_step(theta_g, grad, adam_g, config.lr_generator, Direction::Descend);
        }

        const double fid = fidelity(run_circuit(generator, theta_g), source.reference_state());
        record.cost_history.push_back(cost_sum / config.batch_size);
        record.fidelity_history.push_back(fid);
        if (fid > record.best_fidelity || record.best_episode < 0) {
            record.best_fidelity = fid;
            record.best_episode = episode;
            record.best_theta_g = theta_g;
        }
    }

    record.final_theta_g = std::move(theta_g);
    record.final_theta_d = std::move(theta_d);
    record.final_fidelity = record.fidelity_history.back();
    return record;
}

}  // namespace eqgan
