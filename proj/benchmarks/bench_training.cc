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

#include <benchmark/benchmark.h>

#include "eqgan/ansatz.h"
#include "eqgan/rng.h"
#include "eqgan/simulator.h"
#include "eqgan/state_source.h"
#include "eqgan/training.h"

namespace {

void BM_train_rand2q_sample(benchmark::State &state) {
    const eqgan::AnsatzConfig cfg{2, 1, eqgan::Entangler::CZ, false};
    const auto mode = state.range(0) ? eqgan::DiscriminatorMode::Adversarial : eqgan::DiscriminatorMode::Perfect;
    eqgan::Rng rng(3);
    const auto source = eqgan::RealSource::fixed_circuit(eqgan::build_generator(cfg), eqgan::init_params(cfg, rng));
    eqgan::TrainConfig tc;
    tc.discriminator_mode = mode;
    std::uint64_t seed = 0;
    for (auto _ : state) {
        tc.seed = ++seed;
        benchmark::DoNotOptimize(eqgan::train_eqgan(source, cfg, tc, eqgan::NoiseModel{}));
    }
}
BENCHMARK(BM_train_rand2q_sample)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_train_rand_state(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const eqgan::AnsatzConfig cfg{n, 3, eqgan::Entangler::CNOT, false};
    eqgan::Rng rng(5);
    const auto source = eqgan::RealSource::state_family(eqgan::sample_haar_state(n, rng), 0.01, 100, 9);
    eqgan::TrainConfig tc;
    tc.episodes = 5;
    std::uint64_t seed = 0;
    for (auto _ : state) {
        tc.seed = ++seed;
        benchmark::DoNotOptimize(eqgan::train_eqgan(source, cfg, tc, eqgan::NoiseModel{}));
    }
}
BENCHMARK(BM_train_rand_state)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace
