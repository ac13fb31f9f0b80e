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
#include "eqgan/swap_test.h"

namespace {

void BM_apply_generator(benchmark::State &state) {
    const eqgan::AnsatzConfig cfg{static_cast<int>(state.range(0)), 3, eqgan::Entangler::CNOT, true};
    const eqgan::Circuit c = eqgan::build_generator(cfg);
    eqgan::Rng rng(7);
    const auto theta = eqgan::init_params(cfg, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(eqgan::run_circuit(c, theta));
    }
}
BENCHMARK(BM_apply_generator)->Arg(2)->Arg(4)->Arg(6)->Arg(10);

void BM_swap_score_full(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    eqgan::Rng rng(11);
    const auto a = eqgan::sample_haar_state(n, rng);
    const auto b = eqgan::sample_haar_state(n, rng);
    const auto cfg = eqgan::SwapTestConfig::parametrized(n, std::vector<double>(2 * n, 0.3));
    const auto noise = eqgan::NoiseModel::disabled();
    for (auto _ : state) {
        benchmark::DoNotOptimize(eqgan::discriminator_score(a, b, cfg, noise, rng));
    }
}
BENCHMARK(BM_swap_score_full)->Arg(1)->Arg(2)->Arg(4)->Arg(6);

void BM_swap_score_reduced(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    eqgan::Rng rng(11);
    const auto a = eqgan::sample_haar_state(n, rng);
    const auto b = eqgan::sample_haar_state(n, rng);
    const std::vector<double> theta_d(2 * n, 0.3);
    const auto obs = eqgan::PairwiseSwapObservable::from_circuit(eqgan::build_parametrized_swap(n), theta_d);
    const auto k = obs.reduced_on_generated(a);
    for (auto _ : state) {
        benchmark::DoNotOptimize(eqgan::quadratic_form(k, b));
    }
}
BENCHMARK(BM_swap_score_reduced)->Arg(1)->Arg(2)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
