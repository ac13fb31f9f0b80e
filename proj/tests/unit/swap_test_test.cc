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

#include "eqgan/swap_test.h"

#include <gtest/gtest.h>

#include <bit>
#include <numbers>
#include <random>

#include "eqgan/simulator.h"
#include "support/oracle.h"

using eqgan::GateKind;
using eqgan::GateOp;
using eqgan::StateVector;
using eqgan::SwapTestConfig;

namespace {

const eqgan::NoiseModel kClean = eqgan::NoiseModel::disabled();

std::vector<double> random_angles(std::size_t n, std::mt19937 &rng) {
    std::uniform_real_distribution<double> u(-std::numbers::pi, std::numbers::pi);
    std::vector<double> out(n);
    for (auto &x : out) {
        x = u(rng);
    }
    return out;
}

// Score by brute force: the test circuit written out gate by gate as dense
// matrices, then every basis outcome enumerated with its sign.
double brute_force_score(const StateVector &real, const StateVector &gen, const std::vector<double> &theta) {
    const int n = real.num_qubits();
    const int w = 2 * n;
    using oracle::embed;
    oracle::Mat u = oracle::Mat::Identity(std::size_t{1} << w, std::size_t{1} << w);
    auto push = [&](const oracle::Mat &local, std::vector<int> qs) { u = embed(local, qs, w) * u; };
    for (int i = 0; i < n; ++i) {
        const int r = i;
        const int g = n + i;
        if (theta.empty()) {
            push(oracle::two_qubit(GateKind::CNOT, 0), {g, r});
            push(oracle::hadamard(), {g});
        } else {
            push(oracle::hadamard(), {r});
            push(oracle::rotation('Z', theta[2 * i]), {r});
            push(oracle::two_qubit(GateKind::CZ, 0), {r, g});
            push(oracle::rotation('Z', theta[2 * i + 1]), {r});
            push(oracle::hadamard(), {r});
            push(oracle::hadamard(), {g});
        }
    }
    const oracle::Vec in = oracle::kron(oracle::to_vec(gen), oracle::to_vec(real));
    const oracle::Vec out = u * in;
    double score = 0;
    for (Eigen::Index k = 0; k < out.size(); ++k) {
        int sign = 1;
        for (int i = 0; i < n; ++i) {
            if (((k >> i) & 1) && ((k >> (n + i)) & 1)) {
                sign = -sign;
            }
        }
        score += sign * std::norm(out(k));
    }
    return score;
}

}  // namespace

TEST(swap_test, perfect_circuit_layout) {
    const auto c = eqgan::build_perfect_swap(1);
    ASSERT_EQ(c.size(), 2u);
    EXPECT_EQ(c.ops()[0], GateOp::fixed(GateKind::CNOT, 1, 0));
    EXPECT_EQ(c.ops()[1], GateOp::fixed(GateKind::H, 1));
    EXPECT_EQ(eqgan::build_perfect_swap(2).size(), 4u);
    const auto six = eqgan::build_perfect_swap(6);
    EXPECT_EQ(six.size(), 12u);
    EXPECT_EQ(six.num_qubits(), 12);
    EXPECT_EQ(six.param_count(), 0u);
}

TEST(swap_test, parametrized_circuit_layout) {
    const auto c = eqgan::build_parametrized_swap(2);
    EXPECT_EQ(c.num_qubits(), 4);
    EXPECT_EQ(c.param_count(), 4u);
    ASSERT_EQ(c.size(), 12u);
    const std::vector<GateOp> pair1{
        GateOp::fixed(GateKind::H, 1),           GateOp::symbolic(GateKind::RZ, 2, 1),
        GateOp::fixed(GateKind::CZ, 1, 3),       GateOp::symbolic(GateKind::RZ, 3, 1),
        GateOp::fixed(GateKind::H, 1),           GateOp::fixed(GateKind::H, 3)};
    for (std::size_t i = 0; i < 6; ++i) {
        EXPECT_EQ(c.ops()[6 + i], pair1[i]) << i;
    }
}

TEST(swap_test, config_validation) {
    EXPECT_NO_THROW(SwapTestConfig::perfect(3).validate());
    EXPECT_THROW(SwapTestConfig::parametrized(2, {0.1, 0.2, 0.3}).validate(), std::invalid_argument);
    SwapTestConfig p = SwapTestConfig::perfect(2);
    p.theta_d = {0.1};
    EXPECT_THROW(p.validate(), std::invalid_argument);
    p = SwapTestConfig::perfect(2);
    p.shots = 0;
    EXPECT_THROW(p.validate(), std::invalid_argument);
}

TEST(swap_test, simple_scores) {
    eqgan::Rng rng(1);
    const auto zero = StateVector::zero(1);
    const auto one = StateVector::from_amplitudes({0, 1});
    const auto plus = StateVector::from_amplitudes({1 / std::sqrt(2.0), 1 / std::sqrt(2.0)});
    const auto par0 = SwapTestConfig::parametrized(1, {0, 0});
    EXPECT_NEAR(eqgan::discriminator_score(zero, zero, par0, kClean, rng), 1.0, 1e-12);
    EXPECT_NEAR(eqgan::discriminator_score(zero, one, par0, kClean, rng), 0.0, 1e-12);
    EXPECT_NEAR(eqgan::discriminator_score(zero, plus, SwapTestConfig::perfect(1), kClean, rng), 0.5, 1e-12);

    std::mt19937 g(3);
    const auto h = oracle::random_state(2, g);
    EXPECT_NEAR(eqgan::discriminator_score(h, h, SwapTestConfig::perfect(2), kClean, rng), 1.0, 1e-10);
    EXPECT_THROW(eqgan::discriminator_score(h, zero, SwapTestConfig::perfect(2), kClean, rng), std::invalid_argument);
}

TEST(swap_test, perfect_score_equals_fidelity) {
    std::mt19937 g(17);
    eqgan::Rng rng(1);
    for (int n : {1, 2, 4, 6}) {
        const int reps = n == 6 ? 100 : 300;
        for (int rep = 0; rep < reps; ++rep) {
            const auto a = oracle::random_state(n, g);
            const auto b = oracle::random_state(n, g);
            const double d = eqgan::discriminator_score(a, b, SwapTestConfig::perfect(n), kClean, rng);
            EXPECT_NEAR(d, oracle::overlap_squared(oracle::to_vec(a), oracle::to_vec(b)), 1e-9);
        }
    }
}

TEST(swap_test, parametrized_at_zero_matches_perfect) {
    std::mt19937 g(23);
    eqgan::Rng rng(1);
    for (int rep = 0; rep < 200; ++rep) {
        const int n = 1 + rep % 4;
        const auto a = oracle::random_state(n, g);
        const auto b = oracle::random_state(n, g);
        const double p = eqgan::discriminator_score(a, b, SwapTestConfig::perfect(n), kClean, rng);
        const double z =
            eqgan::discriminator_score(a, b, SwapTestConfig::parametrized(n, std::vector<double>(2 * n, 0.0)), kClean, rng);
        EXPECT_NEAR(p, z, 1e-10);
    }
}

TEST(swap_test, parametrized_matches_brute_force) {
    std::mt19937 g(29);
    eqgan::Rng rng(1);
    for (int n : {1, 2, 3}) {
        for (int rep = 0; rep < 20; ++rep) {
            const auto a = oracle::random_state(n, g);
            const auto b = oracle::random_state(n, g);
            const auto theta = random_angles(2 * n, g);
            const double d = eqgan::discriminator_score(a, b, SwapTestConfig::parametrized(n, theta), kClean, rng);
            EXPECT_NEAR(d, brute_force_score(a, b, theta), 1e-10);
            EXPECT_GE(d, -1 - 1e-12);
            EXPECT_LE(d, 1 + 1e-12);
        }
    }
    const auto a = oracle::random_state(2, g);
    const auto b = oracle::random_state(2, g);
    EXPECT_NEAR(eqgan::discriminator_score(a, b, SwapTestConfig::perfect(2), kClean, rng),
                brute_force_score(a, b, {}), 1e-10);
}

TEST(swap_test, overlap_from_bits) {
    // one pair: bit 0 real, bit 1 generated
    const std::vector<std::uint64_t> zeros{0, 0, 0};
    EXPECT_EQ(eqgan::estimate_overlap_from_bits(zeros, 1), 1.0);
    const std::vector<std::uint64_t> one_pair{0b11};
    EXPECT_EQ(eqgan::estimate_overlap_from_bits(one_pair, 1), -1.0);
    const std::vector<std::uint64_t> mixed{0b00, 0b11};
    EXPECT_EQ(eqgan::estimate_overlap_from_bits(mixed, 1), 0.0);
    // two pairs both failing multiply to +1
    EXPECT_EQ(eqgan::swap_outcome_value(0b1111, 2), 1);
    EXPECT_EQ(eqgan::swap_outcome_value(0b0101, 2), -1);
    EXPECT_EQ(eqgan::swap_outcome_value(0b0110, 2), 1);
    EXPECT_THROW(eqgan::estimate_overlap_from_bits(std::span<const std::uint64_t>{}, 1), std::invalid_argument);
}

TEST(swap_test, shot_estimator_is_unbiased) {
    std::mt19937 g(41);
    for (int n : {1, 3}) {
        const auto a = oracle::random_state(n, g);
        const auto b = oracle::random_state(n, g);
        const auto theta = random_angles(2 * n, g);
        auto cfg = SwapTestConfig::parametrized(n, theta);
        eqgan::Rng rng(5);
        const double exact = eqgan::discriminator_score(a, b, cfg, kClean, rng);
        cfg.shots = 100000;
        const double est = eqgan::discriminator_score(a, b, cfg, kClean, rng);
        // outcomes are +-1, so the per-shot variance is 1 - exact^2
        const double se = std::sqrt((1 - exact * exact) / 100000.0);
        EXPECT_NEAR(est, exact, 5 * se + 1e-12);
    }
}

TEST(swap_test, sampled_bitstrings_follow_distribution) {
    const auto s = StateVector::from_amplitudes({std::sqrt(0.25), 0, 0, std::sqrt(0.75)});
    eqgan::Rng rng(8);
    const auto bits = eqgan::sample_bitstrings(s, 40000, rng);
    int threes = 0;
    for (auto b : bits) {
        ASSERT_TRUE(b == 0 || b == 3);
        threes += b == 3;
    }
    EXPECT_NEAR(threes / 40000.0, 0.75, 5 * std::sqrt(0.75 * 0.25 / 40000));
}

TEST(swap_test, pairwise_observable_matches_full_simulation) {
    std::mt19937 g(51);
    eqgan::Rng rng(1);
    for (int n : {1, 2, 4, 6}) {
        for (int rep = 0; rep < 5; ++rep) {
            const auto a = oracle::random_state(n, g);
            const auto b = oracle::random_state(n, g);
            const auto theta = random_angles(2 * n, g);
            const double full = eqgan::discriminator_score(a, b, SwapTestConfig::parametrized(n, theta), kClean, rng);
            const auto obs = eqgan::PairwiseSwapObservable::from_circuit(eqgan::build_parametrized_swap(n), theta);
            EXPECT_EQ(obs.num_pairs(), n);
            EXPECT_NEAR(obs.expectation(a, b), full, 1e-10);
            const auto k = obs.reduced_on_generated(a);
            EXPECT_NEAR(eqgan::quadratic_form(k, b), full, 1e-10);
            EXPECT_LT((k - k.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
        }
    }
}

TEST(swap_test, pairwise_observable_with_noise_gates) {
    // Bound error gates inside a pair keep the factorization valid.
    std::mt19937 g(61);
    const int n = 3;
    const auto theta = random_angles(2 * n, g);
    eqgan::Rng rng(4);
    const auto noisy = eqgan::inject_noise(eqgan::build_parametrized_swap(n), eqgan::NoiseModel{}, rng);
    const auto a = oracle::random_state(n, g);
    const auto b = oracle::random_state(n, g);
    auto out = eqgan::tensor_product(a, b);
    eqgan::apply_circuit(out, noisy, theta);
    const double full = eqgan::exact_swap_score(out, n);
    const auto obs = eqgan::PairwiseSwapObservable::from_circuit(noisy, theta);
    EXPECT_NEAR(obs.expectation(a, b), full, 1e-10);
}

TEST(swap_test, pairwise_rejects_cross_pair_gates) {
    eqgan::Circuit c(4);
    c.append(GateOp::fixed(GateKind::CNOT, 0, 1));
    EXPECT_THROW(eqgan::PairwiseSwapObservable::from_circuit(c, {}), std::invalid_argument);
}

TEST(swap_test, noise_moves_perfect_score) {
    std::mt19937 g(71);
    const auto a = oracle::random_state(2, g);
    eqgan::Rng rng(2);
    const double clean = eqgan::discriminator_score(a, a, SwapTestConfig::perfect(2), kClean, rng);
    const double noisy = eqgan::discriminator_score(a, a, SwapTestConfig::perfect(2), eqgan::NoiseModel{}, rng);
    EXPECT_NEAR(clean, 1.0, 1e-12);
    EXPECT_LT(noisy, 1.0 - 1e-6);
}
