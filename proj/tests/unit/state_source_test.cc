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

#include "eqgan/state_source.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "eqgan/simulator.h"

using eqgan::AnsatzConfig;
using eqgan::Entangler;
using eqgan::RealSource;
using eqgan::Rng;
using eqgan::StateVector;

namespace {

RealSource h2_like_family(double sigma, std::size_t pool, std::uint64_t seed) {
    AnsatzConfig a{2, 1, Entangler::CZ, false};
    Rng rng(1);
    auto theta = eqgan::random_circuit_params(a, rng);
    return RealSource::param_family(eqgan::build_generator(a), theta, sigma, pool, seed);
}

}  // namespace

TEST(HaarState, Normalized) {
    Rng rng(1);
    for (int n = 1; n <= 6; ++n) {
        for (int k = 0; k < 20; ++k) {
            EXPECT_NEAR(eqgan::sample_haar_state(n, rng).norm_squared(), 1.0, 1e-12);
        }
    }
}

TEST(HaarState, UniformWeightOnEveryIndex) {
    Rng rng(2);
    std::vector<double> mean(4, 0.0);
    const int draws = 10000;
    for (int k = 0; k < draws; ++k) {
        auto s = eqgan::sample_haar_state(2, rng);
        for (std::size_t i = 0; i < 4; ++i) mean[i] += std::norm(s[i]) / draws;
    }
    for (double m : mean) EXPECT_NEAR(m, 0.25, 0.01);
}

// Haar fidelity between two independent n-qubit states has mean 1 / 2^n.
TEST(HaarState, PairFidelityMean) {
    Rng rng(3);
    double total = 0;
    const int draws = 4000;
    for (int k = 0; k < draws; ++k) {
        total += eqgan::fidelity(eqgan::sample_haar_state(3, rng), eqgan::sample_haar_state(3, rng));
    }
    EXPECT_NEAR(total / draws, 1.0 / 8, 0.01);
}

TEST(HaarState, SameSeedSameState) {
    Rng a(4), b(4);
    EXPECT_EQ(eqgan::sample_haar_state(4, a), eqgan::sample_haar_state(4, b));
}

TEST(CircuitParams, RangeLengthDeterminism) {
    AnsatzConfig a{4, 3, Entangler::CNOT, false};
    Rng r1(5), r2(5);
    auto t1 = eqgan::random_circuit_params(a, r1);
    auto t2 = eqgan::random_circuit_params(a, r2);
    EXPECT_EQ(t1.size(), eqgan::param_count(a));
    EXPECT_EQ(t1, t2);
    for (double t : t1) {
        EXPECT_GE(t, 0.0);
        EXPECT_LT(t, 2 * std::numbers::pi);
    }
}

TEST(CircuitParams, ReferenceAnglesRepresentable) {
    AnsatzConfig a{2, 1, Entangler::CZ, false};
    const std::vector<double> reference{0.035, 2.861, 0.606, 0.361, 6.174, 4.513};
    ASSERT_EQ(reference.size(), eqgan::param_count(a));
    for (double t : reference) {
        EXPECT_GE(t, 0.0);
        EXPECT_LT(t, 2 * std::numbers::pi);
    }
    auto s = eqgan::run_circuit(eqgan::build_generator(a), reference);
    EXPECT_NEAR(s.norm_squared(), 1.0, 1e-12);
}

TEST(RealSource, FixedCircuitIsReference) {
    AnsatzConfig a{2, 1, Entangler::CZ, false};
    Rng rng(6);
    auto theta = eqgan::random_circuit_params(a, rng);
    auto src = RealSource::fixed_circuit(eqgan::build_generator(a), theta);
    const auto want = eqgan::run_circuit(eqgan::build_generator(a), theta);
    EXPECT_EQ(src.kind(), eqgan::SourceKind::FixedCircuit);
    for (int k = 0; k < 5; ++k) EXPECT_GT(eqgan::fidelity(src.draw_real(rng), want), 1 - 1e-14);
}

TEST(RealSource, ZeroSigmaParamFamilyIsExact) {
    auto src = h2_like_family(0.0, 10, 7);
    Rng rng(8);
    for (int k = 0; k < 20; ++k) {
        EXPECT_EQ(src.draw_real(rng), src.reference_state());
    }
}

TEST(RealSource, ParamPoolDeviatesBySigma) {
    auto src = h2_like_family(0.01, 100, 9);
    AnsatzConfig a{2, 1, Entangler::CZ, false};
    Rng rng(1);
    auto theta = eqgan::random_circuit_params(a, rng);
    double ss = 0;
    std::size_t n = 0;
    for (const auto &p : src.param_pool()) {
        ASSERT_EQ(p.size(), theta.size());
        for (std::size_t i = 0; i < p.size(); ++i, ++n) ss += (p[i] - theta[i]) * (p[i] - theta[i]);
    }
    EXPECT_NEAR(std::sqrt(ss / n), 0.01, 0.002);
}

TEST(RealSource, DrawsComeFromThePool) {
    Rng base_rng(10);
    auto base = eqgan::sample_haar_state(3, base_rng);
    auto src = RealSource::state_family(base, 0.01, 100, 11);
    ASSERT_EQ(src.pool_size(), 100u);
    Rng rng(12);
    std::set<std::size_t> seen;
    for (int k = 0; k < 2000; ++k) {
        auto s = src.draw_real(rng);
        bool member = false;
        for (std::size_t i = 0; i < src.state_pool().size() && !member; ++i) {
            if (src.state_pool()[i] == s) {
                member = true;
                seen.insert(i);
            }
        }
        EXPECT_TRUE(member);
    }
    EXPECT_GT(seen.size(), 90u);  // uniform with replacement reaches nearly all members
}

TEST(RealSource, PoolDeterminedBySeed) {
    Rng base_rng(13);
    auto base = eqgan::sample_haar_state(2, base_rng);
    auto a = RealSource::state_family(base, 0.01, 50, 14);
    auto b = RealSource::state_family(base, 0.01, 50, 14);
    auto c = RealSource::state_family(base, 0.01, 50, 15);
    EXPECT_EQ(a.state_pool(), b.state_pool());
    EXPECT_NE(a.state_pool(), c.state_pool());
    EXPECT_EQ(h2_like_family(0.01, 20, 3).param_pool(), h2_like_family(0.01, 20, 3).param_pool());
}

// Infidelity after renormalizing is about 2 sigma^2 (2^n - 1): the weight of
// the complex kick orthogonal to the base state. At n = 6 that is 0.0126, so
// the 0.99 fidelity floor only holds up to n = 5.
TEST(RealSource, StateFamilyStaysClose) {
    Rng rng(16);
    const double sigma = 0.01;
    for (int n = 1; n <= 6; ++n) {
        int close = 0;
        double infid = 0;
        const int trials = 400;
        for (int k = 0; k < trials; ++k) {
            auto base = eqgan::sample_haar_state(n, rng);
            auto p = eqgan::perturb_amplitudes(base, sigma, rng);
            EXPECT_NEAR(p.norm_squared(), 1.0, 1e-10);
            const double f = eqgan::fidelity(base, p);
            infid += (1 - f) / trials;
            if (f >= 0.99) ++close;
        }
        const double predicted = 2 * sigma * sigma * static_cast<double>((1 << n) - 1);
        EXPECT_NEAR(infid, predicted, 0.1 * predicted) << n;
        if (n <= 5) {
            EXPECT_GE(close, static_cast<int>(0.99 * trials)) << n;
        } else {
            EXPECT_LT(close, trials / 2) << n;
        }
    }
}

TEST(RealSource, ZeroSigmaPerturbationIsIdentity) {
    Rng rng(17);
    auto base = eqgan::sample_haar_state(4, rng);
    auto p = eqgan::perturb_amplitudes(base, 0.0, rng);
    for (std::size_t i = 0; i < base.size(); ++i) EXPECT_NEAR(std::abs(p[i] - base[i]), 0.0, 1e-15);
}

TEST(RealSource, BadArguments) {
    Rng rng(18);
    auto base = eqgan::sample_haar_state(2, rng);
    EXPECT_ANY_THROW(RealSource::state_family(base, -0.1, 10, 1));
    EXPECT_ANY_THROW(RealSource::state_family(base, 0.01, 0, 1));
    EXPECT_ANY_THROW(h2_like_family(-1.0, 10, 1));
    auto src = RealSource::state_family(base, 0.01, 3, 1);
    EXPECT_ANY_THROW(src.prepare(3, eqgan::NoiseModel::disabled(), rng));
}

TEST(StateFile, ParsesAndKeepsNormalizedInput) {
    std::ostringstream warn;
    auto s = eqgan::parse_state_json(R"({"num_qubits":1,"amplitudes":[[0.6,0],[0,0.8]]})", &warn);
    EXPECT_EQ(s.num_qubits(), 1);
    EXPECT_NEAR(s[0].real(), 0.6, 1e-15);
    EXPECT_NEAR(s[1].imag(), 0.8, 1e-15);
    EXPECT_TRUE(warn.str().empty());
}

TEST(StateFile, RenormalizesWithWarning) {
    std::ostringstream warn;
    auto s = eqgan::parse_state_json(R"({"num_qubits":1,"amplitudes":[[3,0],[4,0]]})", &warn);
    EXPECT_NEAR(s.norm_squared(), 1.0, 1e-14);
    EXPECT_NEAR(s[0].real(), 0.6, 1e-14);
    EXPECT_NE(warn.str().find("warning"), std::string::npos);
}

TEST(StateFile, Rejections) {
    EXPECT_ANY_THROW(eqgan::parse_state_json(R"({"num_qubits":2,"amplitudes":[[1,0],[0,0]]})", nullptr));
    EXPECT_ANY_THROW(eqgan::parse_state_json(R"({"num_qubits":1,"amplitudes":[[1],[0,0]]})", nullptr));
    EXPECT_ANY_THROW(eqgan::parse_state_json(R"({"num_qubits":1,"amplitudes":[[0,0],[0,0]]})", nullptr));
    EXPECT_ANY_THROW(eqgan::parse_state_json("not json", nullptr));
    EXPECT_ANY_THROW(eqgan::load_state_file("/nonexistent/state.json", nullptr));
}
