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

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "eqgan/simulator.h"
#include "json.hpp"

namespace eqgan {

StateVector sample_haar_state(int num_qubits, Rng &rng) {
    StateVector state = StateVector::zero(num_qubits);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (auto &a : state.mutable_amplitudes()) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        a = Complex(re, im);
    }
    state.normalize();
    return state;
}

std::vector<double> random_circuit_params(const AnsatzConfig &config, Rng &rng) {
    std::vector<double> theta(param_count(config));
    for (auto &t : theta) {
        t = sample_angle(rng);
    }
    return theta;
}

StateVector perturb_amplitudes(const StateVector &base, double sigma, Rng &rng) {
    StateVector out = base;
    if (sigma > 0) {
        for (auto &a : out.mutable_amplitudes()) {
            const double re = sample_normal(rng, 0.0, sigma);
            const double im = sample_normal(rng, 0.0, sigma);
            a += Complex(re, im);
        }
    }
    out.normalize();
    return out;
}

RealSource::RealSource(SourceKind kind, StateVector reference) : kind_(kind), reference_(std::move(reference)) {
}

RealSource RealSource::fixed_circuit(Circuit circuit, std::vector<double> theta_star) {
    RealSource src(SourceKind::FixedCircuit, run_circuit(circuit, theta_star));
    src.circuit_ = std::move(circuit);
    src.param_pool_.push_back(std::move(theta_star));
    return src;
}

RealSource RealSource::param_family(
    Circuit circuit, std::vector<double> theta_star, double sigma, std::size_t pool_size, std::uint64_t seed) {
    if (!(sigma >= 0) || pool_size < 1) {
        throw std::invalid_argument("param_family needs sigma >= 0 and pool_size >= 1");
    }
    RealSource src(SourceKind::ParamFamily, run_circuit(circuit, theta_star));
    src.sigma_ = sigma;
    Rng rng(seed);
    src.param_pool_.reserve(pool_size);
    for (std::size_t i = 0; i < pool_size; ++i) {
        std::vector<double> theta = theta_star;
        for (auto &t : theta) {
            t += sample_normal(rng, 0.0, sigma);
        }
        src.param_pool_.push_back(std::move(theta));
    }
    src.circuit_ = std::move(circuit);
    return src;
}

RealSource RealSource::state_family(StateVector base, double sigma, std::size_t pool_size, std::uint64_t seed) {
    if (!(sigma >= 0) || pool_size < 1) {
        throw std::invalid_argument("state_family needs sigma >= 0 and pool_size >= 1");
    }
    RealSource src(SourceKind::StateFamily, base);
    src.sigma_ = sigma;
    Rng rng(seed);
    src.state_pool_.reserve(pool_size);
    for (std::size_t i = 0; i < pool_size; ++i) {
        src.state_pool_.push_back(perturb_amplitudes(base, sigma, rng));
    }
    return src;
}

std::size_t RealSource::pool_size() const noexcept {
    return kind_ == SourceKind::StateFamily ? state_pool_.size() : param_pool_.size();
}

std::size_t RealSource::draw_index(Rng &rng) const {
    const std::size_t n = pool_size();
    if (n == 1) {
        return 0;
    }
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

StateVector RealSource::prepare(std::size_t index, const NoiseModel &noise, Rng &rng) const {
    if (index >= pool_size()) {
        throw std::out_of_range("real-source pool index out of range");
    }
    if (kind_ == SourceKind::StateFamily) {
        return state_pool_[index];
    }
    if (noise.enabled && noise.apply_to_real) {
        return run_circuit(*circuit_, param_pool_[index], noise, rng);
    }
    return run_circuit(*circuit_, param_pool_[index]);
}

StateVector RealSource::draw_real(Rng &rng) const {
    return prepare(draw_index(rng), NoiseModel::disabled(), rng);
}

StateVector RealSource::draw_real(Rng &rng, const NoiseModel &noise) const {
    return prepare(draw_index(rng), noise, rng);
}

StateVector parse_state_json(std::string_view text, std::ostream *warnings) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        throw std::runtime_error(std::string("state file: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("num_qubits") || !doc.contains("amplitudes") ||
        !doc["num_qubits"].is_number_integer() || !doc["amplitudes"].is_array()) {
        throw std::runtime_error("state file: expected {\"num_qubits\": int, \"amplitudes\": [[re, im], ...]}");
    }
    const int n = doc["num_qubits"].get<int>();
    if (n < 1 || n > kMaxQubits) {
        throw std::runtime_error("state file: num_qubits out of range");
    }
    const auto &arr = doc["amplitudes"];
    if (arr.size() != (std::size_t{1} << n)) {
        throw std::runtime_error("state file: expected 2^num_qubits amplitudes");
    }
    std::vector<Complex> amps;
    amps.reserve(arr.size());
    for (const auto &pair : arr) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
            throw std::runtime_error("state file: each amplitude must be [re, im]");
        }
        amps.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    StateVector state = StateVector::from_amplitudes(std::move(amps));
    const double norm = std::sqrt(state.norm_squared());
    if (!std::isfinite(norm) || norm == 0) {
        throw std::runtime_error("state file: amplitudes have zero or non-finite norm");
    }
    if (std::abs(norm - 1.0) > 1e-6 && warnings) {
        *warnings << "warning: state norm " << norm << " renormalized to 1\n";
    }
    state.normalize();
    return state;
}

StateVector load_state_file(const std::filesystem::path &path, std::ostream *warnings) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open state file " + path.string());
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_state_json(buf.str(), warnings);
}

}  // namespace eqgan
