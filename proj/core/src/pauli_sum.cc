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

#include "eqgan/pauli_sum.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace eqgan {

namespace {

struct PauliMasks {
    std::size_t flip = 0;   // X or Y
    std::size_t phase = 0;  // Z or Y
    int num_y = 0;
};

PauliMasks masks_of(std::string_view pauli) {
    PauliMasks m;
    for (std::size_t q = 0; q < pauli.size(); ++q) {
        const std::size_t bit = std::size_t{1} << q;
        switch (pauli[q]) {
            case 'X':
                m.flip |= bit;
                break;
            case 'Y':
                m.flip |= bit;
                m.phase |= bit;
                ++m.num_y;
                break;
            case 'Z':
                m.phase |= bit;
                break;
            default:
                break;
        }
    }
    return m;
}

// i^k
Complex i_power(int k) {
    switch (k & 3) {
        case 0:
            return {1, 0};
        case 1:
            return {0, 1};
        case 2:
            return {-1, 0};
        default:
            return {0, -1};
    }
}

}  // namespace

PauliSum::PauliSum(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw std::invalid_argument("Pauli sum qubit count out of range");
    }
}

void PauliSum::add_term(double coeff, std::string_view pauli) {
    if (!std::isfinite(coeff)) {
        throw std::invalid_argument("Pauli coefficient must be finite");
    }
    if (pauli.size() != static_cast<std::size_t>(num_qubits_)) {
        throw std::invalid_argument(
            "Pauli string '" + std::string(pauli) + "' has length " + std::to_string(pauli.size()) + ", expected " +
            std::to_string(num_qubits_));
    }
    if (pauli.find_first_not_of("IXYZ") != std::string_view::npos) {
        throw std::invalid_argument("Pauli string '" + std::string(pauli) + "' has letters outside IXYZ");
    }
    for (auto &t : terms_) {
        if (t.pauli == pauli) {
            t.coeff += coeff;
            return;
        }
    }
    terms_.push_back({coeff, std::string(pauli)});
}

PauliSum parse_hamiltonian(std::string_view json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception &e) {
        throw std::runtime_error(std::string("Hamiltonian: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("num_qubits") || !doc["num_qubits"].is_number_integer() ||
        !doc.contains("terms") || !doc["terms"].is_array()) {
        throw std::runtime_error("Hamiltonian: expected an object with integer num_qubits and a terms array");
    }
    try {
        PauliSum h(doc["num_qubits"].get<int>());
        if (doc.contains("name") && doc["name"].is_string()) {
            h.name = doc["name"].get<std::string>();
        }
        if (doc.contains("bond_length_angstrom")) {
            if (!doc["bond_length_angstrom"].is_number()) {
                throw std::invalid_argument("bond_length_angstrom must be a number");
            }
            h.bond_length_angstrom = doc["bond_length_angstrom"].get<double>();
        }
        for (const auto &term : doc["terms"]) {
            if (!term.is_object() || !term.contains("coeff") || !term["coeff"].is_number() ||
                !term.contains("pauli") || !term["pauli"].is_string()) {
                throw std::invalid_argument("each term needs a numeric coeff and a string pauli");
            }
            h.add_term(term["coeff"].get<double>(), term["pauli"].get<std::string>());
        }
        return h;
    } catch (const std::invalid_argument &e) {
        throw std::runtime_error(std::string("Hamiltonian: ") + e.what());
    }
}

PauliSum load_hamiltonian(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open Hamiltonian file " + path.string());
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_hamiltonian(buf.str());
}

Complex pauli_expectation(const StateVector &state, std::string_view pauli) {
    if (pauli.size() != static_cast<std::size_t>(state.num_qubits())) {
        throw std::invalid_argument("Pauli string length does not match the state");
    }
    const PauliMasks m = masks_of(pauli);
    const auto amps = state.amplitudes();
    Complex total = 0;
    for (std::size_t k = 0; k < amps.size(); ++k) {
        const double sign = (std::popcount(k & m.phase) & 1) ? -1.0 : 1.0;
        total += std::conj(amps[k ^ m.flip]) * sign * amps[k];
    }
    return i_power(m.num_y) * total;
}

double expectation(const StateVector &state, const PauliSum &h) {
    if (state.num_qubits() != h.num_qubits()) {
        throw std::invalid_argument("state and Hamiltonian qubit counts differ");
    }
    Complex total = 0;
    double scale = 1.0;
    for (const auto &t : h.terms()) {
        total += t.coeff * pauli_expectation(state, t.pauli);
        scale += std::abs(t.coeff);
    }
    if (std::abs(total.imag()) > 1e-8 * scale * std::max(1.0, state.norm_squared())) {
        throw std::logic_error("Pauli-sum expectation has a non-negligible imaginary part");
    }
    return total.real();
}

Eigen::MatrixXcd dense_matrix(const PauliSum &h) {
    const Eigen::Index dim = Eigen::Index{1} << h.num_qubits();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto &t : h.terms()) {
        const PauliMasks pm = masks_of(t.pauli);
        const Complex base = t.coeff * i_power(pm.num_y);
        for (Eigen::Index k = 0; k < dim; ++k) {
            const auto col = static_cast<std::size_t>(k);
            const double sign = (std::popcount(col & pm.phase) & 1) ? -1.0 : 1.0;
            m(static_cast<Eigen::Index>(col ^ pm.flip), k) += base * sign;
        }
    }
    return m;
}

std::vector<double> exact_spectrum(const PauliSum &h, std::size_t k) {
    if (h.num_qubits() > kMaxSpectrumQubits) {
        throw std::invalid_argument(
            "exact_spectrum supports at most " + std::to_string(kMaxSpectrumQubits) + " qubits");
    }
    const std::size_t dim = std::size_t{1} << h.num_qubits();
    if (k > dim) {
        throw std::invalid_argument("requested more eigenvalues than the Hilbert-space dimension");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(dense_matrix(h), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigensolver failed");
    }
    const auto &values = solver.eigenvalues();
    return std::vector<double>(values.data(), values.data() + k);
}

}  // namespace eqgan
