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

#ifndef EQGAN_PAULI_SUM_H
#define EQGAN_PAULI_SUM_H

#include <Eigen/Dense>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eqgan/state_vector.h"

namespace eqgan {

/// coeff * P, with pauli[k] acting on qubit k.
struct PauliTerm {
    double coeff;
    std::string pauli;
};

/// Real-weighted sum of Pauli strings. Duplicate strings are merged on insertion.
class PauliSum {
   public:
    explicit PauliSum(int num_qubits);

    /// Throws std::invalid_argument on a wrong-length or non-IXYZ string, or a non-finite coefficient.
    void add_term(double coeff, std::string_view pauli);

    int num_qubits() const noexcept { return num_qubits_; }
    const std::vector<PauliTerm> &terms() const noexcept { return terms_; }

    std::string name;
    std::optional<double> bond_length_angstrom;

   private:
    int num_qubits_;
    std::vector<PauliTerm> terms_;
};

/// Parses the Hamiltonian JSON document
///   {"name": str, "num_qubits": int, "bond_length_angstrom": num?, "terms": [{"coeff": num, "pauli": str}]}
/// Throws std::runtime_error on malformed JSON or schema violations.
PauliSum parse_hamiltonian(std::string_view json_text);
PauliSum load_hamiltonian(const std::filesystem::path &path);

/// <state|P|state> for a single Pauli string.
Complex pauli_expectation(const StateVector &state, std::string_view pauli);

/// sum_j c_j <state|P_j|state>.
double expectation(const StateVector &state, const PauliSum &h);

/// Dense 2^N x 2^N matrix, little-endian basis.
Eigen::MatrixXcd dense_matrix(const PauliSum &h);

inline constexpr int kMaxSpectrumQubits = 8;

/// The k lowest eigenvalues, ascending. Throws std::invalid_argument above
/// kMaxSpectrumQubits or when k exceeds the dimension.
std::vector<double> exact_spectrum(const PauliSum &h, std::size_t k);

}  // namespace eqgan

#endif
