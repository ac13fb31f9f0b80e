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

#ifndef EQGAN_GATE_H
#define EQGAN_GATE_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>

#include "eqgan/state_vector.h"

namespace eqgan {

/// Gate set of the simulator.
///
/// Rotations follow RP(t) = exp(-i t P / 2). The parametrized two-qubit gates
/// reduce to their fixed counterparts at a nominal angle:
///   PCZ(t)    = diag(1, 1, 1, e^{i t}),                 PCZ(pi)      == CZ
///   PISWAP(t) = exp(i t/2 (XX + YY)),                    PISWAP(pi/2) == ISWAP
///   PCNOT(t)  = controlled[e^{i t/2} RX(t)],             PCNOT(pi)    == CNOT
enum class GateKind : std::uint8_t { H, RX, RY, RZ, CNOT, CZ, ISWAP, PCNOT, PCZ, PISWAP };

std::string_view gate_name(GateKind kind);
std::optional<GateKind> parse_gate_kind(std::string_view name);

int gate_arity(GateKind kind);
bool gate_takes_angle(GateKind kind);
bool gate_is_diagonal(GateKind kind);

/// Parametrized counterpart of a fixed entangler (CNOT -> PCNOT etc.); identity on parametrized kinds.
GateKind parametrized_equivalent(GateKind kind);

/// Angle at which the parametrized counterpart equals the fixed gate.
double nominal_angle(GateKind fixed_kind);

/// Symbolic reference into a circuit's parameter vector.
struct ParamSlot {
    std::size_t index;
    bool operator==(const ParamSlot &) const = default;
};

/// Either no parameter (fixed gates), a bound angle in radians, or a symbolic slot.
using GateParam = std::variant<std::monostate, double, ParamSlot>;

/// One gate application. For CNOT/PCNOT qubits[0] is the control and qubits[1] the target.
struct GateOp {
    GateKind kind;
    std::array<int, 2> qubits;
    GateParam param;

    static GateOp fixed(GateKind kind, int q0, int q1 = -1);
    static GateOp bound(GateKind kind, double angle, int q0, int q1 = -1);
    static GateOp symbolic(GateKind kind, std::size_t slot, int q0, int q1 = -1);

    int arity() const { return gate_arity(kind); }
    std::optional<std::size_t> slot() const;
    std::optional<double> bound_angle() const;

    bool operator==(const GateOp &) const = default;
};

using Matrix2 = std::array<Complex, 4>;
using Matrix4 = std::array<Complex, 16>;

/// Row-major 2x2 unitary of a single-qubit gate. `angle` is ignored for H.
Matrix2 single_qubit_matrix(GateKind kind, double angle = 0.0);

/// Row-major 4x4 unitary of a two-qubit gate in the local basis
/// index = bit(qubits[0]) + 2 * bit(qubits[1]).
Matrix4 two_qubit_matrix(GateKind kind, double angle = 0.0);

}  // namespace eqgan

#endif
