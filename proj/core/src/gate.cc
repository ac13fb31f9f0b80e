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

#include "eqgan/gate.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace eqgan {

namespace {

struct GateInfo {
    GateKind kind;
    std::string_view name;
    int arity;
    bool takes_angle;
    bool diagonal;
};

constexpr std::array<GateInfo, 10> kGates{{
    {GateKind::H, "H", 1, false, false},
    {GateKind::RX, "RX", 1, true, false},
    {GateKind::RY, "RY", 1, true, false},
    {GateKind::RZ, "RZ", 1, true, true},
    {GateKind::CNOT, "CNOT", 2, false, false},
    {GateKind::CZ, "CZ", 2, false, true},
    {GateKind::ISWAP, "ISWAP", 2, false, false},
    {GateKind::PCNOT, "PCNOT", 2, true, false},
    {GateKind::PCZ, "PCZ", 2, true, true},
    {GateKind::PISWAP, "PISWAP", 2, true, false},
}};

const GateInfo &info(GateKind kind) {
    return kGates[static_cast<std::size_t>(kind)];
}

void check_qubits(GateKind kind, int q0, int q1) {
    if (q0 < 0) {
        throw std::invalid_argument(std::string(gate_name(kind)) + ": negative qubit index");
    }
    if (gate_arity(kind) == 1) {
        if (q1 != -1) {
            throw std::invalid_argument(std::string(gate_name(kind)) + " acts on exactly one qubit");
        }
        return;
    }
    if (q1 < 0) {
        throw std::invalid_argument(std::string(gate_name(kind)) + " needs two qubit indices");
    }
    if (q0 == q1) {
        throw std::invalid_argument(std::string(gate_name(kind)) + ": qubit indices must be distinct");
    }
}

constexpr Complex kI{0.0, 1.0};

}  // namespace

std::string_view gate_name(GateKind kind) {
    return info(kind).name;
}

std::optional<GateKind> parse_gate_kind(std::string_view name) {
    for (const auto &g : kGates) {
        if (g.name == name) {
            return g.kind;
        }
    }
    return std::nullopt;
}

int gate_arity(GateKind kind) {
    return info(kind).arity;
}

bool gate_takes_angle(GateKind kind) {
    return info(kind).takes_angle;
}

bool gate_is_diagonal(GateKind kind) {
    return info(kind).diagonal;
}

GateKind parametrized_equivalent(GateKind kind) {
    switch (kind) {
        case GateKind::CNOT:
            return GateKind::PCNOT;
        case GateKind::CZ:
            return GateKind::PCZ;
        case GateKind::ISWAP:
            return GateKind::PISWAP;
        default:
            return kind;
    }
}

double nominal_angle(GateKind fixed_kind) {
    switch (fixed_kind) {
        case GateKind::CNOT:
        case GateKind::CZ:
            return std::numbers::pi;
        case GateKind::ISWAP:
            return std::numbers::pi / 2;
        default:
            throw std::invalid_argument(std::string(gate_name(fixed_kind)) + " has no parametrized counterpart");
    }
}

GateOp GateOp::fixed(GateKind kind, int q0, int q1) {
    check_qubits(kind, q0, q1);
    if (gate_takes_angle(kind)) {
        throw std::invalid_argument(std::string(gate_name(kind)) + " requires an angle");
    }
    return GateOp{kind, {q0, q1}, std::monostate{}};
}

GateOp GateOp::bound(GateKind kind, double angle, int q0, int q1) {
    check_qubits(kind, q0, q1);
    if (!gate_takes_angle(kind)) {
        throw std::invalid_argument(std::string(gate_name(kind)) + " takes no angle");
    }
    return GateOp{kind, {q0, q1}, angle};
}

GateOp GateOp::symbolic(GateKind kind, std::size_t slot, int q0, int q1) {
    check_qubits(kind, q0, q1);
    if (!gate_takes_angle(kind)) {
        throw std::invalid_argument(std::string(gate_name(kind)) + " takes no angle");
    }
    return GateOp{kind, {q0, q1}, ParamSlot{slot}};
}

std::optional<std::size_t> GateOp::slot() const {
    if (const auto *s = std::get_if<ParamSlot>(&param)) {
        return s->index;
    }
    return std::nullopt;
}

std::optional<double> GateOp::bound_angle() const {
    if (const auto *a = std::get_if<double>(&param)) {
        return *a;
    }
    return std::nullopt;
}

Matrix2 single_qubit_matrix(GateKind kind, double angle) {
    const double c = std::cos(angle / 2);
    const double s = std::sin(angle / 2);
    switch (kind) {
        case GateKind::H: {
            const double r = std::numbers::sqrt2 / 2;
            return {r, r, r, -r};
        }
        case GateKind::RX:
            return {c, -kI * s, -kI * s, c};
        case GateKind::RY:
            return {c, -s, s, c};
        case GateKind::RZ:
            return {std::polar(1.0, -angle / 2), 0.0, 0.0, std::polar(1.0, angle / 2)};
        default:
            throw std::invalid_argument(std::string(gate_name(kind)) + " is not a single-qubit gate");
    }
}

Matrix4 two_qubit_matrix(GateKind kind, double angle) {
    Matrix4 m{};
    auto at = [&m](int row, int col) -> Complex & { return m[static_cast<std::size_t>(row * 4 + col)]; };
    switch (kind) {
        case GateKind::CNOT:
            // Local index = control + 2 * target; flip target when control is set.
            at(0, 0) = 1;
            at(2, 2) = 1;
            at(1, 3) = 1;
            at(3, 1) = 1;
            return m;
        case GateKind::PCNOT: {
            const Complex phase = std::polar(1.0, angle / 2);
            const double c = std::cos(angle / 2);
            const double s = std::sin(angle / 2);
            at(0, 0) = 1;
            at(2, 2) = 1;
            at(1, 1) = phase * c;
            at(1, 3) = phase * (-kI * s);
            at(3, 1) = phase * (-kI * s);
            at(3, 3) = phase * c;
            return m;
        }
        case GateKind::CZ:
            at(0, 0) = 1;
            at(1, 1) = 1;
            at(2, 2) = 1;
            at(3, 3) = -1;
            return m;
        case GateKind::PCZ:
            at(0, 0) = 1;
            at(1, 1) = 1;
            at(2, 2) = 1;
            at(3, 3) = std::polar(1.0, angle);
            return m;
        case GateKind::ISWAP:
            at(0, 0) = 1;
            at(3, 3) = 1;
            at(1, 2) = kI;
            at(2, 1) = kI;
            return m;
        case GateKind::PISWAP: {
            const double c = std::cos(angle);
            const double s = std::sin(angle);
            at(0, 0) = 1;
            at(3, 3) = 1;
            at(1, 1) = c;
            at(2, 2) = c;
            at(1, 2) = kI * s;
            at(2, 1) = kI * s;
            return m;
        }
        default:
            throw std::invalid_argument(std::string(gate_name(kind)) + " is not a two-qubit gate");
    }
}

}  // namespace eqgan
