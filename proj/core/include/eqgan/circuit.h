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

#ifndef EQGAN_CIRCUIT_H
#define EQGAN_CIRCUIT_H

#include <cstddef>
#include <vector>

#include "eqgan/gate.h"

namespace eqgan {

/// Ordered gate list over a fixed register, with symbolic parameter slots.
///
/// `param_count()` is one past the largest slot referenced (or larger, after
/// `reserve_slots`), so every referenced slot is in range by construction.
class Circuit {
   public:
    explicit Circuit(int num_qubits);

    /// Appends `op` after checking its qubits fit the register.
    Circuit &append(const GateOp &op);

    /// Grows param_count to at least `count`.
    void reserve_slots(std::size_t count);

    int num_qubits() const noexcept { return num_qubits_; }
    std::size_t param_count() const noexcept { return param_count_; }
    const std::vector<GateOp> &ops() const noexcept { return ops_; }
    std::size_t size() const noexcept { return ops_.size(); }
    bool empty() const noexcept { return ops_.empty(); }

    bool operator==(const Circuit &) const = default;

   private:
    int num_qubits_;
    std::size_t param_count_ = 0;
    std::vector<GateOp> ops_;
};

}  // namespace eqgan

#endif
