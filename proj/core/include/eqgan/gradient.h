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

#ifndef EQGAN_GRADIENT_H
#define EQGAN_GRADIENT_H

#include <functional>
#include <span>
#include <string_view>
#include <optional>
#include <vector>

#include "eqgan/circuit.h"

namespace eqgan {

enum class GradientMode { ParameterShift, FiniteDifference };

std::string_view gradient_mode_name(GradientMode mode);
std::optional<GradientMode> parse_gradient_mode(std::string_view name);

/// How one parameter slot may be differentiated.
enum class SlotRule {
    ParameterShift,   // single use in a gate whose generator has eigenvalue gap 1
    FiniteDifference,
};

/// Rule per slot of `circuit`. RX/RY/RZ/PCZ slots used exactly once get
/// ParameterShift; PCNOT/PISWAP slots and shared slots fall back to finite
/// differences. Throws std::invalid_argument for a slot no op references.
std::vector<SlotRule> slot_rules(const Circuit &circuit);

inline constexpr double kFiniteDifferenceStep = 1e-4;

using CostFn = std::function<double(std::span<const double>)>;

/// Gradient of `cost` at `params`.
///
/// ParameterShift mode: (f(t + pi/2) - f(t - pi/2)) / 2 on ParameterShift slots,
/// central differences with h = 1e-4 on the rest. FiniteDifference mode uses
/// central differences everywhere. `cost` must be deterministic (freeze any noise
/// before calling).
std::vector<double> gradient(
    const CostFn &cost, std::span<const double> params, std::span<const SlotRule> rules, GradientMode mode);

}  // namespace eqgan

#endif
