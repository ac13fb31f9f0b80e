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

#include "eqgan/gradient.h"

#include <numbers>
#include <stdexcept>
#include <string>

namespace eqgan {

std::string_view gradient_mode_name(GradientMode mode) {
    return mode == GradientMode::ParameterShift ? "parameter_shift" : "finite_difference";
}

std::optional<GradientMode> parse_gradient_mode(std::string_view name) {
    if (name == "parameter_shift") {
        return GradientMode::ParameterShift;
    }
    if (name == "finite_difference") {
        return GradientMode::FiniteDifference;
    }
    return std::nullopt;
}

std::vector<SlotRule> slot_rules(const Circuit &circuit) {
    std::vector<int> uses(circuit.param_count(), 0);
    std::vector<SlotRule> rules(circuit.param_count(), SlotRule::ParameterShift);
    for (const auto &op : circuit.ops()) {
        const auto slot = op.slot();
        if (!slot) {
            continue;
        }
        ++uses[*slot];
        switch (op.kind) {
            case GateKind::RX:
            case GateKind::RY:
            case GateKind::RZ:
            case GateKind::PCZ:
                break;
            default:
                rules[*slot] = SlotRule::FiniteDifference;
        }
    }
    for (std::size_t s = 0; s < uses.size(); ++s) {
        if (uses[s] == 0) {
            throw std::invalid_argument("parameter slot " + std::to_string(s) + " is not used by any gate");
        }
        if (uses[s] > 1) {
            rules[s] = SlotRule::FiniteDifference;
        }
    }
    return rules;
}

std::vector<double> gradient(
    const CostFn &cost, std::span<const double> params, std::span<const SlotRule> rules, GradientMode mode) {
    if (rules.size() != params.size()) {
        throw std::invalid_argument("slot rule count does not match parameter count");
    }
    std::vector<double> shifted(params.begin(), params.end());
    std::vector<double> grad(params.size());
    for (std::size_t k = 0; k < params.size(); ++k) {
        const bool shift_rule = mode == GradientMode::ParameterShift && rules[k] == SlotRule::ParameterShift;
        const double h = shift_rule ? std::numbers::pi / 2 : kFiniteDifferenceStep;
        shifted[k] = params[k] + h;
        const double plus = cost(shifted);
        shifted[k] = params[k] - h;
        const double minus = cost(shifted);
        shifted[k] = params[k];
        grad[k] = shift_rule ? 0.5 * (plus - minus) : (plus - minus) / (2 * h);
    }
    return grad;
}

}  // namespace eqgan
