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

#include "eqgan/adam.h"

#include <cmath>
#include <stdexcept>

namespace eqgan {

AdamState AdamState::zeros(std::size_t size) {
    AdamState s;
    s.first_moment.assign(size, 0.0);
    s.second_moment.assign(size, 0.0);
    return s;
}

void adam_step(std::vector<double> &params, std::span<const double> grads, AdamState &state, double lr, Direction direction) {
    if (grads.size() != params.size() || state.first_moment.size() != params.size() ||
        state.second_moment.size() != params.size()) {
        throw std::invalid_argument("Adam: parameter, gradient and moment lengths differ");
    }
    ++state.step_count;
    const double sign = direction == Direction::Ascend ? -1.0 : 1.0;
    const double t = static_cast<double>(state.step_count);
    const double correction1 = 1.0 - std::pow(state.beta1, t);
    const double correction2 = 1.0 - std::pow(state.beta2, t);
    for (std::size_t k = 0; k < params.size(); ++k) {
        const double g = sign * grads[k];
        state.first_moment[k] = state.beta1 * state.first_moment[k] + (1.0 - state.beta1) * g;
        state.second_moment[k] = state.beta2 * state.second_moment[k] + (1.0 - state.beta2) * g * g;
        const double m_hat = state.first_moment[k] / correction1;
        const double v_hat = state.second_moment[k] / correction2;
        params[k] -= lr * m_hat / (std::sqrt(v_hat) + state.epsilon);
    }
}

}  // namespace eqgan
