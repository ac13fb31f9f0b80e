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

#ifndef EQGAN_ADAM_H
#define EQGAN_ADAM_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace eqgan {

enum class Direction { Descend, Ascend };

struct AdamState {
    std::vector<double> first_moment;
    std::vector<double> second_moment;
    std::int64_t step_count = 0;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;

    static AdamState zeros(std::size_t size);
};

/// One bias-corrected Adam update of `params` in place. Ascend negates the gradient.
void adam_step(std::vector<double> &params, std::span<const double> grads, AdamState &state, double lr, Direction direction);

}  // namespace eqgan

#endif
