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

#ifndef EQGAN_SUMMARY_H
#define EQGAN_SUMMARY_H

#include <cstddef>
#include <span>
#include <vector>

namespace eqgan {

inline constexpr double kHistogramBinWidth = 0.01;
inline constexpr std::size_t kHistogramBins = 100;

/// Distribution summary of per-run fidelities over [0, 1].
struct SummaryStats {
    std::size_t count = 0;
    double mean = 0;
    double mode = 0;               // center of the most populated bin
    std::size_t mode_bin = 0;
    std::vector<double> bin_edges; // kHistogramBins + 1 edges
    std::vector<std::size_t> counts;
    double min = 0;
    double max = 0;
};

/// Bin index for a value in [0, 1]; 1.0 lands in the last bin.
std::size_t histogram_bin(double value);

/// Mean plus a 0.01-wide histogram over [0, 1]. Ties for the mode go to the
/// higher bin. Throws std::invalid_argument on empty input.
SummaryStats summarize(std::span<const double> values);

/// Sample standard error (n - 1 denominator); 0 for fewer than two values.
double standard_error(std::span<const double> values);

}  // namespace eqgan

#endif
