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

#include "eqgan/summary.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace eqgan {

std::size_t histogram_bin(double value) {
    // The 1e-9 nudge keeps values such as 0.29 (0.289999... * 100) in their own bin.
    const double scaled = std::floor(value / kHistogramBinWidth + 1e-9);
    if (!(scaled > 0)) {
        return 0;
    }
    return std::min(static_cast<std::size_t>(scaled), kHistogramBins - 1);
}

SummaryStats summarize(std::span<const double> values) {
    if (values.empty()) {
        throw std::invalid_argument("cannot summarize zero records");
    }
    SummaryStats s;
    s.count = values.size();
    s.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
    s.min = *std::min_element(values.begin(), values.end());
    s.max = *std::max_element(values.begin(), values.end());
    s.counts.assign(kHistogramBins, 0);
    s.bin_edges.resize(kHistogramBins + 1);
    for (std::size_t b = 0; b <= kHistogramBins; ++b) {
        s.bin_edges[b] = static_cast<double>(b) * kHistogramBinWidth;
    }
    for (double v : values) {
        ++s.counts[histogram_bin(v)];
    }
    for (std::size_t b = 0; b < kHistogramBins; ++b) {
        if (s.counts[b] >= s.counts[s.mode_bin]) {
            s.mode_bin = b;
        }
    }
    s.mode = (static_cast<double>(s.mode_bin) + 0.5) * kHistogramBinWidth;
    return s;
}

double standard_error(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n < 2) {
        return 0.0;
    }
    const double mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(n);
    double ss = 0;
    for (double v : values) {
        ss += (v - mean) * (v - mean);
    }
    return std::sqrt(ss / static_cast<double>(n - 1)) / std::sqrt(static_cast<double>(n));
}

}  // namespace eqgan
