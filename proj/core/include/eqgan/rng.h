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

#ifndef EQGAN_RNG_H
#define EQGAN_RNG_H

#include <cstdint>
#include <numbers>
#include <random>
#include <string_view>

namespace eqgan {

using Rng = std::mt19937_64;

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// FNV-1a, used to turn stream names into stable integers.
constexpr std::uint64_t hash_name(std::string_view name) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : name) {
        h = (h ^ static_cast<unsigned char>(c)) * 0x100000001b3ULL;
    }
    return h;
}

/// Independent sub-seed for (stream, index) under a master seed.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::string_view stream, std::uint64_t index = 0) {
    return mix64(mix64(master ^ hash_name(stream)) + index);
}

/// N(mu, sigma^2) draw that tolerates sigma == 0.
inline double sample_normal(Rng &rng, double mu, double sigma) {
    if (sigma == 0.0) {
        return mu;
    }
    return std::normal_distribution<double>(mu, sigma)(rng);
}

/// Uniform angle in [0, 2pi). Guards against the distribution rounding up to the bound.
inline double sample_angle(Rng &rng) {
    constexpr double kTwoPi = 2 * std::numbers::pi;
    const double a = std::uniform_real_distribution<double>(0.0, kTwoPi)(rng);
    return a < kTwoPi ? a : 0.0;
}

}  // namespace eqgan

#endif
