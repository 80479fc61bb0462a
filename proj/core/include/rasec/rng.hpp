// SPDX-License-Identifier: Apache-2.0
//
// rasec: secrecy-rate optimization for rotatable-antenna MIMO wiretap channels
// Copyright (C) 2026 the rasec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <cstdint>

namespace rasec {

// Named substreams of the scenario generator. Each consumer owns a stream,
// so adding draws to one stage never perturbs the draws of another.
enum class Stream : std::uint64_t {
    kNodePlacement = 1,
    kClusterGeometry = 2,
    kClusterPhase = 3,
    kOrientationInit = 4,
    kRandomBaseline = 5,
    kTest = 100,
};

// Counter-based generator: output i is a SplitMix64-style hash of
// (seed, stream, i). Stateless apart from the counter, identical sequences
// on every platform, and cheap to fork per stream.
class CounterRng {
  public:
    CounterRng(std::uint64_t seed, Stream stream)
        : CounterRng(seed, static_cast<std::uint64_t>(stream)) {}

    CounterRng(std::uint64_t seed, std::uint64_t stream) {
        base_ = mix(seed + 0x9e3779b97f4a7c15ULL) ^ mix(stream * 0xbf58476d1ce4e5b9ULL + 0x94d049bb133111ebULL);
    }

    std::uint64_t next_u64() { return mix(base_ + (++counter_) * 0x9e3779b97f4a7c15ULL); }

    // Uniform double in [0, 1) with 53 significant bits.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

    std::uint64_t counter() const { return counter_; }

  private:
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ULL;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebULL;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t base_ = 0;
    std::uint64_t counter_ = 0;
};

}  // namespace rasec
