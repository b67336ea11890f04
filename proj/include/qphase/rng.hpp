// Copyright 2026 The qphase Authors
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

#pragma once

#include <cstdint>

namespace qphase {

/// SplitMix64 counter generator.
///
/// Output i of a stream is mix(seed + (i + 1) * 0x9E3779B97F4A7C15), so the
/// sequence is fully determined by the 64-bit seed and identical on every
/// platform. Independent streams for parallel tasks come from `split`, which
/// derives a new seed from the parent seed and a stream id without consuming
/// parent output.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) noexcept : state_(seed), seed_(seed) {}

    static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t next() noexcept {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, bound). Bias is below 2^-64 * bound.
    std::uint64_t below(std::uint64_t bound) noexcept {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

    Rng split(std::uint64_t stream) const noexcept {
        return Rng(mix(seed_ ^ mix(stream + 0x632BE59BD9B4E019ULL)));
    }

    std::uint64_t seed() const noexcept { return seed_; }

  private:
    std::uint64_t state_;
    std::uint64_t seed_;
};

}  // namespace qphase
