// Copyright 2026 The qclock Authors
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

#ifndef QCLOCK_RNG_HPP
#define QCLOCK_RNG_HPP

#include <cstdint>
#include <limits>

namespace qclock {

/// SplitMix64 stream. Satisfies UniformRandomBitGenerator.
///
/// Child streams are derived from (seed, index) by hashing, so trial i of a
/// campaign always sees the same numbers no matter how trials are scheduled.
class Rng {
   public:
    using result_type = std::uint64_t;

    explicit constexpr Rng(std::uint64_t seed) : state_(seed) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    constexpr result_type operator()() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    /// Uniform double in [0, 1) built from the top 53 bits.
    constexpr double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    constexpr double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Independent stream for sub-task `index`.
    static constexpr Rng derive(std::uint64_t seed, std::uint64_t index) {
        return Rng(mix(seed ^ mix(index + 0x632BE59BD9B4E019ULL)));
    }

    constexpr Rng split(std::uint64_t index) const { return derive(state_, index); }

   private:
    static constexpr std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

}  // namespace qclock

#endif  // QCLOCK_RNG_HPP
