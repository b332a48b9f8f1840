// Copyright 2026 The MUB Shadow Authors
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

#ifndef MUBSHADOW_RNG_HPP
#define MUBSHADOW_RNG_HPP

#include <cstdint>
#include <limits>

namespace mubshadow {

/// SplitMix64 generator keyed by a (seed, counter, lane) triple.
///
/// Every shot of an acquisition draws from its own stream derived from the
/// master seed and the shot index, so results do not depend on how shots are
/// distributed over worker threads. Satisfies UniformRandomBitGenerator.
class SplitMix64 {
   public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t state) : state_(state) {}

    /// Stream for (seed, index, lane). Distinct triples give decorrelated streams.
    static SplitMix64 stream(std::uint64_t seed, std::uint64_t index, std::uint64_t lane = 0) {
        std::uint64_t k = mix(seed ^ 0x6a09e667f3bcc909ULL);
        k = mix(k ^ (index + 0x9e3779b97f4a7c15ULL));
        k = mix(k ^ (lane * 0xbf58476d1ce4e5b9ULL + 0x94d049bb133111ebULL));
        return SplitMix64(k);
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound). Rejection sampling, so exactly uniform.
    std::uint64_t uniform_below(std::uint64_t bound) {
        if (bound <= 1) {
            return 0;
        }
        const std::uint64_t threshold = (0 - bound) % bound;
        while (true) {
            const std::uint64_t r = (*this)();
            if (r >= threshold) {
                return r % bound;
            }
        }
    }

    bool coin() { return ((*this)() >> 63) != 0; }

   private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

/// Lanes separating the independent random choices made inside one shot.
enum class ShotLane : std::uint64_t { rotation = 1, branch = 2, outcome = 3 };

inline SplitMix64 shot_stream(std::uint64_t seed, std::uint64_t shot, ShotLane lane) {
    return SplitMix64::stream(seed, shot, static_cast<std::uint64_t>(lane));
}

}  // namespace mubshadow

#endif
