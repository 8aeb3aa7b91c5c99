// SPDX-License-Identifier: Apache-2.0
//
// rissec - secrecy and outage analysis for RIS-aided underlay cognitive radio
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

// Counter-based random streams: every Monte-Carlo trial owns a generator
// derived from (seed, trial_index), so results do not depend on scheduling.

#include <cstdint>
#include <limits>

namespace rissec {

/// SplitMix64 as a UniformRandomBitGenerator for the <random> distributions.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t state) : state_(state) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

/// Stream key for one trial; two finalizer rounds decorrelate adjacent
/// seeds and indices.
inline std::uint64_t trial_stream_key(std::uint64_t seed, std::uint64_t trial_index) {
    SplitMix64 a(seed);
    const std::uint64_t k = a() ^ (trial_index * 0xD1B54A32D192ED03ULL);
    SplitMix64 b(k);
    return b();
}

inline SplitMix64 trial_rng(std::uint64_t seed, std::uint64_t trial_index) {
    return SplitMix64(trial_stream_key(seed, trial_index));
}

} // namespace rissec
