// Copyright 2026 The gaussmet Authors
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

#ifndef GAUSSMET_RNG_HPP
#define GAUSSMET_RNG_HPP

#include <cstdint>
#include <random>

namespace gaussmet {

/// Samples per random substream. Monte Carlo kernels assign one engine per
/// block of this many samples, keyed by (seed, block index), so the output
/// stream is a pure function of the seed no matter how blocks are scheduled
/// across workers.
inline constexpr long kSampleBlock = 1024;

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Engine for substream `stream` of the run keyed by `seed`.
inline std::mt19937_64 substream_engine(std::uint64_t seed, std::uint64_t stream) {
    return std::mt19937_64(splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x51ab5ULL)));
}

}  // namespace gaussmet

#endif  // GAUSSMET_RNG_HPP
