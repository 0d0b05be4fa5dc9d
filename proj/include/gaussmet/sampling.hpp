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

#ifndef GAUSSMET_SAMPLING_HPP
#define GAUSSMET_SAMPLING_HPP

#include <Eigen/Core>
#include <cstdint>

#include "gaussmet/state.hpp"

namespace gaussmet {

// Quadrature sampling from the Wigner density. Draws are organized in blocks
// of kSampleBlock samples; block b uses the engine substream_engine(seed, b)
// and fills rows [b*kSampleBlock, ...) of the output. The result is therefore
// a pure function of (state, n, seed): the OpenMP kernel and the serial
// reference produce bit-identical matrices for any worker count.

/// n i.i.d. draws, one sample per row (row length 2M). OpenMP over blocks.
/// `threads` <= 0 picks the default from GAUSSMET_THREADS / the machine.
Eigen::MatrixXd sample(const GaussianState& state, long n, std::uint64_t seed,
                       int threads = 0);

/// Serial reference implementation of sample(); kept for testing and
/// benchmarking against the parallel kernel.
Eigen::MatrixXd sample_serial(const GaussianState& state, long n, std::uint64_t seed);

}  // namespace gaussmet

#endif  // GAUSSMET_SAMPLING_HPP
