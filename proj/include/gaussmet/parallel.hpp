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

#ifndef GAUSSMET_PARALLEL_HPP
#define GAUSSMET_PARALLEL_HPP

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gaussmet {

/// Worker count for the OpenMP kernels.
///
/// Resolution order: explicit `requested` argument (> 0), then the
/// GAUSSMET_THREADS environment variable, then the machine parallelism
/// reported by the OpenMP runtime. Every kernel shards work into fixed-size
/// blocks with per-block random substreams, so the numerical result is
/// identical for any value returned here.
inline int thread_count(int requested = 0) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("GAUSSMET_THREADS")) {
        try {
            int n = std::stoi(env);
            if (n > 0) return n;
        } catch (...) {
            // fall through to the runtime default
        }
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace gaussmet

#endif  // GAUSSMET_PARALLEL_HPP
