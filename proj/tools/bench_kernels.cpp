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

// Benchmark of the Monte Carlo sampling kernels: serial reference vs the
// OpenMP block kernel, verifying that both produce bit-identical output.
// Usage: bench_kernels [n_samples] [threads]

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>

#include "gaussmet/parallel.hpp"
#include "gaussmet/resource.hpp"
#include "gaussmet/sampling.hpp"
#include "gaussmet/state.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    long n = argc > 1 ? std::atol(argv[1]) : (1L << 21);
    int threads = argc > 2 ? std::atoi(argv[2]) : gaussmet::thread_count();
    if (n < 1 || threads < 1) {
        std::cerr << "usage: bench_kernels [n_samples > 0] [threads > 0]\n";
        return 2;
    }

    // A non-trivial 4-mode state: squeezed vacua scrambled by a random coupler.
    std::mt19937_64 rng(12345);
    gaussmet::GaussianState state = gaussmet::apply_passive_transform(
        gaussmet::squeezed_vacuum_state({0.3, 0.6, 0.9}, 4), gaussmet::haar_unitary(4, rng));

    const std::uint64_t seed = 2026;
    auto t0 = std::chrono::steady_clock::now();
    Eigen::MatrixXd serial = gaussmet::sample_serial(state, n, seed);
    double t_serial = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    Eigen::MatrixXd parallel = gaussmet::sample(state, n, seed, threads);
    double t_parallel = seconds_since(t0);

    bool identical = serial == parallel;

    std::cout << "kernel,samples,threads,seconds,msamples_per_s\n";
    std::cout << "serial," << n << ",1," << t_serial << "," << (n / t_serial / 1e6) << "\n";
    std::cout << "openmp," << n << "," << threads << "," << t_parallel << ","
              << (n / t_parallel / 1e6) << "\n";
    std::cout << "speedup = " << (t_serial / t_parallel) << "\n";
    std::cout << "bit_identical = " << (identical ? "yes" : "no") << "\n";
    return identical ? 0 : 1;
}
