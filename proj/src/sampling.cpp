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

#include "gaussmet/sampling.hpp"

#include <Eigen/Cholesky>
#include <random>

#include "gaussmet/errors.hpp"
#include "gaussmet/parallel.hpp"
#include "gaussmet/rng.hpp"

namespace gaussmet {

namespace {

// Fills rows [first, last) of `out`, the rows owned by `block`.
void fill_block(const Eigen::MatrixXd& chol_l, const Eigen::VectorXd& mean,
                std::uint64_t seed, long block, long first, long last,
                Eigen::MatrixXd& out) {
    const int dim = static_cast<int>(mean.size());
    std::mt19937_64 engine = substream_engine(seed, static_cast<std::uint64_t>(block));
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::VectorXd z(dim);
    for (long i = first; i < last; ++i) {
        for (int k = 0; k < dim; ++k) z(k) = normal(engine);
        out.row(i) = (mean + chol_l * z).transpose();
    }
}

Eigen::MatrixXd cholesky_factor(const GaussianState& state) {
    Eigen::LLT<Eigen::MatrixXd> llt(state.cov.matrix());
    if (llt.info() != Eigen::Success)
        throw NumericalError("sampling needs a positive definite covariance");
    return llt.matrixL();
}

}  // namespace

Eigen::MatrixXd sample(const GaussianState& state, long n, std::uint64_t seed, int threads) {
    if (n < 1) throw ValidationError("sample count must be >= 1");
    const Eigen::MatrixXd l = cholesky_factor(state);
    Eigen::MatrixXd out(n, state.cov.side());
    const long blocks = (n + kSampleBlock - 1) / kSampleBlock;
    const int nt = thread_count(threads);
#pragma omp parallel for schedule(static) num_threads(nt)
    for (long b = 0; b < blocks; ++b) {
        const long first = b * kSampleBlock;
        const long last = std::min(n, first + kSampleBlock);
        fill_block(l, state.mean, seed, b, first, last, out);
    }
    return out;
}

Eigen::MatrixXd sample_serial(const GaussianState& state, long n, std::uint64_t seed) {
    if (n < 1) throw ValidationError("sample count must be >= 1");
    const Eigen::MatrixXd l = cholesky_factor(state);
    Eigen::MatrixXd out(n, state.cov.side());
    const long blocks = (n + kSampleBlock - 1) / kSampleBlock;
    for (long b = 0; b < blocks; ++b) {
        const long first = b * kSampleBlock;
        const long last = std::min(n, first + kSampleBlock);
        fill_block(l, state.mean, seed, b, first, last, out);
    }
    return out;
}

}  // namespace gaussmet
