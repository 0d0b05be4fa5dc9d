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

#ifndef GAUSSMET_TESTS_SUPPORT_FISHER_ORACLE_HPP
#define GAUSSMET_TESTS_SUPPORT_FISHER_ORACLE_HPP

#include <cstdint>

#include "gaussmet/model.hpp"
#include "gaussmet/sampling.hpp"
#include "gaussmet/state.hpp"

namespace gaussmet::testing {

// Brute-force Fisher information - E[d^2/dp^2 log W_p(Y)] with Y drawn from
// the state at p0: Monte Carlo average of a central second difference of the
// log density. Independent of the analytic route, which it cross-checks.
inline double fisher_oracle(const ParameterizedModel& model, long n, std::uint64_t seed,
                            double h = 1e-2) {
    GaussianState center = model.state_at(model.p0);
    WignerEvaluator log_w0(center);
    WignerEvaluator log_w_plus(model.state_at(model.p0 + h));
    WignerEvaluator log_w_minus(model.state_at(model.p0 - h));

    Eigen::MatrixXd draws = sample(center, n, seed);
    double acc = 0.0;
    for (long i = 0; i < n; ++i) {
        Eigen::VectorXd y = draws.row(i).transpose();
        acc += log_w_plus(y) - 2.0 * log_w0(y) + log_w_minus(y);
    }
    return -acc / (static_cast<double>(n) * h * h);
}

}  // namespace gaussmet::testing

#endif  // GAUSSMET_TESTS_SUPPORT_FISHER_ORACLE_HPP
