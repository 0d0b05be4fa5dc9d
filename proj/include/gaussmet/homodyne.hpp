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

#ifndef GAUSSMET_HOMODYNE_HPP
#define GAUSSMET_HOMODYNE_HPP

#include <cstdint>
#include <vector>

#include "gaussmet/covariance.hpp"
#include "gaussmet/estimation.hpp"
#include "gaussmet/model.hpp"
#include "gaussmet/modes.hpp"

namespace gaussmet {

/// Balanced homodyne detection with the local oscillator in the detection
/// mode. All intensities are in normalized photon-number units.
struct HomodyneConfig {
    ModeVector lo_mode;            // default (empty): the detection mode v1
    double lo_photons = 1e6;       // N0
    double relative_phase = 0.0;   // 0 reads Y+, pi/2 reads Y-
    std::int64_t n_samples = 1;
    std::uint64_t seed = 0;
};

struct EstimationReport {
    double p_true = 0.0;
    double estimator_mean = 0.0;
    double estimator_variance = 0.0;  // per shot, unbiased (n - 1)
    double crb = 0.0;
    double variance_over_crb_sq = 0.0;
    std::int64_t n_samples = 0;
};

/// Samples of the intensity-difference observable
///   I- = sqrt(N0) (cos(theta) (2 sqrt(N) p_true / p_c + dY+_1)
///                  + sin(theta) (2 sqrt(N) c11 + dY-_1)),
/// where (dY+_1, dY-_1) are the detection-mode quadrature fluctuations drawn
/// jointly from `cov` (given in the working basis) re-expressed in the
/// detection basis. Valid in the linearized regime |p_true| << p_c.
std::vector<double> intensity_difference_samples(const ParameterizedModel& model,
                                                 const DetectionBasis& detection,
                                                 const CovarianceMatrix& cov,
                                                 const HomodyneConfig& config,
                                                 double p_true, int threads = 0);

/// Serial reference path; bit-identical to the parallel one.
std::vector<double> intensity_difference_samples_serial(const ParameterizedModel& model,
                                                        const DetectionBasis& detection,
                                                        const CovarianceMatrix& cov,
                                                        const HomodyneConfig& config,
                                                        double p_true);

/// Per-shot inversion p_hat = p_c I- / (2 sqrt(N N0)) and its sample
/// statistics against the CRB for the same state. Needs n >= 2 for the
/// variance.
EstimationReport unbiased_estimator(const std::vector<double>& samples, double photons,
                                    double lo_photons, double p_c, double p_true,
                                    double crb);

/// Standard quantum limit read off the detection quadrature alone:
/// sigma_y1 / (2 sqrt(N) |du|) = p_c sigma_y1 / (2 sqrt(N)). Coincides with
/// the CRB exactly when the detection mode is uncorrelated from the rest.
double p_sql(double sigma_y1, double photons, double du_norm);

}  // namespace gaussmet

#endif  // GAUSSMET_HOMODYNE_HPP
